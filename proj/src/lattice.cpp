#include "orbiqc/lattice.hpp"

#include <algorithm>
#include <optional>

namespace orbiqc {

long norm(LatticeKind kind, LatticePoint p)
{
    return kind == LatticeKind::eisenstein ? p.a * p.a - p.a * p.b + p.b * p.b : p.a * p.a + p.b * p.b;
}

long isqrt(long n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt of a negative number");
    if (n < 2)
        return n;
    long x = n;
    long y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

std::vector<LatticePoint> solutions_of_norm(LatticeKind kind, long n)
{
    if (n < 0)
        throw std::invalid_argument("norm must be nonnegative");
    std::vector<LatticePoint> out;
    if (kind == LatticeKind::eisenstein) {
        // b^2 - a b + (a^2 - n) = 0 has discriminant 4n - 3a^2.
        for (long a = -isqrt(4 * n / 3); 3 * a * a <= 4 * n; ++a) {
            long disc = 4 * n - 3 * a * a;
            long s = isqrt(disc);
            if (s * s != disc || ((a + s) & 1) != 0)
                continue;
            out.push_back({a, (a - s) / 2});
            if (s != 0)
                out.push_back({a, (a + s) / 2});
        }
    } else {
        for (long a = -isqrt(n); a * a <= n; ++a) {
            long rest = n - a * a;
            long s = isqrt(rest);
            if (s * s != rest)
                continue;
            out.push_back({a, -s});
            if (s != 0)
                out.push_back({a, s});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void require_nonzero(LatticePoint p)
{
    if (p.a == 0 && p.b == 0)
        throw std::invalid_argument("the zero point is the constant map and has no nonconstant classification");
}

long mod(long x, long m) { return ((x % m) + m) % m; }

Insertion twisted(Orbifold x, int point, int k) { return Insertion::twisted(x, point, k); }

} // namespace

InsertionTriple classify_333(LatticePoint p)
{
    require_nonzero(p);
    constexpr auto X = Orbifold::p333;
    if (mod(p.a + p.b, 3) == 0)
        return {twisted(X, 1, 1), twisted(X, 1, 1), twisted(X, 1, 1)};
    return {twisted(X, 1, 1), twisted(X, 2, 1), twisted(X, 3, 1)};
}

InsertionTriple classify_236(LatticePoint p)
{
    require_nonzero(p);
    constexpr auto X = Orbifold::p236;
    long n = norm(LatticeKind::eisenstein, p);
    Insertion at_z1 = n % 2 == 1 ? twisted(X, 1, 1) : twisted(X, 3, 3);
    Insertion at_z2;
    switch (n % 3) {
    case 1:
        at_z2 = twisted(X, 2, 1);
        break;
    case 0:
        at_z2 = twisted(X, 3, 2);
        break;
    default:
        throw std::logic_error("Eisenstein norm congruent to 2 mod 3");
    }
    return {at_z1, at_z2, twisted(X, 3, 1)};
}

InsertionTriple classify_244(LatticePoint p)
{
    require_nonzero(p);
    constexpr auto X = Orbifold::p244;
    switch (norm(LatticeKind::gaussian, p) % 4) {
    case 1:
        return {twisted(X, 1, 1), twisted(X, 2, 1), twisted(X, 3, 1)};
    case 0:
        return {twisted(X, 2, 2), twisted(X, 2, 1), twisted(X, 2, 1)};
    case 2:
        return {twisted(X, 3, 2), twisted(X, 2, 1), twisted(X, 2, 1)};
    default:
        throw std::logic_error("Gaussian norm congruent to 3 mod 4");
    }
}

InsertionTriple rhombus_triple(RhombusClass cls)
{
    constexpr auto X = Orbifold::p236;
    if (cls == RhombusClass::h8)
        return {twisted(X, 3, 1), twisted(X, 3, 1), twisted(X, 3, 4)};
    return {twisted(X, 2, 2), twisted(X, 3, 1), twisted(X, 3, 1)};
}

RhombusClassification classify_366_rhombus(LatticePoint p)
{
    long n = norm(LatticeKind::eisenstein, p);
    RhombusClass cls = n % 3 == 0 ? RhombusClass::h8 : RhombusClass::h9;
    return {cls, rhombus_triple(cls), 2 * n};
}

// Geometric route

namespace {

CoverPoint multiply(LatticeKind kind, LatticePoint lambda, const CoverPoint& v)
{
    Rat a(lambda.a), b(lambda.b);
    if (kind == LatticeKind::eisenstein) {
        // tau^2 = -tau - 1
        return {a * v.x - b * v.y, a * v.y + b * v.x - b * v.y};
    }
    return {a * v.x - b * v.y, a * v.y + b * v.x};
}

// Residue of m*r modulo m*1 when m*r is an integer, i.e. which 1/m-coset r is in.
std::optional<long> scaled_residue(const Rat& r, long m)
{
    Rat s = r * m;
    if (!is_integer(s))
        return std::nullopt;
    Int q;
    mpz_fdiv_r_ui(q.get_mpz_t(), s.get_num_mpz_t(), static_cast<unsigned long>(m));
    return q.get_si();
}

// Fibers for P333: w1 = Z<1,tau>, w2 = (1+2tau)/3 + Z<1,tau>, w3 = (2+tau)/3 + Z<1,tau>.
std::optional<int> fiber_333(const CoverPoint& z)
{
    auto rx = scaled_residue(z.x, 3), ry = scaled_residue(z.y, 3);
    if (!rx || !ry)
        return std::nullopt;
    if (*rx == 0 && *ry == 0)
        return 1;
    if (*rx == 1 && *ry == 2)
        return 2;
    if (*rx == 2 && *ry == 1)
        return 3;
    return std::nullopt;
}

// Fibers for P236: w3 = Z<1,tau>; w1 = half-lattice points off Z<1,tau>;
// w2 = triangle centres (2+tau)/3 + Z<1,tau> and (1+2tau)/3 + Z<1,tau>.
std::optional<int> fiber_236(const CoverPoint& z)
{
    if (is_integer(z.x) && is_integer(z.y))
        return 3;
    if (scaled_residue(z.x, 2) && scaled_residue(z.y, 2))
        return 1;
    auto rx = scaled_residue(z.x, 3), ry = scaled_residue(z.y, 3);
    if (rx && ry && ((*rx == 1 && *ry == 2) || (*rx == 2 && *ry == 1)))
        return 2;
    return std::nullopt;
}

// Fibers for P244: w2 = Z<1,i>; w1 = (a+bi)/2 with exactly one of a,b odd;
// w3 = (a+bi)/2 with both odd.
std::optional<int> fiber_244(const CoverPoint& z)
{
    auto rx = scaled_residue(z.x, 2), ry = scaled_residue(z.y, 2);
    if (!rx || !ry)
        return std::nullopt;
    if (*rx == 0 && *ry == 0)
        return 2;
    if (*rx == 1 && *ry == 1)
        return 3;
    return 1;
}

struct Marking {
    const char* label;
    CoverPoint v;
    int domain_order;
};

struct CoverLayout {
    LatticeKind kind;
    Insertion at_origin;
    std::vector<Marking> markings;
    std::optional<int> (*fiber)(const CoverPoint&);
};

CoverLayout layout(Orbifold x)
{
    switch (x) {
    case Orbifold::p333:
        return {LatticeKind::eisenstein,
                Insertion::twisted(x, 1, 1),
                {{"(1+2tau)/3", {frac(1, 3), frac(2, 3)}, 3}, {"(2+tau)/3", {frac(2, 3), frac(1, 3)}, 3}},
                fiber_333};
    case Orbifold::p236:
        return {LatticeKind::eisenstein,
                Insertion::twisted(x, 3, 1),
                {{"(2+tau)/3", {frac(2, 3), frac(1, 3)}, 3}, {"(1+tau)/2", {frac(1, 2), frac(1, 2)}, 2}},
                fiber_236};
    case Orbifold::p244:
        return {LatticeKind::gaussian,
                Insertion::twisted(x, 2, 1),
                {{"1/2", {frac(1, 2), Rat(0)}, 2}, {"(1+i)/2", {frac(1, 2), frac(1, 2)}, 4}},
                fiber_244};
    }
    throw std::logic_error("unknown orbifold");
}

std::string describe(LatticePoint p) { return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")"; }

MarkingImage locate(const CoverLayout& lay, LatticePoint p, const Marking& m)
{
    CoverPoint img = multiply(lay.kind, p, m.v);
    auto fib = lay.fiber(img);
    if (!fib)
        throw ClassificationFailure("lambda=" + describe(p) + " sends " + m.label + " to " + to_string(img.x) + " + " +
                                    to_string(img.y) + "*omega, which lies in no fiber");
    return {m.label, img, *fib, std::nullopt};
}

} // namespace

GeometricClassification geometric_classify(Orbifold x, LatticePoint p)
{
    require_nonzero(p);
    CoverLayout lay = layout(x);
    std::vector<MarkingImage> images;
    for (const auto& m : lay.markings) {
        MarkingImage img = locate(lay, p, m);
        // A domain point of order m landing on a target point of order n picks
        // up the twisted sector D^{(n/m)/n}.
        int n = isotropy_orders(x)[static_cast<std::size_t>(img.fiber - 1)];
        if (n % m.domain_order != 0)
            throw ClassificationFailure("order-" + std::to_string(m.domain_order) + " marking mapped onto an order-" +
                                        std::to_string(n) + " point");
        img.insertion = Insertion::twisted(x, img.fiber, n / m.domain_order);
        images.push_back(img);
    }
    InsertionTriple triple(lay.at_origin, *images[0].insertion, *images[1].insertion);
    return {std::move(images), triple};
}

GeometricClassification geometric_classify_rhombus(LatticePoint p)
{
    CoverLayout lay{LatticeKind::eisenstein,
                    Insertion::twisted(Orbifold::p236, 3, 1),
                    {{"(2+tau)/3", {frac(2, 3), frac(1, 3)}, 6}, {"(1-tau)/3", {frac(1, 3), frac(-1, 3)}, 6}},
                    fiber_236};
    if (p.a == 0 && p.b == 0)
        return {{}, rhombus_triple(RhombusClass::h8)};
    std::vector<MarkingImage> images;
    for (const auto& m : lay.markings)
        images.push_back(locate(lay, p, m));
    if (images[0].fiber != images[1].fiber)
        throw ClassificationFailure("rhombus vertices of " + describe(p) + " land in different fibers");
    RhombusClass cls;
    if (images[0].fiber == 3)
        cls = RhombusClass::h8;
    else if (images[0].fiber == 2)
        cls = RhombusClass::h9;
    else
        throw ClassificationFailure("rhombus vertex of " + describe(p) + " lands on an order-2 point");
    return {std::move(images), rhombus_triple(cls)};
}

} // namespace orbiqc
