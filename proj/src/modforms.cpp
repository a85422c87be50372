#include "orbiqc/modforms.hpp"

#include <numeric>

#include "orbiqc/lattice.hpp"

namespace orbiqc {

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// prod_{n>=1} (1 - q^n), exact below q^order.
QSeries euler_product(long order)
{
    if (order <= 0)
        return QSeries::zero(1, order);
    std::vector<Rat> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (long n = 1; n < order; ++n)
        for (long k = order - 1; k >= n; --k)
            if (sgn(c[static_cast<std::size_t>(k - n)]) != 0)
                c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - n)];
    return QSeries::from_coefficients(std::move(c), order);
}

void require_positive_order(long order)
{
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
}

} // namespace

long EtaQuotientSpec::valuation_24ths() const
{
    long v = 0;
    for (const auto& f : factors)
        v += f.scale * f.exponent;
    return v;
}

QSeries eta_series(long order)
{
    require_positive_order(order);
    QSeries p = euler_product(order);
    return shift(p.with_grid(24), 1).truncated(order);
}

QSeries eta_quotient(const EtaQuotientSpec& spec, long order)
{
    for (const auto& f : spec.factors)
        if (f.scale < 1)
            throw std::invalid_argument("eta factor scale must be >= 1");
    long v = spec.valuation_24ths();
    long c = std::gcd(v, 24L);
    long grid = 24 / c;
    // Unit-part precision K: v/24 + k < order for all k < K.
    long unit_order = ceil_div(24 * order - v, 24);
    if (unit_order <= 0)
        return QSeries::zero(grid, grid * order);

    QSeries unit = QSeries::constant(1, unit_order);
    for (const auto& f : spec.factors) {
        if (f.exponent == 0)
            continue;
        QSeries p = substitute_power(euler_product(ceil_div(unit_order, f.scale)), f.scale).truncated(unit_order);
        unit = unit * pow(p, f.exponent);
    }
    return shift(unit.with_grid(grid), v / c).truncated(order);
}

QSeries eta_quotient_integral(const EtaQuotientSpec& spec, long order)
{
    if (spec.valuation_24ths() % 24 != 0)
        throw NonIntegralValuation("eta quotient has prefactor q^(" + std::to_string(spec.valuation_24ths()) +
                                   "/24), not an integer power of q");
    return eta_quotient(spec, order);
}

QSeries theta2(long order)
{
    require_positive_order(order);
    long trunc = 4 * order;
    std::vector<Rat> c;
    for (long k = 1; k * k < trunc; k += 2) {
        c.resize(static_cast<std::size_t>(k * k));
        c[static_cast<std::size_t>(k * k - 1)] = 2;
    }
    return QSeries(4, 1, std::move(c), trunc);
}

QSeries theta3(long order)
{
    require_positive_order(order);
    std::vector<Rat> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (long n = 1; n * n < order; ++n)
        c[static_cast<std::size_t>(n * n)] = 2;
    return QSeries::from_coefficients(std::move(c), order);
}

namespace {

QSeries theta_of(LatticeKind kind, long order)
{
    require_positive_order(order);
    std::vector<Rat> c(static_cast<std::size_t>(order));
    for (long n = 0; n < order; ++n)
        c[static_cast<std::size_t>(n)] = static_cast<long>(solutions_of_norm(kind, n).size());
    return QSeries::from_coefficients(std::move(c), order);
}

} // namespace

QSeries theta_F(long order) { return theta_of(LatticeKind::eisenstein, order); }
QSeries theta_G(long order) { return theta_of(LatticeKind::gaussian, order); }

QSeries ResidueDecomposition::sum() const
{
    auto it = parts.begin();
    QSeries total = it->second;
    for (++it; it != parts.end(); ++it)
        total = total + it->second;
    return total;
}

ResidueDecomposition residue_decompose(const QSeries& s, long modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("modulus must be >= 1");
    auto integral = s.grid() == 1 ? std::optional<QSeries>(s) : s.coarsened(1);
    if (!integral)
        throw GridMismatch("residue decomposition needs integer exponents; series has grid " +
                           std::to_string(s.grid()));
    ResidueDecomposition out{modulus, {}};
    const auto& c = integral->coeffs();
    long lo = integral->min_exp();
    for (long r = 0; r < modulus; ++r) {
        std::vector<Rat> part(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            long e = lo + static_cast<long>(k);
            if (((e % modulus) + modulus) % modulus == r)
                part[k] = c[k];
        }
        out.parts.emplace(r, QSeries(1, lo, std::move(part), integral->trunc()));
    }
    return out;
}

QSeries f0_eta(long order) { return eta_quotient_integral({{{9, 3}, {3, -1}}}, order); }

QSeries f1_eta(long order)
{
    // (eta(q)/eta(q^9))^3 starts at q^-1, which costs two orders of precision
    // once multiplied against f0 (valuation 1).
    QSeries ratio = eta_quotient_integral({{{1, 3}, {9, -3}}}, order + 2);
    QSeries bracket = QSeries::constant(1, order + 2) + scale(ratio, frac(1, 3));
    return (bracket * f0_eta(order + 2)).truncated(order);
}

QSeries f1_eta_simplified(long order)
{
    return f0_eta(order) + scale(eta_quotient_integral({{{1, 3}, {3, -1}}}, order), frac(1, 3));
}

SeriesComparison check_theta_identity_F(long order)
{
    QSeries t3 = theta3(order);
    QSeries t2 = theta2(order);
    QSeries rhs = t3 * substitute_power(t3, 3) + t2 * substitute_power(t2, 3);
    return compare(theta_F(order), rhs);
}

SeriesComparison check_theta_identity_G(long order)
{
    QSeries t3 = theta3(order);
    return compare(theta_G(order), t3 * t3);
}

SeriesComparison check_eta_f0(long order)
{
    auto parts = residue_decompose(theta_F(order), 3).parts;
    return compare(scale(parts.at(1), frac(1, 6)), f0_eta(order));
}

SeriesComparison check_eta_f1(long order)
{
    auto parts = residue_decompose(theta_F(order), 3).parts;
    return compare(scale(parts.at(0), frac(1, 3)), f1_eta(order));
}

} // namespace orbiqc
