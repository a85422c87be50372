#include "orbiqc/gw.hpp"

#include <algorithm>
#include <map>

#include "orbiqc/modforms.hpp"

namespace orbiqc {

std::string_view name(DomainType d)
{
    switch (d) {
    case DomainType::p236:
        return "P1(2,3,6)";
    case DomainType::p333:
        return "P1(3,3,3)";
    case DomainType::p366:
        return "P1(3,6,6)";
    case DomainType::p244:
        return "P1(2,4,4)";
    case DomainType::two_point:
        return "P1(m,m)";
    }
    throw std::logic_error("unknown domain");
}

std::string_view name(Status s)
{
    switch (s) {
    case Status::proven:
        return "proven";
    case Status::conjectural:
        return "conjectural";
    case Status::zero:
        return "zero";
    }
    throw std::logic_error("unknown status");
}

std::string to_string(const CorrelatorKey& key) { return std::string(name(key.orbifold)) + to_string(key.insertions); }

namespace {

// All insertions of x: the unit, then twisted sectors by point and numerator.
std::vector<Insertion> sectors(Orbifold x, bool with_unit)
{
    std::vector<Insertion> out;
    if (with_unit)
        out.push_back(Insertion::unit());
    auto orders = isotropy_orders(x);
    for (int p = 1; p <= 3; ++p)
        for (int k = 1; k < orders[static_cast<std::size_t>(p - 1)]; ++k)
            out.push_back(Insertion::twisted(x, p, k));
    return out;
}

void require_admissible(const CorrelatorKey& key)
{
    if (key.insertions.age_sum() != 1)
        throw InadmissibleKey("ages of " + to_string(key) + " sum to " + to_string(key.insertions.age_sum()) +
                              ", not 1");
}

} // namespace

DomainType domain_of(const CorrelatorKey& key)
{
    require_admissible(key);
    std::array<int, 3> o{};
    for (std::size_t i = 0; i < 3; ++i)
        o[i] = key.insertions.items()[i].local_order();
    std::sort(o.begin(), o.end());
    if (o[0] == 1)
        return DomainType::two_point;
    if (o == std::array<int, 3>{2, 3, 6})
        return DomainType::p236;
    if (o == std::array<int, 3>{3, 3, 3})
        return DomainType::p333;
    if (o == std::array<int, 3>{3, 6, 6})
        return DomainType::p366;
    if (o == std::array<int, 3>{2, 4, 4})
        return DomainType::p244;
    throw std::logic_error("no domain orbi-sphere with local orders " + std::to_string(o[0]) + "," +
                           std::to_string(o[1]) + "," + std::to_string(o[2]));
}

std::vector<AdmissibleTriple> admissible_triples(Orbifold x)
{
    std::vector<AdmissibleTriple> out;
    for (bool with_unit : {false, true}) {
        auto s = sectors(x, with_unit);
        std::size_t first = 0;
        std::size_t count = with_unit ? 1 : s.size();
        for (std::size_t i = first; i < count; ++i)
            for (std::size_t j = with_unit ? 1 : i; j < s.size(); ++j)
                for (std::size_t k = j; k < s.size(); ++k) {
                    CorrelatorKey key{x, InsertionTriple(s[i], s[j], s[k])};
                    if (key.insertions.age_sum() == 1)
                        out.push_back({key, domain_of(key)});
                }
    }
    return out;
}

Rat classical_term(const CorrelatorKey& key)
{
    require_admissible(key);
    const auto& it = key.insertions.items();
    if (it[0].is_unit() || it[0].point != it[1].point || it[1].point != it[2].point)
        return 0;
    return frac(1, it[0].n);
}

Rat potential_prefactor(const CorrelatorKey& key)
{
    const auto& it = key.insertions.items();
    long denom = 1;
    std::size_t i = 0;
    while (i < 3) {
        std::size_t j = i;
        long run = 1;
        while (j + 1 < 3 && it[j + 1] == it[i]) {
            ++j;
            run *= static_cast<long>(j - i + 1);
        }
        denom *= run;
        i = j + 1;
    }
    return frac(1, denom);
}

namespace {

enum class Lattice { none, F, G };

// coefficient * (theta series of the lattice restricted to exponents
// = residue mod modulus), evaluated at q^doubling.
struct Formula {
    Lattice lattice = Lattice::none;
    long modulus = 1;
    long residue = 0;
    Rat factor;
    long doubling = 1;
    bool optional_constant = false; // constant kept only with include_degree_zero
    bool conjectural = false;
};

struct Definition {
    std::string name;
    Orbifold orbifold;
    std::vector<InsertionTriple> members; // members[0] is the representative
    Formula formula;
};

using Sector = std::pair<int, int>; // (point, k)

InsertionTriple triple(Orbifold x, Sector a, Sector b, Sector c)
{
    return {Insertion::twisted(x, a.first, a.second), Insertion::twisted(x, b.first, b.second),
            Insertion::twisted(x, c.first, c.second)};
}

Formula from_F(long modulus, long residue, Rat factor, long doubling = 1, bool conjectural = false)
{
    return {Lattice::F, modulus, residue, std::move(factor), doubling, false, conjectural};
}

Formula from_G(long residue, bool optional_constant = false)
{
    return {Lattice::G, 4, residue, frac(1, 4), 1, optional_constant, false};
}

const std::vector<Definition>& definitions()
{
    static const std::vector<Definition> defs = [] {
        std::vector<Definition> d;
        constexpr auto A = Orbifold::p333;
        d.push_back({"f0", A, {triple(A, {1, 1}, {2, 1}, {3, 1})}, from_F(3, 1, frac(1, 6))});
        d.push_back({"f1",
                     A,
                     {triple(A, {1, 1}, {1, 1}, {1, 1}), triple(A, {2, 1}, {2, 1}, {2, 1}),
                      triple(A, {3, 1}, {3, 1}, {3, 1})},
                     from_F(3, 0, frac(1, 3))});

        constexpr auto B = Orbifold::p236;
        d.push_back({"h0", B, {triple(B, {1, 1}, {2, 1}, {3, 1})}, from_F(6, 1, frac(1, 6))});
        d.push_back({"h1", B, {triple(B, {3, 3}, {2, 1}, {3, 1})}, from_F(6, 4, frac(1, 6))});
        d.push_back({"h2", B, {triple(B, {1, 1}, {3, 2}, {3, 1})}, from_F(6, 3, frac(1, 6))});
        d.push_back({"h3", B, {triple(B, {3, 3}, {3, 2}, {3, 1})}, from_F(6, 0, frac(1, 6))});
        d.push_back({"h4", B, {triple(B, {3, 2}, {3, 2}, {3, 2})}, from_F(3, 0, frac(1, 6), 2)});
        d.push_back({"h5", B, {triple(B, {2, 1}, {3, 2}, {3, 2})}, Formula{}});
        d.push_back({"h6", B, {triple(B, {2, 1}, {2, 1}, {3, 2})}, from_F(3, 1, frac(1, 6), 2)});
        d.push_back({"h7", B, {triple(B, {2, 1}, {2, 1}, {2, 1})}, from_F(3, 0, frac(1, 3), 2)});
        d.push_back({"h8", B, {triple(B, {3, 1}, {3, 1}, {3, 4})}, from_F(3, 0, frac(1, 6), 2, true)});
        d.push_back({"h9", B, {triple(B, {2, 2}, {3, 1}, {3, 1})}, from_F(3, 1, frac(1, 6), 2, true)});

        // w2 and w3 are exchanged by a symmetry of P244.
        constexpr auto C = Orbifold::p244;
        d.push_back({"g0", C, {triple(C, {1, 1}, {2, 1}, {2, 1}), triple(C, {1, 1}, {3, 1}, {3, 1})}, Formula{}});
        d.push_back({"g1", C, {triple(C, {1, 1}, {2, 1}, {3, 1})}, from_G(1)});
        d.push_back({"g2",
                     C,
                     {triple(C, {2, 2}, {2, 1}, {2, 1}), triple(C, {3, 2}, {3, 1}, {3, 1})},
                     from_G(0, true)});
        d.push_back(
            {"g3", C, {triple(C, {2, 2}, {3, 1}, {3, 1}), triple(C, {3, 2}, {2, 1}, {2, 1})}, from_G(2)});
        d.push_back({"g4", C, {triple(C, {2, 2}, {2, 1}, {3, 1}), triple(C, {3, 2}, {3, 1}, {2, 1})}, Formula{}});
        return d;
    }();
    return defs;
}

const Definition* find_definition(const CorrelatorKey& key)
{
    for (const auto& def : definitions())
        if (def.orbifold == key.orbifold &&
            std::find(def.members.begin(), def.members.end(), key.insertions) != def.members.end())
            return &def;
    return nullptr;
}

const Definition* find_definition(std::string_view name)
{
    for (const auto& def : definitions())
        if (def.name == name)
            return &def;
    return nullptr;
}

QSeries evaluate(const Formula& f, long order, Options opts)
{
    if (f.lattice == Lattice::none)
        return QSeries::zero(1, order);
    long base_order = (order + f.doubling - 1) / f.doubling;
    QSeries theta = f.lattice == Lattice::F ? theta_F(base_order) : theta_G(base_order);
    QSeries part = residue_decompose(theta, f.modulus).parts.at(f.residue);
    if (f.optional_constant && !opts.include_degree_zero && part.min_exp() == 0) {
        std::vector<Rat> c = part.coeffs();
        c[0] = 0;
        part = QSeries(1, 0, std::move(c), part.trunc());
    }
    return substitute_power(scale(part, f.factor), f.doubling).truncated(order);
}

Status status_of(const Formula& f)
{
    if (f.lattice == Lattice::none)
        return Status::zero;
    return f.conjectural ? Status::conjectural : Status::proven;
}

} // namespace

CorrelatorSeries correlator(const CorrelatorKey& key, long order, Options opts)
{
    require_admissible(key);
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    const Definition* def = find_definition(key);
    if (!def)
        return {key, to_string(key.insertions), QSeries::zero(1, order), Status::zero};
    return {key, def->name, evaluate(def->formula, order, opts), status_of(def->formula)};
}

std::vector<CatalogEntry> potential_cubic_table(Orbifold x, long order, Options opts)
{
    std::vector<CatalogEntry> out;
    for (const auto& def : definitions()) {
        if (def.orbifold != x)
            continue;
        std::vector<CorrelatorKey> members;
        for (const auto& t : def.members)
            members.push_back({x, t});
        CorrelatorKey rep = members.front();
        out.push_back({correlator(rep, order, opts), std::move(members), potential_prefactor(rep), domain_of(rep)});
    }
    return out;
}

std::vector<std::string> catalog_names(Orbifold x)
{
    std::vector<std::string> out;
    for (const auto& def : definitions())
        if (def.orbifold == x)
            out.push_back(def.name);
    return out;
}

std::optional<CorrelatorKey> catalog_key(std::string_view name)
{
    const Definition* def = find_definition(name);
    if (!def)
        return std::nullopt;
    return CorrelatorKey{def->orbifold, def->members.front()};
}

std::optional<std::string> catalog_name(const CorrelatorKey& key)
{
    const Definition* def = find_definition(key);
    if (!def)
        return std::nullopt;
    return def->name;
}

namespace {

QSeries catalog_series(std::string_view name, long order) { return correlator(*catalog_key(name), order).series; }

} // namespace

RelationReport frobenius_check(long order)
{
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    QSeries h0 = catalog_series("h0", order), h1 = catalog_series("h1", order);
    QSeries h6 = catalog_series("h6", order), h7 = catalog_series("h7", order);
    QSeries h8 = catalog_series("h8", order), h9 = catalog_series("h9", order);
    QSeries lhs = scale(h6 * h8, 6) + scale(h7 * h9, 3);
    QSeries rhs = scale(h1 * h1, 6) + scale(h0 * h0, 2);
    SeriesComparison cmp = compare(lhs, rhs);
    return {cmp.holds(), to_long(floor(cmp.verified_below)), cmp.first_discrepancy, true};
}

bool LiftingReport::holds() const
{
    return std::all_of(items.begin(), items.end(), [](const LiftingItem& i) { return i.comparison.holds(); });
}

LiftingReport lifting_correspondence_check(long order)
{
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    long half = (order + 1) / 2;
    std::map<InsertionTriple, QSeries> p333_cache;
    auto p333 = [&](const InsertionTriple& t) -> const QSeries& {
        auto it = p333_cache.find(t);
        if (it == p333_cache.end())
            it = p333_cache.emplace(t, correlator({Orbifold::p333, t}, half).series).first;
        return it->second;
    };

    LiftingReport report;
    for (std::string name : {"h4", "h5", "h6", "h7"}) {
        CorrelatorKey key = *catalog_key(name);
        const auto& items = key.insertions.items();
        // Enumerate lifts: bit i of mask picks w1' or w2' for the i-th D2^(1/3).
        QSeries total = QSeries::zero(1, 2 * half);
        for (int mask = 0; mask < 8; ++mask) {
            std::array<Insertion, 3> lifted{};
            bool valid = true;
            for (std::size_t i = 0; i < 3; ++i) {
                const Insertion& d = items[i];
                if (d.point == 2 && d.k == 1)
                    lifted[i] = Insertion::twisted(Orbifold::p333, (mask >> i) & 1 ? 2 : 1, 1);
                else if (d.point == 3 && d.k == 2)
                    lifted[i] = Insertion::twisted(Orbifold::p333, 3, 1);
                else
                    throw std::logic_error("unexpected insertion in a P1(3,3,3)-domain key");
                // Insertions without a choice only contribute on mask bit 0.
                if (d.point == 3 && ((mask >> i) & 1))
                    valid = false;
            }
            if (!valid)
                continue;
            total = total + substitute_power(p333(InsertionTriple(lifted[0], lifted[1], lifted[2])), 2);
        }
        QSeries rebuilt = scale(total, frac(1, 2)).truncated(order);
        report.items.push_back({name, compare(rebuilt, correlator(key, order).series)});
    }
    return report;
}

} // namespace orbiqc
