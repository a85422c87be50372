#include "orbiqc/verify.hpp"

#include <functional>
#include <stdexcept>

#include "orbiqc/arith.hpp"
#include "orbiqc/gw.hpp"
#include "orbiqc/lattice.hpp"
#include "orbiqc/modforms.hpp"

namespace orbiqc {

namespace {

CheckReport from_comparison(std::string name, const SeriesComparison& c)
{
    CheckReport r{std::move(name), c.holds(), to_long(floor(c.verified_below)), c.first_discrepancy, "", false};
    if (c.first_discrepancy)
        r.detail = "coefficient of q^" + to_string(c.first_discrepancy->exponent) + ": " +
                   to_string(c.first_discrepancy->lhs) + " vs " + to_string(c.first_discrepancy->rhs);
    return r;
}

// Two comparisons that must both hold; reports the first failure.
CheckReport both(std::string name, const SeriesComparison& a, const SeriesComparison& b, const char* a_label,
                 const char* b_label)
{
    CheckReport r = from_comparison(name, a);
    if (!r.passed) {
        r.detail = std::string(a_label) + ": " + r.detail;
        return r;
    }
    CheckReport s = from_comparison(name, b);
    if (!s.passed) {
        s.detail = std::string(b_label) + ": " + s.detail;
        return s;
    }
    r.verified_through = std::min(r.verified_through, s.verified_through);
    return r;
}

CheckReport divisor_vs_lattice(long order)
{
    for (long n = 0; n < order; ++n) {
        long f = static_cast<long>(solutions_of_norm(LatticeKind::eisenstein, n).size());
        if (f != coeff_F_closed(n))
            return {"divisor-vs-lattice", false, order, Discrepancy{n, f, coeff_F_closed(n)},
                    "F at q^" + std::to_string(n) + ": enumeration " + std::to_string(f) + " vs divisor formula " +
                        std::to_string(coeff_F_closed(n))};
        long g = static_cast<long>(solutions_of_norm(LatticeKind::gaussian, n).size());
        if (g != coeff_G_closed(n))
            return {"divisor-vs-lattice", false, order, Discrepancy{n, g, coeff_G_closed(n)},
                    "G at q^" + std::to_string(n) + ": enumeration " + std::to_string(g) + " vs divisor formula " +
                        std::to_string(coeff_G_closed(n))};
    }
    return {"divisor-vs-lattice", true, order, std::nullopt, "", false};
}

CheckReport f0_factored(long order)
{
    QSeries f0 = correlator(*catalog_key("f0"), order).series;
    for (long n = 1; n < order; ++n) {
        Rat lattice = f0.coefficient_at(n);
        Rat closed = coeff_f0_factored(n);
        if (lattice != closed)
            return {"f0-factored", false, order, Discrepancy{n, lattice, closed},
                    "q^" + std::to_string(n) + ": lattice " + to_string(lattice) + " vs factored " + to_string(closed)};
    }
    return {"f0-factored", true, order, std::nullopt, "", false};
}

CheckReport frobenius(long order)
{
    RelationReport rep = frobenius_check(order);
    CheckReport r{"frobenius", rep.holds, rep.verified_through, rep.first_discrepancy, "", rep.uses_conjectural};
    if (!rep.holds)
        r.detail = "6h6h8 + 3h7h9 vs 6h1^2 + 2h0^2 at q^" + to_string(rep.first_discrepancy->exponent) + ": " +
                   to_string(rep.first_discrepancy->lhs) + " vs " + to_string(rep.first_discrepancy->rhs) +
                   " (falsifies the conjectural h8, h9 assembly)";
    return r;
}

std::string describe(LatticePoint p) { return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")"; }

CheckReport geometry_vs_residue(long order)
{
    const char* name = "geometry-vs-residue";
    try {
        for (long n = 0; n < order; ++n) {
            for (LatticePoint p : solutions_of_norm(LatticeKind::eisenstein, n)) {
                auto rh = classify_366_rhombus(p);
                auto gh = geometric_classify_rhombus(p);
                if (rh.triple != gh.triple)
                    return {name, false, order, std::nullopt,
                            "rhombus " + describe(p) + ": residue " + to_string(rh.triple) + " vs geometric " +
                                to_string(gh.triple)};
                if (n == 0)
                    continue;
                for (auto [x, classify] : {std::pair{Orbifold::p333, &classify_333}, {Orbifold::p236, &classify_236}}) {
                    auto residue = classify(p);
                    auto geometric = geometric_classify(x, p).triple;
                    if (residue != geometric)
                        return {name, false, order, std::nullopt,
                                std::string(orbiqc::name(x)) + " " + describe(p) + ": residue " + to_string(residue) +
                                    " vs geometric " + to_string(geometric)};
                }
            }
            if (n == 0)
                continue;
            for (LatticePoint p : solutions_of_norm(LatticeKind::gaussian, n)) {
                auto residue = classify_244(p);
                auto geometric = geometric_classify(Orbifold::p244, p).triple;
                if (residue != geometric)
                    return {name, false, order, std::nullopt,
                            "244 " + describe(p) + ": residue " + to_string(residue) + " vs geometric " +
                                to_string(geometric)};
            }
        }
    } catch (const ClassificationFailure& e) {
        return {name, false, order, std::nullopt, e.what()};
    }
    return {name, true, order, std::nullopt, ""};
}

CheckReport lifting(long order)
{
    LiftingReport rep = lifting_correspondence_check(order);
    CheckReport r{"lifting", true, order, std::nullopt, "", false};
    for (const auto& item : rep.items) {
        CheckReport c = from_comparison("lifting", item.comparison);
        r.verified_through = std::min(r.verified_through, c.verified_through);
        if (!c.passed) {
            c.detail = item.name + " from P333 lifts: " + c.detail;
            return c;
        }
    }
    return r;
}

using Runner = std::function<CheckReport(long)>;

const std::vector<std::pair<std::string, Runner>>& registry()
{
    static const std::vector<std::pair<std::string, Runner>> r{
        {"theta-identity-F", [](long n) { return from_comparison("theta-identity-F", check_theta_identity_F(n)); }},
        {"theta-identity-G", [](long n) { return from_comparison("theta-identity-G", check_theta_identity_G(n)); }},
        {"eta-vs-lattice",
         [](long n) {
             return both("eta-vs-lattice", check_eta_f0(n), check_eta_f1(n), "F_{1,3}/6 vs eta(q^9)^3/eta(q^3)",
                         "F_{0,3}/3 vs f1 from eta quotients");
         }},
        {"divisor-vs-lattice", divisor_vs_lattice},
        {"f0-factored", f0_factored},
        {"frobenius", frobenius},
        {"geometry-vs-residue", geometry_vs_residue},
        {"lifting", lifting},
    };
    return r;
}

} // namespace

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, run] : registry())
            n.push_back(name);
        return n;
    }();
    return names;
}

std::optional<CheckReport> run_check(std::string_view name, long order)
{
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    for (const auto& [n, run] : registry())
        if (n == name)
            return run(order);
    return std::nullopt;
}

} // namespace orbiqc
