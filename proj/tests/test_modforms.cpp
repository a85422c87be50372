#include <doctest.h>

#include "oracle.hpp"
#include "orbiqc/arith.hpp"
#include "orbiqc/modforms.hpp"

using namespace orbiqc;

namespace {

void check_prefix(const QSeries& s, const std::vector<std::pair<Rat, Rat>>& terms, long through)
{
    std::map<Rat, Rat> want(terms.begin(), terms.end());
    for (long n = 0; n <= through; ++n) {
        auto it = want.find(Rat(n));
        Rat expect = it == want.end() ? Rat(0) : it->second;
        CHECK_MESSAGE(s.coefficient(n) == expect, "exponent ", n);
    }
}

} // namespace

TEST_SUITE("modforms") {

TEST_CASE("eta_series follows the pentagonal numbers")
{
    QSeries eta = eta_series(200);
    CHECK(eta.grid() == 24);
    CHECK(eta.coefficient(frac(1, 24)) == 1);
    auto pent = oracle::euler_pentagonal(200);
    for (long k = 0; k < 200; ++k)
        CHECK(eta.coefficient(Rat(k) + frac(1, 24)) == pent[static_cast<std::size_t>(k)]);
    // first integer part: 1 - q - q^2 + q^5 + q^7
    CHECK(eta.coefficient(Rat(2) + frac(1, 24)) == -1);
    CHECK(eta.coefficient(Rat(3) + frac(1, 24)) == 0);
    CHECK_THROWS(eta_series(0));
}

TEST_CASE("eta times its reciprocal is one")
{
    QSeries eta = eta_series(30);
    QSeries r = reciprocal(eta);
    QSeries one = eta * r;
    CHECK(one == QSeries(24, 0, {Rat(1)}, one.trunc()));
}

TEST_CASE("eta quotient basics")
{
    CHECK(eta_quotient({{{1, 1}}}, 50) == eta_series(50));
    CHECK(EtaQuotientSpec{{{9, 3}, {3, -1}}}.valuation_24ths() == 24);
    CHECK_THROWS_AS(eta_quotient_integral({{{1, 1}}}, 10), NonIntegralValuation);
    QSeries q = eta_quotient({{{1, 2}}}, 10); // q^(1/12) ...
    CHECK(q.grid() == 12);
    CHECK(q.coefficient(frac(1, 12)) == 1);
    CHECK(q.coefficient(Rat(1) + frac(1, 12)) == -2);
}

TEST_CASE("f0 and f1 from eta quotients")
{
    QSeries f0 = f0_eta(24);
    check_prefix(f0, {{1, 1}, {4, 1}, {7, 2}, {13, 2}, {16, 1}, {19, 2}}, 23);
    QSeries f1 = f1_eta_simplified(24);
    check_prefix(f1, {{0, frac(1, 3)}, {3, 2}, {9, 2}, {12, 2}, {21, 4}}, 23);
    CHECK(f1_eta(24) == f1);
    CHECK(f0.trunc() == 24);
    CHECK(f1_eta(24).trunc() == 24);
}

TEST_CASE("theta2 and theta3")
{
    QSeries t2 = theta2(10);
    CHECK(t2.grid() == 4);
    CHECK(t2.coefficient(frac(1, 4)) == 2);
    CHECK(t2.coefficient(frac(9, 4)) == 2);
    CHECK(t2.coefficient(frac(25, 4)) == 2);
    CHECK(t2.coefficient(frac(1, 2)) == 0);
    for (const auto& t : theta2(100).terms())
        CHECK(t.coefficient == 2);
    QSeries t3 = theta3(10);
    check_prefix(t3, {{0, 1}, {1, 2}, {4, 2}, {9, 2}}, 9);
}

TEST_CASE("theta series of the two forms")
{
    check_prefix(theta_F(24),
                 {{0, 1}, {1, 6}, {3, 6}, {4, 6}, {7, 12}, {9, 6}, {12, 6}, {13, 12}, {16, 6}, {19, 12}, {21, 12}},
                 23);
    check_prefix(theta_G(20),
                 {{0, 1}, {1, 4}, {2, 4}, {4, 4}, {5, 8}, {8, 4}, {9, 4}, {10, 8}, {13, 8}, {16, 4}, {17, 8}, {18, 4}},
                 19);
    for (const auto& t : theta_F(300).terms())
        CHECK(to_long(floor(t.exponent)) % 3 != 2);
}

TEST_CASE("theta coefficients equal the divisor closed forms")
{
    QSeries F = theta_F(500), G = theta_G(500);
    for (long n = 0; n < 500; ++n) {
        CHECK(F.coefficient_at(n) == coeff_F_closed(n));
        CHECK(G.coefficient_at(n) == coeff_G_closed(n));
    }
}

TEST_CASE("residue decomposition")
{
    QSeries F = theta_F(30);
    auto d3 = residue_decompose(F, 3);
    check_prefix(d3.parts.at(0), {{0, 1}, {3, 6}, {9, 6}, {12, 6}, {21, 6}}, 20);
    check_prefix(d3.parts.at(1), {{1, 6}, {4, 6}, {7, 12}}, 7);
    CHECK(d3.sum() == F);
    auto d6 = residue_decompose(F, 6);
    CHECK(d6.parts.at(2).is_zero());
    CHECK(d6.parts.at(5).is_zero());
    for (long r : {0, 1, 3, 4})
        CHECK_FALSE(d6.parts.at(r).is_zero());
    for (const auto& [r, part] : d6.parts)
        for (const auto& t : part.terms())
            CHECK(to_long(floor(t.exponent)) % 6 == r);
    CHECK(residue_decompose(F, 1).parts.at(0) == F);
    CHECK_THROWS_AS(residue_decompose(theta2(10), 3), GridMismatch);
    // grid 4 but integer support is fine
    QSeries t2 = theta2(20);
    CHECK_NOTHROW(residue_decompose(t2 * substitute_power(t2, 3), 3));
}

TEST_CASE("identity checks at moderate order")
{
    CHECK(check_theta_identity_F(300).holds());
    CHECK(check_theta_identity_F(300).verified_below == 300);
    CHECK(check_theta_identity_G(300).holds());
    CHECK(check_eta_f0(300).holds());
    CHECK(check_eta_f1(300).holds());
    CHECK(check_eta_f1(300).verified_below == 300);
}

}
