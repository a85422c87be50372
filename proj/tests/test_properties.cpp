#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "orbiqc/lattice.hpp"
#include "orbiqc/modforms.hpp"

using namespace orbiqc;

namespace {

constexpr int cases = 1000;

// Random series: grid from the divisors of 24, short support, random boundary.
QSeries random_series(std::mt19937& rng, long grid)
{
    std::uniform_int_distribution<long> lo(-3, 4), len(0, 6), extra(0, 8);
    long min_exp = lo(rng);
    std::vector<Rat> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c)
        x = oracle::random_rat(rng);
    long trunc = min_exp + static_cast<long>(c.size()) + extra(rng);
    return QSeries(grid, min_exp, std::move(c), trunc);
}

long random_grid(std::mt19937& rng)
{
    static const long grids[] = {1, 2, 3, 4, 6, 8, 12, 24};
    return grids[std::uniform_int_distribution<int>(0, 7)(rng)];
}

oracle::Sparse to_sparse(const QSeries& s)
{
    oracle::Sparse m;
    for (const auto& t : s.terms())
        m[t.exponent] = t.coefficient;
    return m;
}

// Coefficientwise equality below the smaller boundary.
bool agree(const QSeries& a, const QSeries& b) { return compare(a, b).holds(); }

} // namespace

TEST_SUITE("properties") {

TEST_CASE("ring axioms hold up to the propagated boundary")
{
    std::mt19937 rng(20240611);
    for (int i = 0; i < cases; ++i) {
        QSeries a = random_series(rng, random_grid(rng));
        QSeries b = random_series(rng, random_grid(rng));
        QSeries c = random_series(rng, random_grid(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(agree((a + b) + c, a + (b + c)));
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(agree(a * (b + c), a * b + a * c));
        CHECK(agree(a - a, QSeries::zero(1, a.trunc())));
        QSeries one(a.grid(), 0, {Rat(1)}, a.trunc() - std::min(a.min_exp(), 0L) + 24);
        CHECK(agree(a * one, a));
    }
}

TEST_CASE("truncation soundness against sparse convolution")
{
    std::mt19937 rng(7);
    for (int i = 0; i < cases; ++i) {
        QSeries a = random_series(rng, random_grid(rng));
        QSeries b = random_series(rng, random_grid(rng));
        QSeries p = a * b;
        QSeries s = a + b;
        // the full sparse product is the truth for every exponent strictly
        // below the smallest unknown contribution
        auto prod = oracle::multiply(to_sparse(a), to_sparse(b), p.order());
        auto sum = oracle::add(to_sparse(a), to_sparse(b), s.order());
        CHECK(to_sparse(p) == prod);
        CHECK(to_sparse(s) == sum);
        CHECK(p.order() == std::min(a.order() + (b.is_zero() ? b.order() : b.terms().front().exponent),
                                    b.order() + (a.is_zero() ? a.order() : a.terms().front().exponent)));
        CHECK(is_valid_grid(p.grid()));
        CHECK(p.coefficient(p.order() - frac(1, 48)) == 0); // off grid, below boundary
        CHECK_THROWS_AS(p.coefficient(p.order()), QueryBeyondTruncation);
    }
}

TEST_CASE("substitute_power composes")
{
    std::mt19937 rng(99);
    for (int i = 0; i < cases; ++i) {
        QSeries a = random_series(rng, random_grid(rng));
        long j = std::uniform_int_distribution<long>(1, 4)(rng);
        long k = std::uniform_int_distribution<long>(1, 4)(rng);
        CHECK(substitute_power(substitute_power(a, j), k) == substitute_power(a, j * k));
    }
}

TEST_CASE("reciprocal inverts series with nonzero leading term")
{
    std::mt19937 rng(3);
    for (int i = 0; i < cases; ++i) {
        QSeries a = random_series(rng, random_grid(rng));
        if (a.is_zero())
            continue;
        QSeries prod = a * reciprocal(a);
        CHECK(prod == QSeries(a.grid(), 0, {Rat(1)}, prod.trunc()));
        CHECK(prod.trunc() == a.trunc() - a.min_exp());
    }
}

TEST_CASE("unit orbits divide the representation numbers")
{
    for (long n = 1; n <= 2000; ++n) {
        CHECK(solutions_of_norm(LatticeKind::eisenstein, n).size() % 6 == 0);
        CHECK(solutions_of_norm(LatticeKind::gaussian, n).size() % 4 == 0);
    }
}

TEST_CASE("unit orbits share the classification")
{
    for (long n = 1; n <= 200; ++n) {
        for (auto p : solutions_of_norm(LatticeKind::eisenstein, n)) {
            // multiplication by 1+tau, a primitive sixth root of unity
            LatticePoint u{p.a - p.b, p.a};
            CHECK(norm(LatticeKind::eisenstein, u) == n);
            CHECK(classify_333(u) == classify_333(p));
            CHECK(classify_236(u) == classify_236(p));
        }
        for (auto p : solutions_of_norm(LatticeKind::gaussian, n)) {
            LatticePoint u{-p.b, p.a};
            CHECK(classify_244(u) == classify_244(p));
        }
    }
}

TEST_CASE("support of F and G")
{
    QSeries F = theta_F(2001), G = theta_G(2001);
    for (const auto& t : F.terms())
        CHECK(to_long(t.exponent.get_num()) % 3 != 2);
    for (const auto& t : G.terms())
        CHECK(to_long(t.exponent.get_num()) % 4 != 3);
}

}
