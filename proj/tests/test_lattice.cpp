#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "orbiqc/lattice.hpp"

using namespace orbiqc;

namespace {

InsertionTriple T(Orbifold x, std::pair<int, int> a, std::pair<int, int> b, std::pair<int, int> c)
{
    return {Insertion::twisted(x, a.first, a.second), Insertion::twisted(x, b.first, b.second),
            Insertion::twisted(x, c.first, c.second)};
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("norms")
{
    CHECK(norm(LatticeKind::eisenstein, {2, 1}) == 3);
    CHECK(norm(LatticeKind::eisenstein, {0, 0}) == 0);
    CHECK(norm(LatticeKind::gaussian, {2, 1}) == 5);
}

TEST_CASE("isqrt")
{
    for (long n = 0; n < 5000; ++n) {
        long s = isqrt(n);
        CHECK((s * s <= n && (s + 1) * (s + 1) > n));
    }
    CHECK_THROWS(isqrt(-1));
}

TEST_CASE("solutions_of_norm small cases")
{
    CHECK(solutions_of_norm(LatticeKind::eisenstein, 1).size() == 6);
    CHECK(solutions_of_norm(LatticeKind::eisenstein, 2).empty());
    CHECK(solutions_of_norm(LatticeKind::gaussian, 5).size() == 8);
    CHECK(solutions_of_norm(LatticeKind::eisenstein, 0) == std::vector<LatticePoint>{{0, 0}});
}

TEST_CASE("solutions_of_norm matches a box search, sorted and duplicate free")
{
    auto ecount = oracle::eisenstein_counts(400);
    auto gcount = oracle::gaussian_counts(400);
    for (long n = 0; n < 400; ++n) {
        for (auto kind : {LatticeKind::eisenstein, LatticeKind::gaussian}) {
            auto sols = solutions_of_norm(kind, n);
            CHECK(std::is_sorted(sols.begin(), sols.end()));
            CHECK(std::set<LatticePoint>(sols.begin(), sols.end()).size() == sols.size());
            for (auto p : sols)
                CHECK(norm(kind, p) == n);
            long expect = kind == LatticeKind::eisenstein ? ecount[static_cast<std::size_t>(n)]
                                                          : gcount[static_cast<std::size_t>(n)];
            CHECK(static_cast<long>(sols.size()) == expect);
        }
    }
}

TEST_CASE("classify_333")
{
    constexpr auto X = Orbifold::p333;
    CHECK(classify_333({1, 0}) == T(X, {1, 1}, {2, 1}, {3, 1}));
    CHECK(classify_333({1, 2}) == T(X, {1, 1}, {1, 1}, {1, 1}));
    CHECK(classify_333({2, 1}) == T(X, {1, 1}, {1, 1}, {1, 1}));
    CHECK_THROWS_AS(classify_333({0, 0}), std::invalid_argument);
}

TEST_CASE("classify_236")
{
    constexpr auto X = Orbifold::p236;
    CHECK(classify_236({1, 0}) == T(X, {1, 1}, {2, 1}, {3, 1}));
    CHECK(classify_236({2, 0}) == T(X, {3, 3}, {2, 1}, {3, 1}));
    CHECK(classify_236({1, 2}) == T(X, {1, 1}, {3, 2}, {3, 1}));
    // norm 12 = 0 mod 6
    CHECK(classify_236({2, 4}) == T(X, {3, 3}, {3, 2}, {3, 1}));
    CHECK_THROWS_AS(classify_236({0, 0}), std::invalid_argument);
}

TEST_CASE("classify_244 follows residues 1, 0, 2")
{
    constexpr auto X = Orbifold::p244;
    CHECK(classify_244({1, 0}) == T(X, {1, 1}, {2, 1}, {3, 1}));
    CHECK(classify_244({2, 0}) == T(X, {2, 2}, {2, 1}, {2, 1}));
    CHECK(classify_244({1, 1}) == T(X, {3, 2}, {2, 1}, {2, 1}));
    CHECK_THROWS_AS(classify_244({0, 0}), std::invalid_argument);
}

TEST_CASE("rhombus classes")
{
    auto a = classify_366_rhombus({1, 2});
    CHECK(a.cls == RhombusClass::h8);
    CHECK(a.exponent == 6);
    auto b = classify_366_rhombus({1, 0});
    CHECK(b.cls == RhombusClass::h9);
    CHECK(b.exponent == 2);
    CHECK(classify_366_rhombus({2, 1}).cls == RhombusClass::h8);
    auto z = classify_366_rhombus({0, 0});
    CHECK(z.cls == RhombusClass::h8);
    CHECK(z.exponent == 0);
    CHECK(rhombus_triple(RhombusClass::h9) == T(Orbifold::p236, {2, 2}, {3, 1}, {3, 1}));
}

TEST_CASE("geometric classification reports marking images")
{
    auto g = geometric_classify(Orbifold::p333, {1, 0});
    REQUIRE(g.markings.size() == 2);
    CHECK(g.markings[0].fiber == 2);
    CHECK(g.markings[1].fiber == 3);
    CHECK(g.triple == T(Orbifold::p333, {1, 1}, {2, 1}, {3, 1}));

    // 2 * (1+tau)/2 = 1 + tau lies over w3
    auto h = geometric_classify(Orbifold::p236, {2, 0});
    CHECK(h.markings[1].image.x == 1);
    CHECK(h.markings[1].image.y == 1);
    CHECK(h.markings[1].fiber == 3);
    REQUIRE(h.markings[1].insertion.has_value());
    CHECK(*h.markings[1].insertion == Insertion::twisted(Orbifold::p236, 3, 3));

    auto r = geometric_classify_rhombus({1, 2});
    CHECK(r.markings[0].fiber == 3);
    CHECK_FALSE(r.markings[0].insertion.has_value());
    CHECK(r.triple == rhombus_triple(RhombusClass::h8));
    CHECK_THROWS_AS(geometric_classify(Orbifold::p244, {0, 0}), std::invalid_argument);
}

TEST_CASE("geometric and residue classifiers agree for small norms")
{
    for (long n = 1; n <= 60; ++n) {
        for (auto p : solutions_of_norm(LatticeKind::eisenstein, n)) {
            CHECK(geometric_classify(Orbifold::p333, p).triple == classify_333(p));
            CHECK(geometric_classify(Orbifold::p236, p).triple == classify_236(p));
            CHECK(geometric_classify_rhombus(p).triple == classify_366_rhombus(p).triple);
        }
        for (auto p : solutions_of_norm(LatticeKind::gaussian, n))
            CHECK(geometric_classify(Orbifold::p244, p).triple == classify_244(p));
    }
}

}
