#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbiqc/orbifold.hpp"
#include "orbiqc/rat.hpp"

namespace orbiqc {

// Eisenstein: lambda = a + b*tau with tau = exp(2 pi i / 3), norm a^2 - ab + b^2.
// Gaussian:   lambda = a + b*i, norm a^2 + b^2.
enum class LatticeKind { eisenstein, gaussian };

struct LatticePoint {
    long a = 0;
    long b = 0;

    auto operator<=>(const LatticePoint&) const = default;
};

long norm(LatticeKind kind, LatticePoint p);

// floor(sqrt(n)) for n >= 0, in integer arithmetic.
long isqrt(long n);

// Every (a, b) with norm(kind, (a, b)) == n, lexicographically sorted.
std::vector<LatticePoint> solutions_of_norm(LatticeKind kind, long n);

// Residue classifiers. Each takes a nonzero point and returns the insertion
// triple of the holomorphic orbi-sphere z -> lambda z.
InsertionTriple classify_333(LatticePoint p);
InsertionTriple classify_236(LatticePoint p);
InsertionTriple classify_244(LatticePoint p);

// Maps from the (3,6,6) domain into P236 traced by rhombi lambda * v.
// Class h8 holds the triple <D3^(1/6), D3^(1/6), D3^(4/6)>, h9 the triple
// <D2^(2/3), D3^(1/6), D3^(1/6)>; the q-exponent is twice the norm.
enum class RhombusClass { h8, h9 };

struct RhombusClassification {
    RhombusClass cls;
    InsertionTriple triple;
    long exponent;
};

// Accepts (0, 0), which lands in h8 at exponent 0.
RhombusClassification classify_366_rhombus(LatticePoint p);

InsertionTriple rhombus_triple(RhombusClass cls);

// A point of the universal cover that should lie in some fiber p^{-1}(w_j)
// but lies in none. Never a valid state.
class ClassificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A point x + y*omega of the universal cover, omega = tau or i.
struct CoverPoint {
    Rat x;
    Rat y;
};

struct MarkingImage {
    std::string marking; // e.g. "(2+tau)/3"
    CoverPoint image;    // lambda * marking
    int fiber;           // j such that image lies in p^{-1}(w_j)
    // Induced insertion at that marking; unset for rhombus vertices, whose
    // triple is read off the class instead.
    std::optional<Insertion> insertion;
};

struct GeometricClassification {
    std::vector<MarkingImage> markings;
    InsertionTriple triple; // includes the insertion at the origin
};

// Computes lambda * v exactly for each fundamental-domain marking v and
// decides fiber membership by explicit coset tests. Independent of the
// residue classifiers above. Throws ClassificationFailure on a miss.
GeometricClassification geometric_classify(Orbifold x, LatticePoint p);

// Same test for the rhombus vertices (2+tau)/3 and (1-tau)/3 in P236.
GeometricClassification geometric_classify_rhombus(LatticePoint p);

} // namespace orbiqc
