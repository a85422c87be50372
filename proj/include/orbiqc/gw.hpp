#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbiqc/orbifold.hpp"
#include "orbiqc/qseries.hpp"

namespace orbiqc {

// Domain orbi-sphere of a dimension-zero triple, read off the sorted local
// orders of its insertions. two_point covers the unit-containing types whose
// domain has only two cone points; those carry no nonconstant maps.
enum class DomainType { p236, p333, p366, p244, two_point };

std::string_view name(DomainType d); // "P1(2,3,6)", ..., "P1(m,m)"

enum class Status { proven, conjectural, zero };

std::string_view name(Status s);

class InadmissibleKey : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CorrelatorKey {
    Orbifold orbifold;
    InsertionTriple insertions;

    auto operator<=>(const CorrelatorKey&) const = default;
};

std::string to_string(const CorrelatorKey& key);

struct AdmissibleTriple {
    CorrelatorKey key;
    DomainType domain;
};

// Every triple of twisted sectors with age sum 1, followed by the triples
// <1, a, b> with age(a) + age(b) = 1. Deterministic order.
std::vector<AdmissibleTriple> admissible_triples(Orbifold x);

// Throws InadmissibleKey unless the ages sum to 1.
DomainType domain_of(const CorrelatorKey& key);

struct Options {
    // Keep the degree-0 term 1/4 of g2 that the counting formula gives.
    bool include_degree_zero = false;
};

struct CorrelatorSeries {
    CorrelatorKey key;
    std::string name; // catalog name ("f0", "h7", ...) or the bracket for uncatalogued keys
    QSeries series;
    Status status;
};

// Sum over d of <key>_{0,3,d} q^d, exact below q^order, constant maps included.
// Throws InadmissibleKey if the ages do not sum to 1.
CorrelatorSeries correlator(const CorrelatorKey& key, long order, Options opts = {});

// Degree-0 constant-map contribution: 1/n when all three insertions are
// twisted sectors at one point of order n, otherwise 0.
Rat classical_term(const CorrelatorKey& key);

// 1 / prod(multiplicity!) over the distinct insertions: the coefficient of the
// t-monomial in the cubic part of the potential.
Rat potential_prefactor(const CorrelatorKey& key);

struct CatalogEntry {
    CorrelatorSeries correlator; // built for the representative key
    std::vector<CorrelatorKey> members; // all keys sharing this series by symmetry
    Rat prefactor;
    DomainType domain;
};

// f0, f1 / h0..h9 / g0..g4 in that order.
std::vector<CatalogEntry> potential_cubic_table(Orbifold x, long order, Options opts = {});

std::vector<std::string> catalog_names(Orbifold x);
// Catalog name to representative key; the orbifold follows from the prefix.
std::optional<CorrelatorKey> catalog_key(std::string_view name);
std::optional<std::string> catalog_name(const CorrelatorKey& key);

struct RelationReport {
    bool holds;
    long verified_through; // every exponent below this was compared
    std::optional<Discrepancy> first_discrepancy;
    bool uses_conjectural;
};

// 6 h6 h8 + 3 h7 h9 = 6 h1^2 + 2 h0^2. h8 and h9 are conjectural, so a failure
// falsifies their assembly rather than anything proven.
RelationReport frobenius_check(long order);

struct LiftingItem {
    std::string name; // h4..h7
    SeriesComparison comparison;
};

struct LiftingReport {
    std::vector<LiftingItem> items;

    bool holds() const;
};

// Rebuilds h4..h7 from P333 correlators at q^2: each D2^(1/3) lifts to either
// of two order-3 points, each D3^(2/6) to the third, and the sum over lifts
// is halved. Compared against the catalog series.
LiftingReport lifting_correspondence_check(long order);

} // namespace orbiqc
