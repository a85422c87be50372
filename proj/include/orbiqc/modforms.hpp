#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "orbiqc/qseries.hpp"

namespace orbiqc {

// Residue decomposition needs an integer exponent grid.
class GridMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An eta quotient whose prefactor is not an integral power of q was asked
// for as an integer-exponent series.
class NonIntegralValuation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// prod eta(q^scale)^exponent
struct EtaFactor {
    long scale;
    long exponent;
};

struct EtaQuotientSpec {
    std::vector<EtaFactor> factors;

    // Sum of scale * exponent; the quotient carries the prefactor q^(this/24).
    long valuation_24ths() const;
};

// Every builder below returns a series exact for all exponents < order.

// q^(1/24) prod_{n>=1} (1 - q^n) on grid 24.
QSeries eta_series(long order);

// Product of unit parts by exact multiplication and reciprocal, shifted by
// the q^(valuation/24) prefactor. The result sits on the coarsest grid that
// holds the prefactor.
QSeries eta_quotient(const EtaQuotientSpec& spec, long order);

// Same, but the caller needs integer exponents: throws NonIntegralValuation
// when 24 does not divide the valuation.
QSeries eta_quotient_integral(const EtaQuotientSpec& spec, long order);

// sum_n q^((n+1/2)^2), grid 4.
QSeries theta2(long order);
// sum_n q^(n^2), grid 1.
QSeries theta3(long order);

// Theta series of a^2 - ab + b^2 and a^2 + b^2, counted by lattice
// enumeration one exponent at a time.
QSeries theta_F(long order);
QSeries theta_G(long order);

struct ResidueDecomposition {
    long modulus;
    std::map<long, QSeries> parts; // residue -> sub-series on that class

    QSeries sum() const;
};

// Throws GridMismatch if s has any fractional exponent.
ResidueDecomposition residue_decompose(const QSeries& s, long modulus);

// eta(q^9)^3 / eta(q^3): the P333 correlator <D1,D2,D3> in closed form.
QSeries f0_eta(long order);
// (1 + (1/3) (eta(q)/eta(q^9))^3) * f0_eta, exactly as written.
QSeries f1_eta(long order);
// f0_eta + (1/3) eta(q)^3 / eta(q^3), the simplified equivalent.
QSeries f1_eta_simplified(long order);

// Identity checks. Each compares on the common grid, so fractional-exponent
// slots of one side must vanish to match an integer-grid other side.
SeriesComparison check_theta_identity_F(long order); // F = th3(q)th3(q^3) + th2(q)th2(q^3)
SeriesComparison check_theta_identity_G(long order); // G = th3(q)^2
SeriesComparison check_eta_f0(long order);           // F_{1,3}/6 = eta(q^9)^3/eta(q^3)
SeriesComparison check_eta_f1(long order);           // F_{0,3}/3 = f1_eta

} // namespace orbiqc
