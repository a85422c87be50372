#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orbiqc/rat.hpp"

namespace orbiqc {

// A coefficient was requested at or beyond the truncation boundary.
class QueryBeyondTruncation : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Exponent grid outside {1,2,3,4,6,8,12,24}, or an incompatible regrid.
class InvalidGrid : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_valid_grid(long grid);

struct Term {
    Rat exponent;
    Rat coefficient;
};

// Truncated formal power series in q with exact rational coefficients.
//
// Exponents live on the grid (1/grid)Z, grid dividing 24. All positions below
// are measured in grid units: coeffs()[k] is the coefficient of
// q^((min_exp() + k) / grid()), and the series is exact for every exponent
// strictly below trunc() / grid(). Positions in [min_exp + coeffs.size(), trunc)
// are known zeros; nothing is known at or beyond trunc.
//
// Values are kept normalized: no stored entries at or beyond trunc, no leading
// or trailing zero entries, and min_exp == trunc for a series whose known part
// vanishes. Normalization makes structural equality meaningful.
class QSeries {
public:
    QSeries(long grid, long min_exp, std::vector<Rat> coeffs, long trunc);

    // Exactly zero below q^(trunc/grid).
    static QSeries zero(long grid, long trunc);
    // value + O(q^order) on the integer grid.
    static QSeries constant(const Rat& value, long order);
    // sum_k coeffs[k] q^k + O(q^order) on the integer grid.
    static QSeries from_coefficients(std::vector<Rat> coeffs, long order);

    long grid() const { return grid_; }
    long min_exp() const { return min_exp_; }
    long trunc() const { return trunc_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // The series is exact for exponents strictly below this value.
    Rat order() const { return frac(trunc_, grid_); }
    bool is_zero() const { return coeffs_.empty(); }

    // Throws QueryBeyondTruncation if exponent >= order(). Off-grid exponents
    // and gaps between stored entries read as exact zeros.
    Rat coefficient(const Rat& exponent) const;
    // Same lookup addressed in grid units.
    Rat coefficient_at(long units) const;

    // Nonzero terms in increasing exponent order.
    std::vector<Term> terms() const;

    // Re-express on a finer grid (a multiple of grid() dividing 24).
    QSeries with_grid(long grid) const;
    // Re-express on a coarser grid when every nonzero exponent lies on it.
    // The boundary rounds down so no unknown position is claimed.
    std::optional<QSeries> coarsened(long grid) const;

    // Forget everything at or beyond q^order.
    QSeries truncated(const Rat& order) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    void normalize();

    long grid_;
    long min_exp_;
    std::vector<Rat> coeffs_;
    long trunc_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
// Cauchy product; exact below min(a.trunc + b.min_exp, b.trunc + a.min_exp).
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rat& c);
inline QSeries operator*(const Rat& c, const QSeries& a) { return scale(a, c); }

// q -> q^k for k >= 1.
QSeries substitute_power(const QSeries& a, long k);

// Multiplies by q^(units/grid).
QSeries shift(const QSeries& a, long units);

// 1/a via the unit-part recurrence; the valuation is negated separately.
// Throws std::domain_error when the known part of a is zero.
QSeries reciprocal(const QSeries& a);

// a^n for any integer n; negative powers go through reciprocal(). a^0 is 1
// with the relative precision of a.
QSeries pow(const QSeries& a, long n);

struct Discrepancy {
    Rat exponent;
    Rat lhs;
    Rat rhs;
};

struct SeriesComparison {
    Rat verified_below;
    std::optional<Discrepancy> first_discrepancy;

    bool holds() const { return !first_discrepancy; }
};

// Coefficientwise comparison on the common grid, up to the smaller boundary.
SeriesComparison compare(const QSeries& lhs, const QSeries& rhs);

std::ostream& operator<<(std::ostream& os, const QSeries& s);

} // namespace orbiqc
