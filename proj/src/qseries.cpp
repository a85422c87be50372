#include "orbiqc/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace orbiqc {

namespace {

constexpr long max_grid = 24;

std::vector<std::size_t> nonzero_indices(const std::vector<Rat>& c)
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0)
            idx.push_back(k);
    return idx;
}

long common_grid(const QSeries& a, const QSeries& b) { return std::lcm(a.grid(), b.grid()); }

} // namespace

bool is_valid_grid(long grid) { return grid >= 1 && grid <= max_grid && max_grid % grid == 0; }

QSeries::QSeries(long grid, long min_exp, std::vector<Rat> coeffs, long trunc)
    : grid_(grid), min_exp_(min_exp), coeffs_(std::move(coeffs)), trunc_(trunc)
{
    if (!is_valid_grid(grid))
        throw InvalidGrid("exponent grid must divide 24, got " + std::to_string(grid));
    normalize();
}

void QSeries::normalize()
{
    if (min_exp_ >= trunc_) {
        coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > trunc_ - min_exp_) {
        coeffs_.resize(static_cast<std::size_t>(trunc_ - min_exp_));
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return sgn(c) != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_exp_ = trunc_;
        return;
    }
    min_exp_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
}

QSeries QSeries::zero(long grid, long trunc) { return QSeries(grid, trunc, {}, trunc); }

QSeries QSeries::constant(const Rat& value, long order) { return QSeries(1, 0, {value}, order); }

QSeries QSeries::from_coefficients(std::vector<Rat> coeffs, long order)
{
    return QSeries(1, 0, std::move(coeffs), order);
}

Rat QSeries::coefficient_at(long units) const
{
    if (units >= trunc_)
        throw QueryBeyondTruncation("coefficient of q^" + to_string(frac(units, grid_)) +
                                    " requested but series is exact only below q^" + to_string(order()));
    long k = units - min_exp_;
    if (k < 0 || k >= static_cast<long>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rat QSeries::coefficient(const Rat& exponent) const
{
    if (exponent >= order())
        throw QueryBeyondTruncation("coefficient of q^" + to_string(exponent) +
                                    " requested but series is exact only below q^" + to_string(order()));
    Rat units = exponent * grid_;
    if (!is_integer(units))
        return 0;
    return coefficient_at(to_long(units.get_num()));
}

std::vector<Term> QSeries::terms() const
{
    std::vector<Term> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0)
            out.push_back({frac(min_exp_ + static_cast<long>(k), grid_), coeffs_[k]});
    return out;
}

QSeries QSeries::with_grid(long grid) const
{
    if (!is_valid_grid(grid) || grid % grid_ != 0)
        throw InvalidGrid("cannot refine grid " + std::to_string(grid_) + " to " + std::to_string(grid));
    if (grid == grid_)
        return *this;
    long f = grid / grid_;
    std::vector<Rat> c;
    if (!coeffs_.empty()) {
        c.resize((coeffs_.size() - 1) * static_cast<std::size_t>(f) + 1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            c[k * static_cast<std::size_t>(f)] = coeffs_[k];
    }
    return QSeries(grid, min_exp_ * f, std::move(c), trunc_ * f);
}

std::optional<QSeries> QSeries::coarsened(long grid) const
{
    if (!is_valid_grid(grid) || grid_ % grid != 0)
        throw InvalidGrid("cannot coarsen grid " + std::to_string(grid_) + " to " + std::to_string(grid));
    long f = grid_ / grid;
    auto floor_div = [](long x, long d) { return x >= 0 ? x / d : -((-x + d - 1) / d); };
    long new_trunc = floor_div(trunc_, f);
    if (coeffs_.empty())
        return QSeries::zero(grid, new_trunc);
    if (((min_exp_ % f) + f) % f != 0)
        return std::nullopt;
    std::vector<Rat> c((coeffs_.size() - 1) / static_cast<std::size_t>(f) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0)
            continue;
        if (k % static_cast<std::size_t>(f) != 0)
            return std::nullopt;
        c[k / static_cast<std::size_t>(f)] = coeffs_[k];
    }
    return QSeries(grid, floor_div(min_exp_, f), std::move(c), new_trunc);
}

QSeries QSeries::truncated(const Rat& order) const
{
    long t = to_long(ceil(order * grid_));
    return QSeries(grid_, min_exp_, coeffs_, std::min(trunc_, t));
}

QSeries operator+(const QSeries& a0, const QSeries& b0)
{
    long g = common_grid(a0, b0);
    QSeries a = a0.with_grid(g);
    QSeries b = b0.with_grid(g);
    long trunc = std::min(a.trunc(), b.trunc());
    long lo = std::min(a.min_exp(), b.min_exp());
    if (lo >= trunc)
        return QSeries::zero(g, trunc);
    std::vector<Rat> c(static_cast<std::size_t>(trunc - lo));
    auto accumulate = [&](const QSeries& s) {
        for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
            long pos = s.min_exp() + static_cast<long>(k) - lo;
            if (pos < static_cast<long>(c.size()))
                c[static_cast<std::size_t>(pos)] += s.coeffs()[k];
        }
    };
    accumulate(a);
    accumulate(b);
    return QSeries(g, lo, std::move(c), trunc);
}

QSeries operator-(const QSeries& a) { return scale(a, -1); }

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a0, const QSeries& b0)
{
    long g = common_grid(a0, b0);
    QSeries a = a0.with_grid(g);
    QSeries b = b0.with_grid(g);
    long trunc = std::min(a.trunc() + b.min_exp(), b.trunc() + a.min_exp());
    long lo = a.min_exp() + b.min_exp();
    if (a.is_zero() || b.is_zero() || lo >= trunc)
        return QSeries::zero(g, trunc);

    std::vector<Rat> c(static_cast<std::size_t>(trunc - lo));
    auto nza = nonzero_indices(a.coeffs());
    auto nzb = nonzero_indices(b.coeffs());
    Rat prod;
    for (std::size_t i : nza) {
        const Rat& ai = a.coeffs()[i];
        for (std::size_t j : nzb) {
            std::size_t pos = i + j;
            if (pos >= c.size())
                break;
            mpq_mul(prod.get_mpq_t(), ai.get_mpq_t(), b.coeffs()[j].get_mpq_t());
            c[pos] += prod;
        }
    }
    return QSeries(g, lo, std::move(c), trunc);
}

QSeries scale(const QSeries& a, const Rat& c)
{
    std::vector<Rat> out = a.coeffs();
    for (auto& x : out)
        x *= c;
    return QSeries(a.grid(), a.min_exp(), std::move(out), a.trunc());
}

QSeries substitute_power(const QSeries& a, long k)
{
    if (k < 1)
        throw std::invalid_argument("substitute_power needs k >= 1");
    if (k == 1 || a.is_zero())
        return QSeries(a.grid(), a.min_exp() * k, a.coeffs(), a.trunc() * k);
    std::vector<Rat> c((a.coeffs().size() - 1) * static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        c[i * static_cast<std::size_t>(k)] = a.coeffs()[i];
    return QSeries(a.grid(), a.min_exp() * k, std::move(c), a.trunc() * k);
}

QSeries shift(const QSeries& a, long units)
{
    return QSeries(a.grid(), a.min_exp() + units, a.coeffs(), a.trunc() + units);
}

QSeries reciprocal(const QSeries& a)
{
    if (a.is_zero())
        throw std::domain_error("reciprocal of a series with no known nonzero coefficient");
    const auto& u = a.coeffs();
    long v = a.min_exp();
    long precision = a.trunc() - v;
    auto n = static_cast<std::size_t>(precision);

    Rat inv0 = 1 / u[0];
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < u.size() && j < n; ++j)
        if (sgn(u[j]) != 0)
            nz.push_back(j);

    std::vector<Rat> b(n);
    b[0] = inv0;
    Rat acc, prod;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t j : nz) {
            if (j > m)
                break;
            if (sgn(b[m - j]) == 0)
                continue;
            mpq_mul(prod.get_mpq_t(), u[j].get_mpq_t(), b[m - j].get_mpq_t());
            acc += prod;
        }
        b[m] = -acc * inv0;
    }
    return QSeries(a.grid(), -v, std::move(b), precision - v);
}

QSeries pow(const QSeries& a, long n)
{
    if (n < 0)
        return reciprocal(pow(a, -n));
    if (n == 0)
        return QSeries(a.grid(), 0, {Rat(1)}, a.trunc() - a.min_exp());
    QSeries result = a;
    QSeries base = a;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

SeriesComparison compare(const QSeries& lhs0, const QSeries& rhs0)
{
    long g = common_grid(lhs0, rhs0);
    QSeries lhs = lhs0.with_grid(g);
    QSeries rhs = rhs0.with_grid(g);
    long trunc = std::min(lhs.trunc(), rhs.trunc());
    SeriesComparison out{frac(trunc, g), std::nullopt};
    long lo = std::min(lhs.min_exp(), rhs.min_exp());
    long hi = std::min(trunc, std::max(lhs.min_exp() + static_cast<long>(lhs.coeffs().size()),
                                       rhs.min_exp() + static_cast<long>(rhs.coeffs().size())));
    for (long u = lo; u < hi; ++u) {
        Rat l = lhs.coefficient_at(u);
        Rat r = rhs.coefficient_at(u);
        if (l != r) {
            out.first_discrepancy = Discrepancy{frac(u, g), l, r};
            break;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QSeries& s)
{
    bool first = true;
    for (const auto& t : s.terms()) {
        Rat c = t.coefficient;
        if (!first)
            os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        Rat mag = abs(c);
        bool bare = sgn(t.exponent) == 0;
        if (bare || mag != 1)
            os << to_string(mag);
        if (!bare) {
            if (mag != 1)
                os << "*";
            os << "q";
            if (t.exponent != 1) {
                if (is_integer(t.exponent) && sgn(t.exponent) > 0)
                    os << "^" << to_string(t.exponent);
                else
                    os << "^(" << to_string(t.exponent) << ")";
            }
        }
    }
    if (!first)
        os << " + ";
    Rat o = s.order();
    os << "O(q^" << (is_integer(o) && sgn(o) >= 0 ? to_string(o) : "(" + to_string(o) + ")") << ")";
    return os;
}

} // namespace orbiqc
