#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library beyond the Rat type, so agreement is evidence, not tautology.

#include <cstdlib>
#include <map>
#include <random>
#include <vector>

#include "orbiqc/rat.hpp"

namespace oracle {

using orbiqc::Rat;

// Coefficients of q^0..q^(order-1) of sum q^{a^2-ab+b^2} over a box search.
inline std::vector<long> eisenstein_counts(long order)
{
    std::vector<long> c(static_cast<std::size_t>(order));
    // a^2 - ab + b^2 >= (a^2 + b^2)/2, so |a|,|b| <= sqrt(2*order) suffice.
    long box = 1;
    while (box * box <= 2 * order)
        ++box;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            long n = a * a - a * b + b * b;
            if (n < order)
                ++c[static_cast<std::size_t>(n)];
        }
    return c;
}

inline std::vector<long> gaussian_counts(long order)
{
    std::vector<long> c(static_cast<std::size_t>(order));
    long box = 0;
    while (box * box < order)
        ++box;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            long n = a * a + b * b;
            if (n < order)
                ++c[static_cast<std::size_t>(n)];
        }
    return c;
}

// Divisors of n by direct scan.
inline std::vector<long> divisors(long n)
{
    std::vector<long> d;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0)
            d.push_back(k);
    return d;
}

// prod (1 - q^n) below q^order via Euler's pentagonal number theorem:
// sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
inline std::vector<long> euler_pentagonal(long order)
{
    std::vector<long> c(static_cast<std::size_t>(order));
    for (long k = -order; k <= order; ++k) {
        long e = k * (3 * k - 1) / 2;
        if (e >= 0 && e < order)
            c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return c;
}

// Sparse series keyed by exact exponent, for cross-checking dense arithmetic.
using Sparse = std::map<Rat, Rat>;

inline Sparse multiply(const Sparse& a, const Sparse& b, const Rat& below)
{
    Sparse out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rat e = ea + eb;
            if (e < below)
                out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Sparse add(const Sparse& a, const Sparse& b, const Rat& below)
{
    Sparse out;
    for (const auto* s : {&a, &b})
        for (const auto& [e, c] : *s)
            if (e < below)
                out[e] += c;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Small random rational with nonzero denominator.
inline Rat random_rat(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    return orbiqc::frac(num(rng), den(rng));
}

} // namespace oracle
