#pragma once

#include <vector>

namespace orbiqc {

struct PrimePower {
    long prime;
    int exponent;

    bool operator==(const PrimePower&) const = default;
};

// Primes strictly increasing; the empty list factors 1.
using Factorization = std::vector<PrimePower>;

// Trial division. Requires n >= 1.
Factorization factorize(long n);

// counts[j] is the number of divisors d of n with d = j (mod modulus).
struct DivisorClassCount {
    int modulus;
    std::vector<long> counts;

    long total() const;
};

// modulus must be 3 or 4; n >= 1.
DivisorClassCount divisor_class_counts(long n, int modulus);

// Representation numbers of a^2 - ab + b^2 and a^2 + b^2 from divisor counts:
// 6 (d_{1/3}(n) - d_{2/3}(n)) and 4 (d_{1/4}(n) - d_{3/4}(n)); both are 1 at n = 0.
long coeff_F_closed(long n);
long coeff_G_closed(long n);

// Coefficient of q^n in eta(q^9)^3 / eta(q^3), read off the factorization
// n = 3^e * prod p_i^{n_i} * prod q_j^{m_j} (p_i = 1, q_j = 2 mod 3):
// zero if e > 0 or some m_j is odd, otherwise prod (n_i + 1). Requires n >= 1.
long coeff_f0_factored(long n);

} // namespace orbiqc
