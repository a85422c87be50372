#include "orbiqc/arith.hpp"

#include <stdexcept>

namespace orbiqc {

Factorization factorize(long n)
{
    if (n < 1)
        throw std::invalid_argument("factorize needs n >= 1");
    Factorization out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

long DivisorClassCount::total() const
{
    long s = 0;
    for (long c : counts)
        s += c;
    return s;
}

DivisorClassCount divisor_class_counts(long n, int modulus)
{
    if (n < 1)
        throw std::invalid_argument("divisor_class_counts needs n >= 1");
    if (modulus != 3 && modulus != 4)
        throw std::invalid_argument("divisor classes are tracked modulo 3 or 4");
    DivisorClassCount out{modulus, std::vector<long>(static_cast<std::size_t>(modulus), 0)};
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        ++out.counts[static_cast<std::size_t>(d % modulus)];
        long e = n / d;
        if (e != d)
            ++out.counts[static_cast<std::size_t>(e % modulus)];
    }
    return out;
}

long coeff_F_closed(long n)
{
    if (n < 0)
        throw std::invalid_argument("negative exponent");
    if (n == 0)
        return 1;
    auto d = divisor_class_counts(n, 3);
    return 6 * (d.counts[1] - d.counts[2]);
}

long coeff_G_closed(long n)
{
    if (n < 0)
        throw std::invalid_argument("negative exponent");
    if (n == 0)
        return 1;
    auto d = divisor_class_counts(n, 4);
    return 4 * (d.counts[1] - d.counts[3]);
}

long coeff_f0_factored(long n)
{
    if (n < 1)
        throw std::invalid_argument("coeff_f0_factored needs n >= 1");
    // f0 lives on exponents = 1 mod 3; any factor of 3 already kills it.
    if (n % 3 == 0)
        return 0;
    long product = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (p % 3 == 1)
            product *= e + 1;
        else if (e % 2 == 1)
            return 0;
    }
    return product;
}

} // namespace orbiqc
