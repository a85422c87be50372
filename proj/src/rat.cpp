#include "orbiqc/rat.hpp"

#include <stdexcept>

namespace orbiqc {

Rat frac(long num, long den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    if (num.front() == '+')
        num.remove_prefix(1);
    Int n(std::string(num), 10);
    Int d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Int floor(const Rat& r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil(const Rat& r)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

long to_long(const Int& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in long: " + z.get_str());
    return z.get_si();
}

} // namespace orbiqc
