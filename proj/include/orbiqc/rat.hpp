#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbiqc {

// Exact rational backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

// num/den in lowest terms. mpq_class's two-argument constructor does not
// canonicalize, so every fraction built from parts goes through here.
// Throws std::domain_error when den == 0.
Rat frac(long num, long den);

// Renders integers bare and everything else as "p/q".
std::string to_string(const Rat& r);

// Inverse of to_string. Accepts "p", "-p", "p/q"; throws std::invalid_argument
// on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

Int floor(const Rat& r);
Int ceil(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Narrowing helper for values known to fit; throws std::overflow_error otherwise.
long to_long(const Int& z);

} // namespace orbiqc
