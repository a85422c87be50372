#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "orbiqc/rat.hpp"

namespace orbiqc {

// The three elliptic orbifold projective lines.
enum class Orbifold { p333, p236, p244 };

inline constexpr std::array<Orbifold, 3> all_orbifolds{Orbifold::p333, Orbifold::p236, Orbifold::p244};

// Isotropy orders at w1, w2, w3.
std::array<int, 3> isotropy_orders(Orbifold x);
std::string_view name(Orbifold x); // "333", "236", "244"
std::optional<Orbifold> parse_orbifold(std::string_view text);

// A cohomology class used as an insertion. Twisted sectors D_i^{k/n} sit at
// the cone point w_i (point = 1..3) with 1 <= k <= n-1; point 0 is reserved
// for the untwisted unit class.
struct Insertion {
    int point = 0;
    int k = 0;
    int n = 1;

    static Insertion unit() { return {}; }
    // Validated twisted sector of x at w_point with numerator k.
    static Insertion twisted(Orbifold x, int point, int k);

    bool is_unit() const { return point == 0; }
    Rat age() const { return frac(k, n); }
    // Order of the local group element, n / gcd(k, n); 1 for the unit.
    int local_order() const;

    auto operator<=>(const Insertion&) const = default;
};

std::string to_string(const Insertion& d); // "D2^(1/3)", unit as "1"

// Unordered insertion triple, stored sorted by (point, age).
class InsertionTriple {
public:
    InsertionTriple(Insertion a, Insertion b, Insertion c);

    const std::array<Insertion, 3>& items() const { return items_; }
    Rat age_sum() const;

    auto operator<=>(const InsertionTriple&) const = default;

private:
    std::array<Insertion, 3> items_;
};

std::string to_string(const InsertionTriple& t); // "<D1^(1/3), D2^(1/3), D3^(1/3)>"

} // namespace orbiqc
