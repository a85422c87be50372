#include "orbiqc/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbiqc {

std::array<int, 3> isotropy_orders(Orbifold x)
{
    switch (x) {
    case Orbifold::p333:
        return {3, 3, 3};
    case Orbifold::p236:
        return {2, 3, 6};
    case Orbifold::p244:
        return {2, 4, 4};
    }
    throw std::logic_error("unknown orbifold");
}

std::string_view name(Orbifold x)
{
    switch (x) {
    case Orbifold::p333:
        return "333";
    case Orbifold::p236:
        return "236";
    case Orbifold::p244:
        return "244";
    }
    throw std::logic_error("unknown orbifold");
}

std::optional<Orbifold> parse_orbifold(std::string_view text)
{
    for (auto x : all_orbifolds)
        if (name(x) == text)
            return x;
    return std::nullopt;
}

Insertion Insertion::twisted(Orbifold x, int point, int k)
{
    if (point < 1 || point > 3)
        throw std::invalid_argument("cone point index must be 1, 2 or 3");
    int n = isotropy_orders(x)[static_cast<std::size_t>(point - 1)];
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("twisted sector numerator out of range for order " + std::to_string(n));
    return {point, k, n};
}

int Insertion::local_order() const { return is_unit() ? 1 : n / std::gcd(k, n); }

std::string to_string(const Insertion& d)
{
    if (d.is_unit())
        return "1";
    return "D" + std::to_string(d.point) + "^(" + std::to_string(d.k) + "/" + std::to_string(d.n) + ")";
}

InsertionTriple::InsertionTriple(Insertion a, Insertion b, Insertion c) : items_{a, b, c}
{
    std::sort(items_.begin(), items_.end());
}

Rat InsertionTriple::age_sum() const { return items_[0].age() + items_[1].age() + items_[2].age(); }

std::string to_string(const InsertionTriple& t)
{
    return "<" + to_string(t.items()[0]) + ", " + to_string(t.items()[1]) + ", " + to_string(t.items()[2]) + ">";
}

} // namespace orbiqc
