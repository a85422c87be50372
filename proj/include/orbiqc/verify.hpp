#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbiqc/qseries.hpp"

namespace orbiqc {

struct CheckReport {
    std::string check;
    bool passed;
    long verified_through;                 // exponents below this were compared
    std::optional<Discrepancy> discrepancy; // first coefficient mismatch, if any
    std::string detail;                     // human-readable failure context
    bool conjectural = false;               // rests on h8, h9
};

// theta-identity-F, theta-identity-G, eta-vs-lattice, divisor-vs-lattice,
// f0-factored, frobenius, geometry-vs-residue, lifting
const std::vector<std::string>& check_names();

// nullopt for an unknown name. order >= 1.
std::optional<CheckReport> run_check(std::string_view name, long order);

} // namespace orbiqc
