#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace orbiqc::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_discrepancy = 1;
inline constexpr int exit_unknown = 2; // unknown series, check, orbifold or format
inline constexpr int exit_invalid_order = 3;

struct CommandOptions {
    std::optional<std::string> orbifold; // "333" | "236" | "244"
    std::string series;
    std::string check;
    long order = 100;
    std::string format = "plain";
    bool include_degree_zero = false;
};

// Each command writes results to out and diagnostics to err, and returns the
// exit code. Nothing is written to out on a nonzero exit.
int cmd_coeffs(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_table(const CommandOptions& opts, std::ostream& out, std::ostream& err);

} // namespace orbiqc::cli
