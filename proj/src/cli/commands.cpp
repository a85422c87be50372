#include "orbiqc/cli/commands.hpp"

#include <ostream>
#include <sstream>

#include "orbiqc/cli/emit.hpp"
#include "orbiqc/gw.hpp"
#include "orbiqc/modforms.hpp"
#include "orbiqc/verify.hpp"

namespace orbiqc::cli {

namespace {

std::optional<QSeries> modular_series(const std::string& name, long order)
{
    if (name == "F")
        return theta_F(order);
    if (name == "G")
        return theta_G(order);
    if (name == "eta")
        return eta_series(order);
    if (name == "theta2")
        return theta2(order);
    if (name == "theta3")
        return theta3(order);
    return std::nullopt;
}

bool check_order(long order, std::ostream& err)
{
    if (order >= 1)
        return true;
    err << "error: --order must be >= 1, got " << order << "\n";
    return false;
}

} // namespace

int cmd_coeffs(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    std::optional<Format> format = parse_format(opts.format);
    if (!format) {
        err << "error: unknown format '" << opts.format << "'\n";
        return exit_unknown;
    }
    std::optional<Orbifold> orbifold;
    if (opts.orbifold) {
        orbifold = parse_orbifold(*opts.orbifold);
        if (!orbifold) {
            err << "error: unknown orbifold '" << *opts.orbifold << "'\n";
            return exit_unknown;
        }
    }

    bool modular = opts.series == "F" || opts.series == "G" || opts.series == "eta" || opts.series == "theta2" ||
                   opts.series == "theta3";
    std::optional<CorrelatorKey> key;
    if (!modular) {
        key = catalog_key(opts.series);
        if (!key || (orbifold && key->orbifold != *orbifold)) {
            err << "error: unknown series '" << opts.series << "'";
            if (orbifold)
                err << " for orbifold " << name(*orbifold);
            err << "\n";
            return exit_unknown;
        }
    }
    if (!check_order(opts.order, err))
        return exit_invalid_order;

    SeriesBlock block;
    if (modular) {
        block = make_block(opts.series, "exact", *modular_series(opts.series, opts.order));
    } else {
        CorrelatorSeries c = correlator(*key, opts.order, {opts.include_degree_zero});
        block = make_block(c.name, std::string(name(c.status)), c.series);
    }
    emit(out, {block}, *format, false);
    return exit_ok;
}

int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    bool known = false;
    for (const auto& n : check_names())
        known = known || n == opts.check;
    if (!known) {
        err << "error: unknown check '" << opts.check << "'; expected one of";
        for (const auto& n : check_names())
            err << " " << n;
        err << "\n";
        return exit_unknown;
    }
    if (!check_order(opts.order, err))
        return exit_invalid_order;

    CheckReport r = *run_check(opts.check, opts.order);
    if (!r.passed) {
        err << r.check << ": FAILED";
        if (r.discrepancy)
            err << " at exponent " << to_string(r.discrepancy->exponent) << ": lhs " << to_string(r.discrepancy->lhs)
                << ", rhs " << to_string(r.discrepancy->rhs);
        err << "\n  " << r.detail << "\n";
        return exit_discrepancy;
    }
    out << r.check << ": verified through order " << r.verified_through;
    if (r.conjectural)
        out << " (uses conjectural h8, h9)";
    out << "\n";
    return exit_ok;
}

int cmd_table(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    std::optional<Format> format = parse_format(opts.format);
    if (!format) {
        err << "error: unknown format '" << opts.format << "'\n";
        return exit_unknown;
    }
    if (!opts.orbifold) {
        err << "error: table needs --orbifold 333|236|244\n";
        return exit_unknown;
    }
    std::optional<Orbifold> orbifold = parse_orbifold(*opts.orbifold);
    if (!orbifold) {
        err << "error: unknown orbifold '" << *opts.orbifold << "'\n";
        return exit_unknown;
    }
    if (!check_order(opts.order, err))
        return exit_invalid_order;

    std::vector<SeriesBlock> blocks;
    for (const auto& e : potential_cubic_table(*orbifold, opts.order, {opts.include_degree_zero}))
        blocks.push_back(make_block(e.correlator.name, std::string(name(e.correlator.status)), e.correlator.series));
    emit(out, blocks, *format, true);
    return exit_ok;
}

} // namespace orbiqc::cli
