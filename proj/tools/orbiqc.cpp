#include <iostream>

#include <CLI11.hpp>

#include "orbiqc/cli/commands.hpp"

namespace cli = orbiqc::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Cubic Gromov-Witten coefficients of elliptic orbifold projective lines"};
    app.require_subcommand(1);

    cli::CommandOptions opts;
    std::string orbifold;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", opts.order, "exact below q^N (default 100)");
    };

    auto* coeffs = app.add_subcommand("coeffs", "print the coefficients of one series");
    coeffs->add_option("--orbifold", orbifold, "333, 236 or 244");
    coeffs->add_option("--series", opts.series, "f0 f1 h0..h9 g0..g4 F G eta theta2 theta3")->required();
    coeffs->add_option("--format", opts.format, "plain, csv or json");
    coeffs->add_flag("--include-degree-zero", opts.include_degree_zero, "keep the constant term of g2");
    add_common(coeffs);

    auto* verify = app.add_subcommand("verify", "run one identity check");
    verify->add_option("--check", opts.check, "check name")->required();
    add_common(verify);

    auto* table = app.add_subcommand("table", "print the cubic potential coefficients of an orbifold");
    table->add_option("--orbifold", orbifold, "333, 236 or 244")->required();
    table->add_option("--format", opts.format, "plain, csv or json");
    table->add_flag("--include-degree-zero", opts.include_degree_zero, "keep the constant term of g2");
    add_common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_unknown;
    }
    if (!orbifold.empty())
        opts.orbifold = orbifold;

    if (coeffs->parsed())
        return cli::cmd_coeffs(opts, std::cout, std::cerr);
    if (verify->parsed())
        return cli::cmd_verify(opts, std::cout, std::cerr);
    return cli::cmd_table(opts, std::cout, std::cerr);
}
