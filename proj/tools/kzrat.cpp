#include "kzrat/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Options {
    kzrat::RunConfig config;
    bool symbolic = false;
    std::string format = "json";
    std::vector<std::string> files;
};

void add_output_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
    cmd->add_option("--out", o.config.out, "Write output to this file instead of stdout");
}

void add_system_flags(CLI::App* cmd, Options& o) {
    auto* sym = cmd->add_flag("--symbolic", o.symbolic, "Keep z1, z2 symbolic (default)");
    auto* z1 = cmd->add_option("--z1", o.config.z1, "Rational value of z1 (p, p/q or -p/q)");
    auto* z2 = cmd->add_option("--z2", o.config.z2, "Rational value of z2");
    z1->needs(z2)->excludes(sym);
    z2->needs(z1)->excludes(sym);
    cmd->add_option("--kmax", o.config.k_max, "Highest series order to generate")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational solutions of a three-point KZ system"};
    app.require_subcommand(1);
    Options o;

    auto* basis = app.add_subcommand("basis", "Construct and verify the rational basis solutions");
    add_system_flags(basis, o);
    add_output_flags(basis, o);
    basis->add_option("--seed", o.config.seed, "Which solutions to emit")
        ->check(CLI::IsMember({"w1", "w2", "w3", "all"}));

    auto* series = app.add_subcommand("series", "Print the series coefficients of one chain");
    add_system_flags(series, o);
    add_output_flags(series, o);
    series->add_option("--seed", o.config.seed, "Canonical seed")->check(CLI::IsMember({"w1", "w2", "w3"}));
    series->add_option("--order", o.config.order, "Order of an explicit seed");
    series->add_option("--vector", o.config.vector, "Explicit seed vector, e.g. \"0,1,-1\"");

    auto* verify = app.add_subcommand("verify", "Check the residual of solutions stored as JSON");
    verify->add_option("files", o.files, "Solution files")->required();
    add_output_flags(verify, o);

    auto* audit = app.add_subcommand("audit", "Compare computed values with the printed reference formulas");
    add_output_flags(audit, o);
    audit->add_option("--kmax", o.config.k_max, "Series length used by the audit")->capture_default_str();

    auto* indep = app.add_subcommand("independence", "Wronskian-type determinant of three stored solutions");
    indep->add_option("files", o.files, "Solution files holding three solutions in total")->required();
    add_output_flags(indep, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kzrat::ExitUsage;
    }

    return kzrat::run_guarded(
        [&] {
            o.config.format = kzrat::parse_format(o.format);
            if (*basis) return kzrat::cmd_basis(o.config, std::cout, std::cerr);
            if (*series) return kzrat::cmd_series(o.config, std::cout, std::cerr);
            if (*verify) return kzrat::cmd_verify(o.files, o.config, std::cout, std::cerr);
            if (*audit) return kzrat::cmd_audit(o.config, std::cout, std::cerr);
            return kzrat::cmd_independence(o.files, o.config, std::cout, std::cerr);
        },
        std::cerr);
}
