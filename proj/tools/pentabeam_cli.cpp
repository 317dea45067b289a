// Command-line front end: solve / verify / norms / tables.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pentabeam/commands.hpp"

namespace {

constexpr const char* kDescription =
    "Pentadiagonal beam-equation toolkit: explicit inverses, norms, and the "
    "fixed-point solver for A u = h^4 K exp(-u)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{kDescription};
    app.require_subcommand(1);

    std::string bc = "cf";
    std::string p = "inf";

    pentabeam::SolveOptions solve_opt;
    std::string solve_out = "solution.csv";
    auto* solve = app.add_subcommand("solve", "run the fixed-point solver, write solution CSV and trace JSON");
    solve->add_option("--bc", bc, "boundary condition")->required()->check(CLI::IsMember({"cf", "cc"}));
    solve->add_option("--n", solve_opt.n, "number of unknowns (>= 5)")->required();
    solve->add_option("--k", solve_opt.k, "load constant (> 0)");
    solve->add_option("--p", p, "norm for the stopping rule")->check(CLI::IsMember({"1", "2", "inf"}));
    solve->add_option("--tol", solve_opt.tol, "stopping threshold");
    solve->add_option("--max-iters", solve_opt.max_iters, "iteration cap");
    solve->add_option("--out", solve_out, "solution CSV path");

    pentabeam::VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "closed-form inverse vs elimination oracle over a range of n");
    verify->add_option("--bc", bc, "boundary condition")->required()->check(CLI::IsMember({"cf", "cc"}));
    verify->add_option("--n-min", verify_opt.n_min, "smallest dimension");
    verify->add_option("--n-max", verify_opt.n_max, "largest dimension");

    pentabeam::NormsOptions norms_opt;
    std::string norms_out;
    auto* norms = app.add_subcommand("norms", "norm report for p in {1,2,inf}");
    norms->add_option("--bc", bc, "boundary condition")->required()->check(CLI::IsMember({"cf", "cc"}));
    norms->add_option("--n", norms_opt.n, "number of unknowns (>= 5)")->required();
    norms->add_option("--k", norms_opt.k, "load constant for the contraction factor");
    norms->add_option("--out", norms_out, "also write the report to this CSV file");

    pentabeam::TablesOptions tables_opt;
    auto* tables = app.add_subcommand("tables", "regenerate study tables (1-5, fig1, fig23) as CSV");
    tables->add_option("which", tables_opt.which, "table selector")->required();
    tables->add_option("--out-dir", tables_opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pentabeam::kExitUsage;
    }

    try {
        if (solve->parsed()) {
            solve_opt.bc = pentabeam::parse_boundary_kind(bc);
            solve_opt.p = pentabeam::parse_norm_kind(p);
            solve_opt.out = solve_out;
            return pentabeam::cmd_solve(solve_opt, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            verify_opt.bc = pentabeam::parse_boundary_kind(bc);
            return pentabeam::cmd_verify(verify_opt, std::cout, std::cerr);
        }
        if (norms->parsed()) {
            norms_opt.bc = pentabeam::parse_boundary_kind(bc);
            if (!norms_out.empty()) norms_opt.out = norms_out;
            return pentabeam::cmd_norms(norms_opt, std::cout, std::cerr);
        }
        return pentabeam::cmd_tables(tables_opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pentabeam::kExitUsage;
    }
}
