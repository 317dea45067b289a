#pragma once

/**
 * @file commands.hpp
 * @brief Implementations behind the CLI subcommands. Kept out of the binary
 *        so the exit-code and file-format contracts are directly testable.
 *
 * Exit codes: 0 success, 1 bad arguments, 2 solver hit the iteration cap,
 * 3 verification failure.
 */

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pentabeam/bands.hpp"
#include "pentabeam/explicit_inverse.hpp"
#include "pentabeam/fixed_point.hpp"
#include "pentabeam/norms.hpp"
#include "pentabeam/oracle.hpp"
#include "pentabeam/problem.hpp"
#include "pentabeam/report.hpp"

namespace pentabeam {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitVerifyFailure = 3;

namespace detail {

inline void write_record_file(const OutputRecord& record, const std::filesystem::path& path) {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_csv(record, file);
}

inline std::string bool_cell(bool v) { return v ? "true" : "false"; }

}  // namespace detail

struct SolveOptions {
    BoundaryKind bc = BoundaryKind::ClampedFree;
    int n = 0;
    double k = 1.0;
    NormKind p = NormKind::Inf;
    double tol = 1e-6;
    int max_iters = 10000;
    std::filesystem::path out = "solution.csv";
};

/// Runs the fixed-point solver; writes the solution CSV (columns i,x,u) and a
/// companion <out>.trace.json with the convergence history.
inline int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n < kMinUnknowns) {
        err << "error: --n must be >= 5\n";
        return kExitUsage;
    }
    if (!(opt.k > 0.0)) {
        err << "error: --k must be > 0\n";
        return kExitUsage;
    }
    if (!(opt.tol > 0.0)) {
        err << "error: --tol must be > 0\n";
        return kExitUsage;
    }
    if (opt.max_iters < 1) {
        err << "error: --max-iters must be >= 1\n";
        return kExitUsage;
    }

    const BeamProblem problem(opt.bc, opt.n, opt.k);
    IterationConfig config;
    config.p = opt.p;
    config.tol = opt.tol;
    config.max_iters = opt.max_iters;
    const IterationTrace trace = iterate(problem, config);

    OutputRecord record;
    record.command = "solve";
    record.add_parameter("bc", to_string(problem.bc));
    record.add_parameter("n", std::to_string(problem.n));
    record.add_parameter("k", format_double(problem.k));
    record.add_parameter("p", to_string(config.p));
    record.add_parameter("tol", format_double(config.tol));
    record.add_parameter("max_iters", std::to_string(config.max_iters));
    record.columns = {"i", "x", "u"};
    for (int i = 1; i <= problem.n; ++i)
        record.rows.push_back({std::to_string(i), format_double(i * problem.h),
                               format_double(trace.solution[i - 1])});
    detail::write_record_file(record, opt.out);

    std::filesystem::path trace_path = opt.out;
    trace_path.replace_extension();
    trace_path += ".trace.json";
    {
        std::ofstream file(trace_path);
        if (!file) throw std::runtime_error("cannot open " + trace_path.string() + " for writing");
        file << trace_to_json(problem, config, trace).dump(2) << "\n";
    }

    out << (trace.converged ? "converged" : "hit iteration cap") << " after " << trace.iterations
        << " iterations, observed max rate " << format_double(trace.observed_max_rate)
        << ", L_p " << format_double(lipschitz(problem, config.p).value) << "\n";
    out << "wrote " << opt.out.string() << " and " << trace_path.string() << "\n";
    return trace.converged ? kExitSuccess : kExitNoConvergence;
}

struct VerifyOptions {
    BoundaryKind bc = BoundaryKind::ClampedFree;
    int n_min = kMinUnknowns;
    int n_max = 64;
};

/// Compares the closed-form inverse against the elimination oracle for every
/// n in the range; for the clamped-clamped case also cross-checks the
/// Sherman-Morrison route. Prints the worst relative error per n.
inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n_min < kMinUnknowns) {
        err << "error: --n-min must be >= 5\n";
        return kExitUsage;
    }
    if (opt.n_max > kOracleMaxDimension) {
        err << "error: --n-max must be <= " << kOracleMaxDimension << "\n";
        return kExitUsage;
    }
    if (opt.n_min > opt.n_max) {
        err << "error: --n-min must be <= --n-max\n";
        return kExitUsage;
    }

    constexpr double kOracleTolerance = 1e-9;
    constexpr double kPathTolerance = 1e-10;
    std::vector<int> failures;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const DenseMatrix dense = assemble(BeamProblem(opt.bc, n, 1.0)).to_dense();
        const DenseMatrix reference = dense_invert(dense);
        const ExplicitInverse closed = explicit_inverse(opt.bc, n);
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                worst = std::max(worst, std::abs(closed.entries(i, j) - reference(i, j)) /
                                            std::abs(reference(i, j)));
        bool ok = worst <= kOracleTolerance;
        out << "bc=" << to_string(opt.bc) << " n=" << n << " max_rel_err=" << format_double(worst);
        if (opt.bc == BoundaryKind::ClampedClamped) {
            const ExplicitInverse sm = cc_inverse_sherman_morrison(n);
            double sm_worst = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sm_worst = std::max(sm_worst, std::abs(sm.entries(i, j) - closed.entries(i, j)) /
                                                      std::abs(closed.entries(i, j)));
            ok = ok && sm_worst <= kPathTolerance;
            out << " sm_rel_err=" << format_double(sm_worst);
        }
        out << "\n";
        if (!ok) failures.push_back(n);
    }
    if (!failures.empty()) {
        err << "verification failed for:";
        for (int n : failures) err << " (" << to_string(opt.bc) << ", " << n << ")";
        err << "\n";
        return kExitVerifyFailure;
    }
    return kExitSuccess;
}

struct NormsOptions {
    BoundaryKind bc = BoundaryKind::ClampedFree;
    int n = 0;
    double k = 1.0;
    std::optional<std::filesystem::path> out;
};

/// Emits the norm report for p in {1, 2, inf}: formula or sharp bound,
/// brute-force value from the materialized inverse, and the contraction
/// factor for the given load.
inline int cmd_norms(const NormsOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n < kMinUnknowns) {
        err << "error: --n must be >= 5\n";
        return kExitUsage;
    }
    if (!(opt.k > 0.0)) {
        err << "error: --k must be > 0\n";
        return kExitUsage;
    }

    const BeamProblem problem(opt.bc, opt.n, opt.k);
    const ExplicitInverse inv = explicit_inverse(opt.bc, opt.n);

    OutputRecord record;
    record.command = "norms";
    record.add_parameter("bc", to_string(opt.bc));
    record.add_parameter("n", std::to_string(opt.n));
    record.add_parameter("k", format_double(opt.k));
    record.columns = {"p", "value", "brute_force", "is_exact", "lipschitz", "guaranteed"};
    for (NormKind p : {NormKind::One, NormKind::Two, NormKind::Inf}) {
        const NormReport report = make_norm_report(problem, p, inv);
        record.rows.push_back({to_string(p), format_double(report.exact_or_bound),
                               format_double(report.brute_force), detail::bool_cell(report.is_exact),
                               format_double(report.lipschitz),
                               detail::bool_cell(report.lipschitz < 1.0)});
    }
    write_csv(record, out);
    if (opt.out) detail::write_record_file(record, *opt.out);
    return kExitSuccess;
}

struct TablesOptions {
    std::string which;
    std::filesystem::path out_dir = ".";
};

namespace detail {

inline OutputRecord rate_table(BoundaryKind bc, int n, const std::vector<double>& loads,
                               const std::string& command) {
    const InverseOperator op(bc, n);
    OutputRecord record;
    record.command = command;
    record.add_parameter("bc", to_string(bc));
    record.add_parameter("n", std::to_string(n));
    record.add_parameter("tol", format_double(1e-6));
    record.columns = {"k", "p", "observed_rate", "theoretical_rate"};
    for (double k : loads) {
        const BeamProblem problem(bc, n, k);
        for (NormKind p : {NormKind::One, NormKind::Two, NormKind::Inf}) {
            IterationConfig config;
            config.p = p;
            const IterationTrace trace = iterate(problem, config, &op);
            record.rows.push_back({format_double(k), to_string(p),
                                   format_double(trace.observed_max_rate),
                                   format_double(lipschitz(problem, p).value)});
        }
    }
    return record;
}

inline OutputRecord solution_profile(BoundaryKind bc, int n, double k) {
    const BeamProblem problem(bc, n, k);
    const IterationTrace trace = iterate(problem);
    OutputRecord record;
    record.command = "tables";
    record.add_parameter("bc", to_string(bc));
    record.add_parameter("n", std::to_string(n));
    record.add_parameter("k", format_double(k));
    record.add_parameter("p", "inf");
    record.add_parameter("tol", format_double(1e-6));
    record.columns = {"i", "x", "u"};
    for (int i = 1; i <= n; ++i)
        record.rows.push_back({std::to_string(i), format_double(i * problem.h),
                               format_double(trace.solution[i - 1])});
    return record;
}

}  // namespace detail

/// Regenerates the bundled study tables as CSV files in out_dir.
///
/// Selectors: 1/2 clamped-free rate grids (n = 50, 99), 3/4 clamped-clamped
/// rate grids (n = 49, 100), 5 the clamped-clamped norm table, fig1 the two
/// solution profiles at K = 1, fig23 the even-n norm-versus-bound study over
/// n in [10, 1000].
inline int cmd_tables(const TablesOptions& opt, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    const auto emit = [&](const OutputRecord& record, const std::string& name) {
        fs::create_directories(opt.out_dir);
        const fs::path path = opt.out_dir / name;
        detail::write_record_file(record, path);
        out << "wrote " << path.string() << "\n";
    };

    if (opt.which == "1" || opt.which == "2") {
        const int n = opt.which == "1" ? 50 : 99;
        emit(detail::rate_table(BoundaryKind::ClampedFree, n, {0.125, 1.0, 8.0}, "tables"),
             "table" + opt.which + ".csv");
    } else if (opt.which == "3" || opt.which == "4") {
        const int n = opt.which == "3" ? 49 : 100;
        emit(detail::rate_table(BoundaryKind::ClampedClamped, n, {0.125, 1.0, 8.0, 32.0, 128.0},
                                "tables"),
             "table" + opt.which + ".csv");
    } else if (opt.which == "5") {
        OutputRecord record;
        record.command = "tables";
        record.add_parameter("bc", "cc");
        record.columns = {"n", "norm_1", "norm_2", "norm_inf", "upper_bound"};
        for (int n : {49, 50, 99, 100, 150}) {
            const ExplicitInverse inv = cc_inverse(n);
            record.rows.push_back({std::to_string(n),
                                   format_double(brute_force_norm(inv, NormKind::One)),
                                   format_double(brute_force_norm(inv, NormKind::Two)),
                                   format_double(brute_force_norm(inv, NormKind::Inf)),
                                   format_double(cc_norm_bound(n, NormKind::One).sharp)});
        }
        emit(record, "table5.csv");
    } else if (opt.which == "fig1") {
        emit(detail::solution_profile(BoundaryKind::ClampedFree, 100, 1.0), "fig1_cf.csv");
        emit(detail::solution_profile(BoundaryKind::ClampedClamped, 100, 1.0), "fig1_cc.csv");
    } else if (opt.which == "fig23") {
        OutputRecord record;
        record.command = "tables";
        record.add_parameter("bc", "cc");
        record.add_parameter("n_min", "10");
        record.add_parameter("n_max", "1000");
        record.columns = {"n", "p", "norm", "bound", "relative_error"};
        for (int n = 10; n <= 1000; n += 2) {
            const ExplicitInverse inv = cc_inverse(n);
            const double bound = cc_norm_bound(n, NormKind::One).sharp;
            for (NormKind p : {NormKind::One, NormKind::Two}) {
                const double norm = brute_force_norm(inv, p);
                record.rows.push_back({std::to_string(n), to_string(p), format_double(norm),
                                       format_double(bound),
                                       format_double(std::abs(norm - bound) / norm)});
            }
        }
        emit(record, "fig23.csv");
    } else {
        err << "error: unknown table selector '" << opt.which << "'\n";
        return kExitUsage;
    }
    return kExitSuccess;
}

}  // namespace pentabeam
