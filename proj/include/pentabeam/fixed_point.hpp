#pragma once

/**
 * @file fixed_point.hpp
 * @brief Fixed-point iteration u = h^4 K A^{-1} exp(-u) for the discrete
 *        nonlinear beam equation A u = h^4 K exp(-u).
 *
 * Each step is a single multiply by the explicit inverse; no linear system is
 * solved. Since the inverse is entrywise positive, every iterate stays
 * positive whenever the initial guess is positive, and the iteration
 * contracts at factor L_p = h^4 K ||A^{-1}||_p when L_p < 1.
 */

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pentabeam/bands.hpp"
#include "pentabeam/explicit_inverse.hpp"
#include "pentabeam/norms.hpp"
#include "pentabeam/problem.hpp"

namespace pentabeam {

/// Default uniform initial guess. Kept moderate: the transient of the first
/// few steps, and with it the observed maximum rate, is sensitive to how far
/// the start sits from the solution.
inline constexpr double kDefaultInitialGuess = 1.0 / 3.0;

struct IterationConfig {
    NormKind p = NormKind::Inf;  ///< norm for the stopping rule and recorded diffs
    double tol = 1e-6;
    int max_iters = 10000;
    /// Componentwise-positive start; defaults to kDefaultInitialGuess * ones.
    std::optional<std::vector<double>> initial_guess;
};

/// Record of one run. diffs[l] = ||u^{l+1} - u^l||_p for l = 0, 1, ... with
/// u^0 the initial guess; rates[l] = diffs[l+1] / diffs[l]. The observed
/// maximum rate is the max over all recorded rates (0 when fewer than two
/// diffs exist).
struct IterationTrace {
    std::vector<double> diffs;
    std::vector<double> rates;
    double observed_max_rate = 0.0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> solution;
};

inline IterationTrace iterate(const BeamProblem& problem, const IterationConfig& config = {},
                              const InverseOperator* reuse = nullptr) {
    if (!(config.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (config.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");

    std::vector<double> u;
    if (config.initial_guess) {
        u = *config.initial_guess;
        if (static_cast<int>(u.size()) != problem.n)
            throw std::invalid_argument("initial guess length must equal n");
        for (double v : u)
            if (!(v > 0.0)) throw std::invalid_argument("initial guess must be strictly positive");
    } else {
        u.assign(problem.n, kDefaultInitialGuess);
    }

    std::optional<InverseOperator> own;
    if (reuse == nullptr) own.emplace(problem.bc, problem.n);
    const InverseOperator& op = reuse ? *reuse : *own;
    if (op.size() != problem.n || op.bc() != problem.bc)
        throw std::invalid_argument("inverse operator does not match the problem");

    const double h2 = problem.h * problem.h;
    const double scale = h2 * h2 * problem.k;

    IterationTrace trace;
    std::vector<double> load(problem.n), step(problem.n);
    for (int l = 1; l <= config.max_iters; ++l) {
        for (int i = 0; i < problem.n; ++i) load[i] = std::exp(-u[i]);
        std::vector<double> next = op.apply(load);
        for (double& v : next) v *= scale;
        for (int i = 0; i < problem.n; ++i) step[i] = next[i] - u[i];
        const double diff = vector_norm(step, config.p);
        trace.diffs.push_back(diff);
        u = std::move(next);
        if (diff < config.tol) {
            trace.converged = true;
            break;
        }
    }
    trace.iterations = static_cast<int>(trace.diffs.size());
    trace.solution = std::move(u);
    for (std::size_t l = 0; l + 1 < trace.diffs.size(); ++l) {
        const double rate = trace.diffs[l + 1] / trace.diffs[l];
        trace.rates.push_back(rate);
        trace.observed_max_rate = std::max(trace.observed_max_rate, rate);
    }
    return trace;
}

/// True iff the profile rises strictly from the clamped end and its first
/// differences grow, i.e. u_1 < u_2 - u_1 < u_3 - u_2 < ... (the clamped end
/// contributes the implicit u_0 = 0).
inline bool check_monotone_cf(std::span<const double> solution) {
    if (solution.empty()) return false;
    double previous_diff = solution[0];
    if (!(previous_diff > 0.0)) return false;
    for (std::size_t i = 1; i < solution.size(); ++i) {
        const double diff = solution[i] - solution[i - 1];
        if (!(diff > 0.0)) return false;
        if (!(diff > previous_diff)) return false;
        previous_diff = diff;
    }
    return true;
}

/// ||A u - h^4 K exp(-u)||_p via the banded matvec, never the inverse.
inline double residual(const BeamProblem& problem, std::span<const double> solution,
                       NormKind p = NormKind::Inf) {
    if (static_cast<int>(solution.size()) != problem.n)
        throw std::invalid_argument("solution length must equal n");
    const PentaBands bands = assemble(problem);
    std::vector<double> r = matvec(bands, solution);
    const double h2 = problem.h * problem.h;
    const double scale = h2 * h2 * problem.k;
    for (int i = 0; i < problem.n; ++i) r[i] -= scale * std::exp(-solution[i]);
    return vector_norm(r, p);
}

}  // namespace pentabeam
