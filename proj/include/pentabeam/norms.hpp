#pragma once

/**
 * @file norms.hpp
 * @brief Induced p-norms of the inverse beam matrices: closed formulas where
 *        they exist, sharp bounds otherwise, and brute-force evaluation from
 *        the materialized entries as a cross-check.
 *
 * Clamped-free (exact):   ||A^{-1}||_1 = (n^4 - n^2)/8,
 *                         ||A^{-1}||_inf = (n^4 + n^2)/8,
 *                         ||A^{-1}||_2 <= sqrt(n^8 - n^4)/8   (Hoelder).
 *
 * Clamped-clamped:        ||A^{-1}||_p <= (n+1)^2 ((n+1)^2 + 8)/384,
 *                         with equality for odd n and p in {1, inf};
 *                         the coarser (n+1)^4/32 bound is kept for comparison.
 *
 * The contraction factor of the fixed-point map is L_p = h^4 K ||A^{-1}||_p;
 * L_p < 1 guarantees convergence.
 */

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pentabeam/explicit_inverse.hpp"
#include "pentabeam/problem.hpp"

namespace pentabeam {

enum class NormKind { One, Two, Inf };

inline std::string to_string(NormKind p) {
    switch (p) {
        case NormKind::One: return "1";
        case NormKind::Two: return "2";
        default: return "inf";
    }
}

inline NormKind parse_norm_kind(std::string_view text) {
    if (text == "1") return NormKind::One;
    if (text == "2") return NormKind::Two;
    if (text == "inf") return NormKind::Inf;
    throw std::invalid_argument("p must be 1, 2 or inf");
}

inline double vector_norm(std::span<const double> x, NormKind p) {
    double s = 0.0;
    switch (p) {
        case NormKind::One:
            for (double v : x) s += std::abs(v);
            return s;
        case NormKind::Two:
            for (double v : x) s += v * v;
            return std::sqrt(s);
        default:
            for (double v : x) s = std::max(s, std::abs(v));
            return s;
    }
}

struct NormFormula {
    double value;
    bool is_exact;
};

/// Clamped-free norm of the inverse: exact for p in {1, inf}, Hoelder bound
/// for p = 2.
inline NormFormula cf_norm_formula(int n, NormKind p) {
    detail::check_min_dimension(n);
    const double n2 = static_cast<double>(n) * n;
    const double n4 = n2 * n2;
    switch (p) {
        case NormKind::One: return {(n4 - n2) / 8.0, true};
        case NormKind::Inf: return {(n4 + n2) / 8.0, true};
        default: return {n2 * std::sqrt(n4 - 1.0) / 8.0, false};
    }
}

struct CcNormBound {
    double sharp;    ///< (n+1)^2 ((n+1)^2 + 8) / 384
    bool is_exact;   ///< true iff n odd and p in {1, inf}
    double coarse;   ///< (n+1)^4 / 32
};

inline CcNormBound cc_norm_bound(int n, NormKind p) {
    detail::check_min_dimension(n);
    const double m2 = (n + 1.0) * (n + 1.0);
    return {m2 * (m2 + 8.0) / 384.0, n % 2 == 1 && p != NormKind::Two, m2 * m2 / 32.0};
}

inline std::vector<double> column_abs_sums(const ExplicitInverse& inv) {
    std::vector<double> sums(inv.n, 0.0);
    for (int i = 0; i < inv.n; ++i)
        for (int j = 0; j < inv.n; ++j) sums[j] += std::abs(inv.entries(i, j));
    return sums;
}

inline std::vector<double> row_abs_sums(const ExplicitInverse& inv) {
    std::vector<double> sums(inv.n, 0.0);
    for (int i = 0; i < inv.n; ++i)
        for (int j = 0; j < inv.n; ++j) sums[i] += std::abs(inv.entries(i, j));
    return sums;
}

struct SpectralEstimate {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Largest singular value by power iteration on M^t M, started from the
/// all-ones direction. Deterministic; reports the best estimate with a flag
/// when the iteration cap is hit.
inline SpectralEstimate spectral_norm(const DenseMatrix& m, double rel_tol = 1e-8,
                                      int max_iters = 10000) {
    const int n = m.size();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double previous = 0.0;
    for (int it = 1; it <= max_iters; ++it) {
        const std::vector<double> y = matvec(m, x);
        std::vector<double> z = matvec_transpose(m, y);
        const double zn = vector_norm(z, NormKind::Two);
        if (zn == 0.0) return {0.0, true, it};
        const double estimate = std::sqrt(zn);
        if (it > 1 && std::abs(estimate - previous) <= rel_tol * estimate)
            return {estimate, true, it};
        previous = estimate;
        for (double& v : z) v /= zn;
        x = std::move(z);
    }
    return {previous, false, max_iters};
}

/// Norm computed from the materialized entries: column/row sums for p = 1 and
/// p = inf, power iteration for p = 2.
inline double brute_force_norm(const ExplicitInverse& inv, NormKind p) {
    switch (p) {
        case NormKind::One: {
            double best = 0.0;
            for (double s : column_abs_sums(inv)) best = std::max(best, s);
            return best;
        }
        case NormKind::Inf: {
            double best = 0.0;
            for (double s : row_abs_sums(inv)) best = std::max(best, s);
            return best;
        }
        default: return spectral_norm(inv.entries).value;
    }
}

struct LipschitzBound {
    double value;        ///< h^4 K * (norm value or sharp bound)
    bool guaranteed;     ///< value < 1: the fixed-point map is a contraction
    double norm_value;
    bool norm_is_exact;
};

inline LipschitzBound lipschitz(const BeamProblem& problem, NormKind p) {
    double norm_value;
    bool exact;
    if (problem.bc == BoundaryKind::ClampedFree) {
        const NormFormula f = cf_norm_formula(problem.n, p);
        norm_value = f.value;
        exact = f.is_exact;
    } else {
        const CcNormBound b = cc_norm_bound(problem.n, p);
        norm_value = b.sharp;
        exact = b.is_exact;
    }
    const double h2 = problem.h * problem.h;
    const double value = h2 * h2 * problem.k * norm_value;
    return {value, value < 1.0, norm_value, exact};
}

/// One row of the norm study: formula (or bound) against brute force, plus
/// the contraction factor for the problem's load.
struct NormReport {
    BoundaryKind bc;
    int n;
    NormKind p;
    double exact_or_bound;
    double brute_force;
    bool is_exact;
    double lipschitz;
    double k;
};

inline NormReport make_norm_report(const BeamProblem& problem, NormKind p,
                                   const ExplicitInverse& inv) {
    const LipschitzBound l = lipschitz(problem, p);
    return {problem.bc, problem.n,       p, l.norm_value, brute_force_norm(inv, p),
            l.norm_is_exact, l.value, problem.k};
}

}  // namespace pentabeam
