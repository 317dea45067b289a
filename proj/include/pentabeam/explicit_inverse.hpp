#pragma once

/**
 * @file explicit_inverse.hpp
 * @brief Closed-form inverse entries of the beam matrices, evaluated without
 *        numerical linear algebra.
 *
 * Clamped-free: with B = A^{-1} (1-based indices),
 *
 *   b(i,j) = (3 i j^2 + j - j^3) / 6      for j <= i, j <= n-1,
 *   b(i,n) = b(n,i) / 2                   for i < n,
 *   b(n,n) = n (2 n^2 + 1) / 12,
 *   b(i,j) = b(j,i)                       for i, j <= n-1.
 *
 * Clamped-clamped: with alpha = n+1-i, beta = j*alpha / (6(n+1)(n^2+2n+3)),
 * eps = 3 (1 + alpha(n+1)) (1 + (i-j) j),
 *
 *   a^{-1}(i,j) = beta (eps + (j^2 - 1)(2 alpha^2 + 1))   for i >= j,
 *
 * and symmetric otherwise. The same inverse is also reachable through the
 * rank-two factorization A = T^2 + U U^t: a Sherman-Morrison update of the
 * tridiagonal inverse
 *
 *   A^{-1} = T^{-1} (I - T^{-1}U (I_2 + U^t T^{-2} U)^{-1} (T^{-1}U)^t) T^{-1},
 *
 * kept as an independent verification path.
 *
 * Cubic integer numerators are formed in 64-bit integers and converted once,
 * so the cancellation-prone terms are exact at any size this library targets.
 */

#include <cassert>
#include <cstdint>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentabeam/dense_matrix.hpp"
#include "pentabeam/problem.hpp"

namespace pentabeam {

/// Which evaluation route produced a materialized inverse.
enum class InversePath { ClosedForm, ShermanMorrison };

/// Densely materialized inverse with its provenance.
struct ExplicitInverse {
    BoundaryKind bc;
    int n;
    InversePath path;
    DenseMatrix entries;
};

namespace detail {

inline void check_index(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for dimension " + std::to_string(n));
}

inline void check_min_dimension(int n) {
    if (n < kMinUnknowns) throw std::invalid_argument("n must be >= 5");
}

}  // namespace detail

/// Clamped-free inverse entry, 1-based indices.
inline double cf_inverse_entry(int n, int i, int j) {
    detail::check_min_dimension(n);
    detail::check_index(n, i, j);
    const auto ni = static_cast<std::int64_t>(n);
    if (i == n && j == n) return static_cast<double>(ni * (2 * ni * ni + 1)) / 12.0;
    if (j == n) {
        // half of the mirrored last-row entry
        const auto ii = static_cast<std::int64_t>(i);
        return static_cast<double>(ii * ii * (3 * ni - ii) + ii) / 12.0;
    }
    if (i < j) std::swap(i, j);  // symmetric block, both indices <= n-1 here
    const auto ii = static_cast<std::int64_t>(i);
    const auto jj = static_cast<std::int64_t>(j);
    return static_cast<double>(jj * jj * (3 * ii - jj) + jj) / 6.0;
}

/// Entry of tridiag(-1, 2, -1)^{-1}, 1-based indices.
inline double t_inverse_entry(int n, int i, int j) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    detail::check_index(n, i, j);
    if (i < j) std::swap(i, j);
    return static_cast<double>(j) * (n - (i - 1)) / (n + 1);
}

/// Clamped-clamped inverse entry, 1-based indices.
inline double cc_inverse_entry(int n, int i, int j) {
    detail::check_min_dimension(n);
    detail::check_index(n, i, j);
    if (i < j) std::swap(i, j);
    const auto ii = static_cast<std::int64_t>(i);
    const auto jj = static_cast<std::int64_t>(j);
    const std::int64_t alpha = n + 1 - ii;
    const std::int64_t eps_left = 1 + alpha * (n + 1);
    const std::int64_t eps_right = 1 + (ii - jj) * jj;
    const double eps = 3.0 * static_cast<double>(eps_left) * static_cast<double>(eps_right);
    // same quantity, regrouped; catches transcription slips in the factors
    assert(eps == 3.0 * static_cast<double>(1 + alpha + n * alpha) *
                      static_cast<double>(1 + ii * jj - jj * jj));
    const double tail =
        static_cast<double>(jj * jj - 1) * static_cast<double>(2 * alpha * alpha + 1);
    const double scale = static_cast<double>(jj * alpha) /
                         (6.0 * (n + 1.0) * (static_cast<double>(n) * n + 2.0 * n + 3.0));
    return scale * (eps + tail);
}

/// Dispatch on boundary condition, 1-based indices.
inline double inverse_entry(BoundaryKind bc, int n, int i, int j) {
    return bc == BoundaryKind::ClampedFree ? cf_inverse_entry(n, i, j) : cc_inverse_entry(n, i, j);
}

inline ExplicitInverse cf_inverse(int n) {
    detail::check_min_dimension(n);
    DenseMatrix entries(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) entries(i - 1, j - 1) = cf_inverse_entry(n, i, j);
    return {BoundaryKind::ClampedFree, n, InversePath::ClosedForm, std::move(entries)};
}

inline ExplicitInverse cc_inverse(int n) {
    detail::check_min_dimension(n);
    DenseMatrix entries(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) entries(i - 1, j - 1) = cc_inverse_entry(n, i, j);
    return {BoundaryKind::ClampedClamped, n, InversePath::ClosedForm, std::move(entries)};
}

inline ExplicitInverse explicit_inverse(BoundaryKind bc, int n) {
    return bc == BoundaryKind::ClampedFree ? cf_inverse(n) : cc_inverse(n);
}

/// Coefficients of the correction block M = (I + T^{-1}U (T^{-1}U)^t)^{-1}:
/// off-diagonal entries are the quadratic q0 + q1 (i+j) + q2 i j, diagonal
/// entries add one to it. M is symmetric and persymmetric with positive
/// diagonal.
struct MMatrixBlock {
    int n;
    double q0, q1, q2;

    double off_diagonal(int i, int j) const {
        return q0 + q1 * (i + j) + q2 * static_cast<double>(i) * j;
    }
    double diagonal(int i) const { return 1.0 + off_diagonal(i, i); }
    double entry(int i, int j) const { return i == j ? diagonal(i) : off_diagonal(i, j); }
};

inline MMatrixBlock m_block(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double s = static_cast<double>(n) * n + 2.0 * n + 3.0;
    return {n,
            -(4.0 * n * n + 8.0 * n + 6.0) / ((n + 1.0) * s),
            6.0 / s,
            -12.0 / ((n + 1.0) * s)};
}

/// Clamped-clamped inverse through the rank-two update route. Agrees with the
/// closed-form entries to rounding; kept as the independent derivation path.
inline ExplicitInverse cc_inverse_sherman_morrison(int n) {
    detail::check_min_dimension(n);
    DenseMatrix tinv(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) tinv(i - 1, j - 1) = t_inverse_entry(n, i, j);

    // W = T^{-1} U has the two closed-form columns sqrt(2)/(n+1) * (n..1) and
    // sqrt(2)/(n+1) * (1..n).
    const double w_scale = std::sqrt(2.0) / (n + 1);
    std::vector<double> w0(n), w1(n);
    for (int k = 1; k <= n; ++k) {
        w0[k - 1] = w_scale * (n - (k - 1));
        w1[k - 1] = w_scale * k;
    }

    // 2x2 capacitance inverse (I_2 + U^t T^{-2} U)^{-1} = [[a, b], [b, a]]
    const double nd = n;
    const double tau = (2.0 * nd * nd * nd + 3.0 * nd * nd + nd) / 6.0;
    const double gamma = (nd + 1.0) * (nd + 1.0) / 2.0;
    const double delta = (nd + 1.0) * (nd + 1.0) * (nd * nd + 2.0 * nd + 3.0) / 6.0;
    const double a = (gamma + tau) / delta;
    const double b = (tau - gamma * nd) / delta;

    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const double c0 = a * w0[i] + b * w1[i];
        const double c1 = b * w0[i] + a * w1[i];
        for (int j = 0; j < n; ++j) m(i, j) = (i == j ? 1.0 : 0.0) - (c0 * w0[j] + c1 * w1[j]);
    }

    DenseMatrix entries = multiply(multiply(tinv, m), tinv);
    return {BoundaryKind::ClampedClamped, n, InversePath::ShermanMorrison, std::move(entries)};
}

inline constexpr int kDefaultMaterializeCap = 4096;

/// Applies A^{-1} as an operator. Materializes the dense inverse up to the
/// given cap (O(n^2) memory); above the cap each matvec streams the
/// closed-form entries row by row, never storing the matrix.
class InverseOperator {
public:
    InverseOperator(BoundaryKind bc, int n, int materialize_cap = kDefaultMaterializeCap)
        : bc_(bc), n_(n) {
        detail::check_min_dimension(n);
        if (n <= materialize_cap) dense_.emplace(explicit_inverse(bc, n).entries);
    }

    BoundaryKind bc() const { return bc_; }
    int size() const { return n_; }
    bool materialized() const { return dense_.has_value(); }

    /// Inverse entry, 1-based indices.
    double entry(int i, int j) const {
        if (dense_) {
            detail::check_index(n_, i, j);
            return (*dense_)(i - 1, j - 1);
        }
        return inverse_entry(bc_, n_, i, j);
    }

    /// y = A^{-1} x
    std::vector<double> apply(std::span<const double> x) const {
        if (dense_) return matvec(*dense_, x);
        if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("dimension mismatch in apply");
        std::vector<double> y(n_, 0.0);
        for (int i = 1; i <= n_; ++i) {
            double s = 0.0;
            for (int j = 1; j <= n_; ++j) s += inverse_entry(bc_, n_, i, j) * x[j - 1];
            y[i - 1] = s;
        }
        return y;
    }

    /// y = A^{-t} x
    std::vector<double> apply_transpose(std::span<const double> x) const {
        if (dense_) return matvec_transpose(*dense_, x);
        if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("dimension mismatch in apply");
        std::vector<double> y(n_, 0.0);
        for (int j = 1; j <= n_; ++j) {
            double s = 0.0;
            for (int i = 1; i <= n_; ++i) s += inverse_entry(bc_, n_, i, j) * x[i - 1];
            y[j - 1] = s;
        }
        return y;
    }

private:
    BoundaryKind bc_;
    int n_;
    std::optional<DenseMatrix> dense_;
};

}  // namespace pentabeam
