#pragma once

/**
 * @file oracle.hpp
 * @brief Reference dense linear algebra: Gaussian elimination with partial
 *        pivoting, written to be checked by eye rather than to be fast.
 *
 * Every closed-form result in this library is validated against these
 * routines. Dimension is capped at kOracleMaxDimension since the cost is
 * O(n^3).
 */

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentabeam/dense_matrix.hpp"

namespace pentabeam {

inline constexpr int kOracleMaxDimension = 1024;
inline constexpr double kPivotTolerance = 1e-12;

/// Thrown when elimination meets a pivot below kPivotTolerance * ||M||_inf.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(int column_one_based, double pivot)
        : std::runtime_error("singular matrix: pivot " + std::to_string(pivot) +
                             " too small in column " + std::to_string(column_one_based)),
          column(column_one_based) {}

    int column;
};

namespace detail {

// Eliminates in place on an n x (n + extra) augmented matrix stored row-major.
// Partial pivoting by max absolute value in the column; rows are swapped
// explicitly. Leaves the left block upper triangular.
inline void forward_eliminate(std::vector<double>& aug, int n, int cols, double pivot_floor) {
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double pivot_mag = std::abs(aug[static_cast<std::size_t>(k) * cols + k]);
        for (int r = k + 1; r < n; ++r) {
            const double mag = std::abs(aug[static_cast<std::size_t>(r) * cols + k]);
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag <= pivot_floor) throw SingularMatrixError(k + 1, pivot_mag);
        if (pivot_row != k) {
            for (int c = 0; c < cols; ++c)
                std::swap(aug[static_cast<std::size_t>(k) * cols + c],
                          aug[static_cast<std::size_t>(pivot_row) * cols + c]);
        }
        const double pivot = aug[static_cast<std::size_t>(k) * cols + k];
        for (int r = k + 1; r < n; ++r) {
            const double factor = aug[static_cast<std::size_t>(r) * cols + k] / pivot;
            if (factor == 0.0) continue;
            for (int c = k; c < cols; ++c)
                aug[static_cast<std::size_t>(r) * cols + c] -= factor * aug[static_cast<std::size_t>(k) * cols + c];
        }
    }
}

inline void back_substitute(std::vector<double>& aug, int n, int cols, int extra) {
    for (int k = n - 1; k >= 0; --k) {
        const double pivot = aug[static_cast<std::size_t>(k) * cols + k];
        for (int e = 0; e < extra; ++e) {
            double s = aug[static_cast<std::size_t>(k) * cols + n + e];
            for (int j = k + 1; j < n; ++j)
                s -= aug[static_cast<std::size_t>(k) * cols + j] * aug[static_cast<std::size_t>(j) * cols + n + e];
            aug[static_cast<std::size_t>(k) * cols + n + e] = s / pivot;
        }
    }
}

inline void check_oracle_dimension(int n) {
    if (n > kOracleMaxDimension)
        throw std::invalid_argument("oracle dimension capped at " + std::to_string(kOracleMaxDimension));
}

}  // namespace detail

/// Invert m by elimination on [m | I].
inline DenseMatrix dense_invert(const DenseMatrix& m) {
    const int n = m.size();
    detail::check_oracle_dimension(n);
    const int cols = 2 * n;
    std::vector<double> aug(static_cast<std::size_t>(n) * cols, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i) * cols + j] = m(i, j);
        aug[static_cast<std::size_t>(i) * cols + n + i] = 1.0;
    }
    const double floor = kPivotTolerance * inf_norm(m);
    detail::forward_eliminate(aug, n, cols, floor);
    detail::back_substitute(aug, n, cols, n);
    DenseMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug[static_cast<std::size_t>(i) * cols + n + j];
    return inv;
}

/// Solve m x = rhs by elimination on [m | rhs].
inline std::vector<double> dense_solve(const DenseMatrix& m, std::span<const double> rhs) {
    const int n = m.size();
    detail::check_oracle_dimension(n);
    if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("rhs length must match matrix dimension");
    const int cols = n + 1;
    std::vector<double> aug(static_cast<std::size_t>(n) * cols, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i) * cols + j] = m(i, j);
        aug[static_cast<std::size_t>(i) * cols + n] = rhs[i];
    }
    const double floor = kPivotTolerance * inf_norm(m);
    detail::forward_eliminate(aug, n, cols, floor);
    detail::back_substitute(aug, n, cols, 1);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = aug[static_cast<std::size_t>(i) * cols + n];
    return x;
}

}  // namespace pentabeam
