#pragma once

/**
 * @file bands.hpp
 * @brief Assembly of the pentadiagonal beam matrices in banded form.
 *
 * The fourth derivative is discretized by the second-order stencil
 * (1, -4, 6, -4, 1)/h^4; boundary conditions are imposed through fictitious
 * points, which perturbs a handful of rows near the ends:
 *
 *   clamped-free (n=6):            clamped-clamped (n=6):
 *     [ 7 -4  1  .  .  . ]           [ 7 -4  1  .  .  . ]
 *     [-4  6 -4  1  .  . ]           [-4  6 -4  1  .  . ]
 *     [ 1 -4  6 -4  1  . ]           [ 1 -4  6 -4  1  . ]
 *     [ .  1 -4  6 -4  1 ]           [ .  1 -4  6 -4  1 ]
 *     [ .  .  1 -4  5 -2 ]           [ .  .  1 -4  6 -4 ]
 *     [ .  .  .  2 -4  2 ]           [ .  .  .  1 -4  7 ]
 *
 * Band storage:
 *   sub2[i]   = A[i+2][i]   (length n-2)
 *   sub1[i]   = A[i+1][i]   (length n-1)
 *   diag[i]   = A[i][i]     (length n)
 *   super1[i] = A[i][i+1]   (length n-1)
 *   super2[i] = A[i][i+2]   (length n-2)
 *
 * The clamped-clamped matrix also factors as A = T^2 + U U^t with
 * T = tridiag(-1, 2, -1) and U carrying sqrt(2) in the (1,1) and (n,2)
 * corners; assemble_t / assemble_u build the factors.
 */

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "pentabeam/dense_matrix.hpp"
#include "pentabeam/problem.hpp"

namespace pentabeam {

/// Five-diagonal banded storage. All stencil entries are small integers held
/// exactly in doubles.
struct PentaBands {
    int n = 0;
    std::vector<double> sub2, sub1, diag, super1, super2;

    DenseMatrix to_dense() const {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = diag[i];
            if (i + 1 < n) {
                m(i + 1, i) = sub1[i];
                m(i, i + 1) = super1[i];
            }
            if (i + 2 < n) {
                m(i + 2, i) = sub2[i];
                m(i, i + 2) = super2[i];
            }
        }
        return m;
    }
};

/// Assemble the n-by-n beam matrix for the given boundary condition.
inline PentaBands assemble(const BeamProblem& problem) {
    const int n = problem.n;
    PentaBands b;
    b.n = n;
    b.sub2.assign(n - 2, 1.0);
    b.sub1.assign(n - 1, -4.0);
    b.diag.assign(n, 6.0);
    b.super1.assign(n - 1, -4.0);
    b.super2.assign(n - 2, 1.0);
    b.diag[0] = 7.0;
    if (problem.bc == BoundaryKind::ClampedClamped) {
        b.diag[n - 1] = 7.0;
    } else {
        // free end: moment and shear conditions reshape the last two rows
        b.diag[n - 2] = 5.0;
        b.diag[n - 1] = 2.0;
        b.super1[n - 2] = -2.0;
        b.sub2[n - 3] = 2.0;
    }
    return b;
}

/// y = A x using the banded representation.
inline std::vector<double> matvec(const PentaBands& b, std::span<const double> x) {
    if (static_cast<int>(x.size()) != b.n) throw std::invalid_argument("dimension mismatch in banded matvec");
    std::vector<double> y(b.n, 0.0);
    for (int i = 0; i < b.n; ++i) {
        double s = b.diag[i] * x[i];
        if (i >= 1) s += b.sub1[i - 1] * x[i - 1];
        if (i >= 2) s += b.sub2[i - 2] * x[i - 2];
        if (i + 1 < b.n) s += b.super1[i] * x[i + 1];
        if (i + 2 < b.n) s += b.super2[i] * x[i + 2];
        y[i] = s;
    }
    return y;
}

/// Symmetric tridiagonal Toeplitz bands with diagonal 2 and off-diagonals -1.
struct TriBands {
    int n = 0;
    std::vector<double> sub, diag, super;

    DenseMatrix to_dense() const {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = diag[i];
            if (i + 1 < n) {
                m(i + 1, i) = sub[i];
                m(i, i + 1) = super[i];
            }
        }
        return m;
    }
};

inline TriBands assemble_t(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    TriBands t;
    t.n = n;
    t.sub.assign(n > 0 ? n - 1 : 0, -1.0);
    t.diag.assign(n, 2.0);
    t.super.assign(n > 0 ? n - 1 : 0, -1.0);
    return t;
}

/// The n-by-2 rank-two factor: row 1 is (sqrt(2), 0), row n is (0, sqrt(2)),
/// all other rows zero. Returned as n rows of two entries.
inline std::vector<std::array<double, 2>> assemble_u(int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    std::vector<std::array<double, 2>> u(n, {0.0, 0.0});
    u.front()[0] = std::sqrt(2.0);
    u.back()[1] = std::sqrt(2.0);
    return u;
}

}  // namespace pentabeam
