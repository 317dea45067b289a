#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "pentabeam/bands.hpp"
#include "pentabeam/explicit_inverse.hpp"
#include "pentabeam/oracle.hpp"
#include "pentabeam/problem.hpp"

using namespace pentabeam;

namespace {

double max_relative_diff(const DenseMatrix& a, const DenseMatrix& b) {
    double worst = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / std::abs(b(i, j)));
    return worst;
}

}  // namespace

TEST_CASE("clamped-free entries") {
    CHECK(cf_inverse_entry(5, 1, 1) == 0.5);
    CHECK(cf_inverse_entry(5, 2, 2) == 3.0);
    CHECK(cf_inverse_entry(5, 5, 5) == 21.25);  // n (2n^2 + 1) / 12

    SECTION("index validation") {
        CHECK_THROWS_AS(cf_inverse_entry(5, 0, 1), std::out_of_range);
        CHECK_THROWS_AS(cf_inverse_entry(5, 1, 6), std::out_of_range);
        CHECK_THROWS_AS(cf_inverse_entry(4, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("clamped-free inverse matrix") {
    const ExplicitInverse inv = cf_inverse(5);
    CHECK(inv.path == InversePath::ClosedForm);

    SECTION("A B = I") {
        const DenseMatrix a = assemble(BeamProblem(BoundaryKind::ClampedFree, 5, 1.0)).to_dense();
        CHECK(identity_residual(a, inv.entries) < 1e-12);
    }

    SECTION("last column is half the mirrored last row") {
        for (int i = 1; i < 5; ++i)
            CHECK(inv.entries(i - 1, 4) == Catch::Approx(inv.entries(4, i - 1) / 2.0).epsilon(1e-15));
    }

    SECTION("all entries positive") {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(inv.entries(i, j) > 0.0);
    }

    SECTION("symmetric in the leading block") {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(inv.entries(i, j) == inv.entries(j, i));
    }
}

TEST_CASE("clamped-free column monotonicity") {
    // entries grow down each column below the diagonal
    for (int n : {5, 7, 12, 33, 64}) {
        const ExplicitInverse inv = cf_inverse(n);
        for (int j = 1; j <= n; ++j)
            for (int i2 = j + 1; i2 < n; ++i2)
                for (int i1 = i2 + 1; i1 <= n; ++i1)
                    CHECK(inv.entries(i1 - 1, j - 1) > inv.entries(i2 - 1, j - 1));
    }
}

TEST_CASE("tridiagonal inverse entries") {
    CHECK(t_inverse_entry(3, 1, 1) == 0.75);
    CHECK(t_inverse_entry(3, 2, 2) == 1.0);

    SECTION("T T^{-1} = I") {
        const int n = 5;
        DenseMatrix tinv(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) tinv(i - 1, j - 1) = t_inverse_entry(n, i, j);
        CHECK(identity_residual(assemble_t(n).to_dense(), tinv) < 1e-12);
    }

    SECTION("matches the elimination oracle") {
        for (int n : {3, 7, 20}) {
            const DenseMatrix reference = dense_invert(assemble_t(n).to_dense());
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(t_inverse_entry(n, i, j) ==
                          Catch::Approx(reference(i - 1, j - 1)).epsilon(1e-12));
        }
    }
}

TEST_CASE("correction block coefficients") {
    const MMatrixBlock block = m_block(5);
    CHECK(block.q1 == Catch::Approx(3.0 / 19.0).epsilon(1e-15));

    SECTION("positive diagonal") {
        for (int n : {1, 2, 5, 17, 100, 200}) {
            const MMatrixBlock b = m_block(n);
            for (int i = 1; i <= n; ++i) CHECK(b.diagonal(i) > 0.0);
        }
    }

    SECTION("symmetric and persymmetric") {
        for (int n : {5, 8, 13}) {
            const MMatrixBlock b = m_block(n);
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    CHECK(b.entry(i, j) == Catch::Approx(b.entry(j, i)).margin(1e-15));
                    CHECK(b.entry(i, j) ==
                          Catch::Approx(b.entry(n + 1 - j, n + 1 - i)).margin(1e-15));
                }
            }
        }
    }

    SECTION("equals the inverse of I + W W^t, W = T^{-1} U") {
        const int n = 6;
        DenseMatrix tinv(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) tinv(i - 1, j - 1) = t_inverse_entry(n, i, j);
        const auto u = assemble_u(n);
        std::vector<double> w0(n, 0.0), w1(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                w0[i] += tinv(i, k) * u[k][0];
                w1[i] += tinv(i, k) * u[k][1];
            }
        DenseMatrix iww(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                iww(i, j) = (i == j ? 1.0 : 0.0) + w0[i] * w0[j] + w1[i] * w1[j];
        const DenseMatrix reference = dense_invert(iww);
        const MMatrixBlock b = m_block(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(b.entry(i, j) == Catch::Approx(reference(i - 1, j - 1)).margin(1e-10));
    }
}

TEST_CASE("clamped-clamped entries") {
    CHECK(cc_inverse_entry(5, 1, 1) == Catch::Approx(465.0 / 1368.0).epsilon(1e-15));

    SECTION("two algebraically identical groupings of the entry agree") {
        for (int n : {5, 9, 40, 600}) {
            for (int i = 1; i <= n; i += std::max(1, n / 7)) {
                for (int j = 1; j <= i; j += std::max(1, n / 5)) {
                    const double alpha = n + 1 - i;
                    const double eps_a = 3.0 * (1 + alpha * (n + 1)) * (1 + double(i - j) * j);
                    const double eps_b =
                        3.0 * (1 + alpha + double(n) * alpha) * (1 + double(i) * j - double(j) * j);
                    CHECK(eps_a == eps_b);
                }
            }
        }
    }

    SECTION("symmetry") {
        const ExplicitInverse inv = cc_inverse(5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(inv.entries(i, j) == inv.entries(j, i));
    }

    SECTION("A A^{-1} = I") {
        const DenseMatrix a = assemble(BeamProblem(BoundaryKind::ClampedClamped, 5, 1.0)).to_dense();
        CHECK(identity_residual(a, cc_inverse(5).entries) < 1e-11);
    }

    SECTION("centrosymmetry and positivity") {
        for (int n : {5, 12, 31}) {
            const ExplicitInverse inv = cc_inverse(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    CHECK(inv.entries(i, j) > 0.0);
                    CHECK(inv.entries(i, j) ==
                          Catch::Approx(inv.entries(n - 1 - i, n - 1 - j)).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("rank-two update route") {
    SECTION("T^{-1} U first column") {
        const int n = 5;
        DenseMatrix tinv(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) tinv(i - 1, j - 1) = t_inverse_entry(n, i, j);
        const auto u = assemble_u(n);
        const double scale = std::sqrt(2.0) / 6.0;
        for (int i = 0; i < n; ++i) {
            double w = 0.0;
            for (int k = 0; k < n; ++k) w += tinv(i, k) * u[k][0];
            CHECK(w == Catch::Approx(scale * (5 - i)).epsilon(1e-14));
        }
    }

    SECTION("2x2 capacitance determinant") {
        const int n = 5;
        DenseMatrix tinv(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) tinv(i - 1, j - 1) = t_inverse_entry(n, i, j);
        const DenseMatrix t2inv = multiply(tinv, tinv);
        const auto u = assemble_u(n);
        // S = I_2 + U^t T^{-2} U
        double s00 = 1.0, s01 = 0.0, s11 = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                s00 += u[i][0] * t2inv(i, j) * u[j][0];
                s01 += u[i][0] * t2inv(i, j) * u[j][1];
                s11 += u[i][1] * t2inv(i, j) * u[j][1];
            }
        CHECK(s00 * s11 - s01 * s01 == Catch::Approx(38.0 / 3.0).epsilon(1e-13));
    }

    SECTION("agrees with the closed form entrywise") {
        const ExplicitInverse sm = cc_inverse_sherman_morrison(8);
        CHECK(sm.path == InversePath::ShermanMorrison);
        CHECK(max_relative_diff(sm.entries, cc_inverse(8).entries) < 1e-10);

        for (int n = 5; n <= 64; ++n)
            CHECK(max_relative_diff(cc_inverse_sherman_morrison(n).entries, cc_inverse(n).entries) <
                  1e-10);
    }
}

TEST_CASE("inversion residual across sizes") {
    for (BoundaryKind bc : {BoundaryKind::ClampedFree, BoundaryKind::ClampedClamped}) {
        for (int n = 5; n <= 128; ++n) {
            const DenseMatrix a = assemble(BeamProblem(bc, n, 1.0)).to_dense();
            const ExplicitInverse inv = explicit_inverse(bc, n);
            CHECK(identity_residual(a, inv.entries) <= 1e-9 * inf_norm(inv.entries));
        }
    }
}

TEST_CASE("inverse operator") {
    std::mt19937 rng(90210);
    std::uniform_real_distribution<double> dist(0.1, 1.0);

    SECTION("streaming matvec agrees with the materialized one") {
        for (BoundaryKind bc : {BoundaryKind::ClampedFree, BoundaryKind::ClampedClamped}) {
            const int n = 40;
            const InverseOperator dense_op(bc, n);
            const InverseOperator streaming_op(bc, n, /*materialize_cap=*/0);
            CHECK(dense_op.materialized());
            CHECK(!streaming_op.materialized());
            std::vector<double> x(n);
            for (double& v : x) v = dist(rng);
            const auto yd = dense_op.apply(x);
            const auto ys = streaming_op.apply(x);
            const auto td = dense_op.apply_transpose(x);
            const auto ts = streaming_op.apply_transpose(x);
            for (int i = 0; i < n; ++i) {
                CHECK(ys[i] == Catch::Approx(yd[i]).epsilon(1e-13));
                CHECK(ts[i] == Catch::Approx(td[i]).epsilon(1e-13));
            }
        }
    }

    SECTION("entry lookup is 1-based and validated") {
        const InverseOperator op(BoundaryKind::ClampedFree, 5);
        CHECK(op.entry(1, 1) == 0.5);
        CHECK_THROWS_AS(op.entry(0, 1), std::out_of_range);
        CHECK_THROWS_AS(op.entry(1, 6), std::out_of_range);
    }
}
