#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace pentabeam {

/// Square dense matrix, row-major, 0-based indexing.
class DenseMatrix {
public:
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int size() const { return n_; }

    double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    std::span<const double> row(int r) const {
        return {a_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
    }

private:
    int n_;
    std::vector<double> a_;
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in multiply");
    const int n = a.size();
    DenseMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

inline std::vector<double> matvec(const DenseMatrix& m, std::span<const double> x) {
    const int n = m.size();
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("dimension mismatch in matvec");
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline std::vector<double> matvec_transpose(const DenseMatrix& m, std::span<const double> x) {
    const int n = m.size();
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("dimension mismatch in matvec");
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double xi = x[i];
        for (int j = 0; j < n; ++j) y[j] += m(i, j) * xi;
    }
    return y;
}

/// Max absolute row sum.
inline double inf_norm(const DenseMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.size(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.size(); ++j) s += std::abs(m(i, j));
        if (s > best) best = s;
    }
    return best;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in max_abs_diff");
    double best = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
    return best;
}

/// ||A·B − I||_inf, the usual inversion residual.
inline double identity_residual(const DenseMatrix& a, const DenseMatrix& b) {
    const DenseMatrix p = multiply(a, b);
    double best = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        double s = 0.0;
        for (int j = 0; j < p.size(); ++j) s += std::abs(p(i, j) - (i == j ? 1.0 : 0.0));
        if (s > best) best = s;
    }
    return best;
}

}  // namespace pentabeam
