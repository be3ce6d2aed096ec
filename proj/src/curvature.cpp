#include "loem/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "loem/detail/curvature_kernel.hpp"

namespace loem {

namespace {

std::vector<double> to_rowmajor(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i * n + j] = m(i, j);
        }
    }
    return a;
}

}  // namespace

double lambda_term(const Eigen::MatrixXd& a, const Eigen::MatrixXd& beta,
                   int i, int j, int k) {
    const auto n = a.rows();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) {
        throw std::out_of_range("lambda_term: index out of range");
    }
    double s = 0.0;
    for (Eigen::Index l = 0; l < n; ++l) {
        s += a(i, l) * a(j, l) * beta(l, k);
    }
    return s * s;
}

double scalar_curvature_general(const Eigen::MatrixXd& a) {
    const auto n = a.rows();
    if (n == 0 || a.cols() != n) {
        throw std::domain_error("scalar_curvature_general: frame must be square");
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) {
        throw degeneracy_error("scalar_curvature_general: singular frame");
    }
    const Eigen::MatrixXd beta = lu.inverse();

    double s = 2.0 * a.squaredNorm();
    // Fixed summation order: k outer, (i, j) inner.
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                s -= lambda_term(a, beta, static_cast<int>(i), static_cast<int>(j),
                                 static_cast<int>(k));
            }
        }
    }
    return s;
}

double scalar_curvature_triangular(const TriangularMetric& a) {
    const int n = a.size();
    const std::vector<double> rm = to_rowmajor(a.matrix());
    return detail::stilde_from_lower(n, rm);
}

RatioGradient gradient_ratio(const RatioCoordinates& c) {
    const int n = c.size();
    const int m = RatioCoordinates::ratio_count(n);
    if (c.u.size() != m) {
        throw std::domain_error("gradient_ratio: wrong number of off-diagonal ratios");
    }
    for (int i = 0; i < n; ++i) {
        if (!(c.x[i] > 0.0)) {
            throw std::domain_error("gradient_ratio: diagonal coordinates must be positive");
        }
    }
    RatioGradient g;
    g.x.resize(n);
    g.u.resize(m);
    detail::ratio_gradient(n, c.x.data(), c.u.data(), g.x.data(), g.u.data());
    return g;
}

double einstein_constant(double s_tilde, int n) {
    if (n < 1) {
        throw std::domain_error("einstein_constant: n must be positive");
    }
    return s_tilde / (4.0 * n);
}

CurvatureReport curvature_report(const TriangularMetric& a,
                                 std::optional<double> fiber_dim) {
    CurvatureReport r;
    r.s_tilde = scalar_curvature_triangular(a);
    r.volume = volume(a);
    r.einstein_constant = einstein_constant(r.s_tilde, a.size());
    if (fiber_dim) {
        r.total_scalar = (*fiber_dim / 4.0) * r.s_tilde;
    }
    return r;
}

}  // namespace loem
