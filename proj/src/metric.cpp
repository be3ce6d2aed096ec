#include "loem/metric.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace loem {

TriangularMetric::TriangularMetric(Eigen::MatrixXd entries) : a_(std::move(entries)) {
    const auto n = a_.rows();
    if (n == 0 || a_.cols() != n) {
        throw std::domain_error("TriangularMetric: matrix must be square and non-empty");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(a_(i, i) > 0.0)) {
            throw std::domain_error("TriangularMetric: diagonal entries must be positive");
        }
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (a_(i, j) != 0.0) {
                throw std::domain_error("TriangularMetric: entries above the diagonal must be zero");
            }
        }
    }
}

TriangularMetric TriangularMetric::identity(int n) {
    return TriangularMetric(Eigen::MatrixXd::Identity(n, n));
}

double TriangularMetric::determinant() const {
    return a_.diagonal().prod();
}

TriangularMetric from_ratio_coords(const RatioCoordinates& c) {
    const int n = c.size();
    if (c.u.size() != RatioCoordinates::ratio_count(n)) {
        throw std::domain_error("from_ratio_coords: wrong number of off-diagonal ratios");
    }
    for (int i = 0; i < n; ++i) {
        if (!(c.x[i] > 0.0)) {
            throw std::domain_error("from_ratio_coords: diagonal coordinates must be positive");
        }
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            a(i, j) = c.u[k++] * c.x[j];
        }
        a(i, i) = c.x[i];
    }
    return TriangularMetric(a);
}

RatioCoordinates to_ratio_coords(const TriangularMetric& a) {
    const int n = a.size();
    RatioCoordinates c;
    c.x.resize(n);
    c.u.resize(RatioCoordinates::ratio_count(n));
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            c.u[k++] = a(i, j) / a(j, j);
        }
        c.x[i] = a(i, i);
    }
    return c;
}

double volume(const TriangularMetric& a) {
    return a.determinant();
}

Eigen::MatrixXd inverse(const TriangularMetric& a) {
    const int n = a.size();
    Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        beta(j, j) = 1.0 / a(j, j);
        for (int i = j + 1; i < n; ++i) {
            double s = 0.0;
            for (int l = j; l < i; ++l) {
                s += a(i, l) * beta(l, j);
            }
            beta(i, j) = -s / a(i, i);
        }
    }
    return beta;
}

TriangularMetric cholesky_canonical(const GeneralFrame& m, double pivot_tol) {
    const auto n = m.rows();
    if (n == 0 || m.cols() != n) {
        throw std::domain_error("cholesky_canonical: frame must be square and non-empty");
    }
    // L^T L = M^T M with L lower triangular is the U U^T factorization of the
    // Gram matrix for U = L^T; reverse the index order to reuse the standard
    // lower Cholesky recurrence.
    const Eigen::MatrixXd gram = m.transpose() * m;
    Eigen::MatrixXd g = gram;
    g.rowwise().reverseInPlace();
    g.colwise().reverseInPlace();

    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = g(j, j);
        for (Eigen::Index k = 0; k < j; ++k) {
            d -= l(j, k) * l(j, k);
        }
        if (!(d > 0.0) || std::sqrt(d) < pivot_tol) {
            throw degeneracy_error("cholesky_canonical: frame is singular or near-singular");
        }
        l(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            double s = g(i, j);
            for (Eigen::Index k = 0; k < j; ++k) {
                s -= l(i, k) * l(j, k);
            }
            l(i, j) = s / l(j, j);
        }
    }
    l.rowwise().reverseInPlace();
    l.colwise().reverseInPlace();
    // l is now upper triangular with U U^T = gram; its transpose is the result.
    return TriangularMetric(l.transpose());
}

TriangularMetric block_diag(const TriangularMetric& a, const TriangularMetric& b) {
    const int na = a.size();
    const int nb = b.size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(na + nb, na + nb);
    m.topLeftCorner(na, na) = a.matrix();
    m.bottomRightCorner(nb, nb) = b.matrix();
    return TriangularMetric(m);
}

TriangularMetric block_diag(const std::vector<TriangularMetric>& blocks) {
    if (blocks.empty()) {
        throw std::domain_error("block_diag: need at least one block");
    }
    int n = 0;
    for (const auto& b : blocks) n += b.size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        m.block(off, off, b.size(), b.size()) = b.matrix();
        off += b.size();
    }
    return TriangularMetric(m);
}

TriangularMetric scale(const TriangularMetric& a, double c) {
    if (!(c > 0.0)) {
        throw std::domain_error("scale: factor must be positive");
    }
    return TriangularMetric(c * a.matrix());
}

}  // namespace loem
