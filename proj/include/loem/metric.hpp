#pragma once

#include <Eigen/Dense>

#include "loem/errors.hpp"

namespace loem {

/// A general (not necessarily triangular) frame-coefficient matrix.
using GeneralFrame = Eigen::MatrixXd;

/// Lower-triangular matrix with positive diagonal; the canonical
/// representative of an invariant metric on the product group.
class TriangularMetric {
public:
    /// Validates triangularity (exact zeros above the diagonal) and a
    /// strictly positive diagonal.
    explicit TriangularMetric(Eigen::MatrixXd entries);

    static TriangularMetric identity(int n);

    int size() const { return static_cast<int>(a_.rows()); }
    double operator()(int i, int j) const { return a_(i, j); }
    const Eigen::MatrixXd& matrix() const { return a_; }

    /// det = product of the diagonal, always positive.
    double determinant() const;

private:
    Eigen::MatrixXd a_;
};

/// Solver coordinates: diagonal entries x_i > 0 and off-diagonal ratios
/// u_ij = a_ij / x_j for j < i, stored row-major ((2,1), (3,1), (3,2), ...).
struct RatioCoordinates {
    Eigen::VectorXd x;
    Eigen::VectorXd u;

    int size() const { return static_cast<int>(x.size()); }
    static int ratio_count(int n) { return n * (n - 1) / 2; }
};

TriangularMetric from_ratio_coords(const RatioCoordinates& c);
RatioCoordinates to_ratio_coords(const TriangularMetric& a);

/// Product of the diagonal entries (the volume invariant).
double volume(const TriangularMetric& a);

/// Lower-triangular inverse by forward substitution.
Eigen::MatrixXd inverse(const TriangularMetric& a);

/// Unique lower-triangular representative with positive diagonal of the
/// left-orthogonal class {Q*M}: the L with L^T L = M^T M. Triangular input
/// with positive diagonal is reproduced. Throws degeneracy_error when a
/// factorization pivot falls below pivot_tol.
TriangularMetric cholesky_canonical(const GeneralFrame& m, double pivot_tol = 1e-10);

TriangularMetric block_diag(const TriangularMetric& a, const TriangularMetric& b);
TriangularMetric block_diag(const std::vector<TriangularMetric>& blocks);

TriangularMetric scale(const TriangularMetric& a, double c);

}  // namespace loem
