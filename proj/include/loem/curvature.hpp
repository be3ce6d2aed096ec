#pragma once

#include <optional>

#include "loem/metric.hpp"

namespace loem {

/// The squared bracket-projection term (sum_l a_il a_jl beta_lk)^2 for a
/// general square frame a with inverse beta. Symmetric in (i, j).
double lambda_term(const Eigen::MatrixXd& a, const Eigen::MatrixXd& beta,
                   int i, int j, int k);

/// Normalized scalar curvature of an arbitrary nonsingular frame:
/// 2 sum a_ij^2 - sum_{i,j,k} lambda_term. Invariant under left
/// multiplication by orthogonal matrices.
double scalar_curvature_general(const Eigen::MatrixXd& a);

/// Normalized scalar curvature via the reduced triangular form
/// sum_i a_ii^2 - sum_{k < min(i,j)} lambda_term.
double scalar_curvature_triangular(const TriangularMetric& a);

struct RatioGradient {
    Eigen::VectorXd x;  ///< dS/dx_i
    Eigen::VectorXd u;  ///< dS/du_ij, row-major (2,1), (3,1), (3,2), ...
};

/// Exact analytic gradient of the normalized scalar curvature in ratio
/// coordinates, computed through the inverse-matrix differential
/// d(beta) = -beta dA beta.
RatioGradient gradient_ratio(const RatioCoordinates& c);

/// lambda = S / (4n); equals 1 for the Einstein normalization S = 4n.
double einstein_constant(double s_tilde, int n);

struct CurvatureReport {
    double s_tilde = 0.0;
    double volume = 0.0;
    double einstein_constant = 0.0;
    /// (p/4) * s_tilde when the fiber dimension p is supplied.
    std::optional<double> total_scalar;
};

CurvatureReport curvature_report(const TriangularMetric& a,
                                 std::optional<double> fiber_dim = std::nullopt);

}  // namespace loem
