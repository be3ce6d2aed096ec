#pragma once

#include <vector>

#include "loem/solver.hpp"

namespace loem {

/// The involutive right multiplier T^k (1 <= k <= n): row k is all -1, the
/// other diagonal entries are 1, everything else 0. det = -1.
Eigen::MatrixXi t_matrix(int n, int k);

/// Closure under multiplication of the column permutations and T^1..T^n.
/// Every element has entries in {-1, 0, 1} and determinant +-1; the closure
/// realizes the base-point permutations, so its order is (n+1)!. Cached per
/// n; throws capacity_error for n > 8.
const std::vector<Eigen::MatrixXi>& orbit_group(int n);

/// cholesky_canonical(A * g): the triangular representative of the metric
/// obtained by the move g. Preserves the scalar curvature and |det|.
TriangularMetric apply_move(const TriangularMetric& a, const Eigen::MatrixXi& g);

/// Lexicographic minimum (row-major, tolerance-aware comparison) of the
/// triangular representatives over the whole move group. Idempotent and
/// constant on move orbits.
TriangularMetric canonical_form(const TriangularMetric& a, double tol = 1e-8);

/// The involution replacing the last row: b_nj = a_nn - a_nj for j < n,
/// realized as cholesky_canonical(diag(1,...,1,-1) * A * T^n). The result
/// is isometric to the input; hat(hat(A)) = A.
TriangularMetric hat(const TriangularMetric& a);

struct IsometryClass {
    TriangularMetric canonical;
    std::vector<int> members;  ///< indices into the classified point list
    double s_tilde = 0.0;
    double volume = 0.0;
};

/// Groups critical points into isometry classes. Points in the same move
/// orbit always share a class; in addition, classes are merged when their
/// members admit block-diagonal representatives whose irreducible factors
/// are isometric factor by factor (a product of isometric factors is
/// isometric to the reordered product). Classes are sorted by
/// (volume, canonical form).
std::vector<IsometryClass> classify(const std::vector<CriticalPoint>& points,
                                    double tol = 1e-8);

namespace detail {

/// One maximal product decomposition reachable from a metric: the multiset
/// of (size, move-orbit canonical form) of its irreducible factors.
struct FactorSignature {
    std::vector<std::pair<int, Eigen::MatrixXd>> factors;  ///< sorted
};

/// All product signatures reachable through the move group, recursively
/// flattened (always contains the trivial one-factor signature).
std::vector<FactorSignature> signature_set(const TriangularMetric& a, double tol);

bool signatures_intersect(const std::vector<FactorSignature>& a,
                          const std::vector<FactorSignature>& b, double tol);

}  // namespace detail

}  // namespace loem
