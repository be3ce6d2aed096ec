#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loem/curvature.hpp"
#include "loem/metric.hpp"

namespace loem {

enum class Normalization {
    STildeEqualsN,        ///< S = n (Lagrange multiplier 2)
    EinsteinConstantOne,  ///< S = 4n
    UnitVolume,           ///< det = 1
};

struct CriticalPoint {
    RatioCoordinates coords;
    TriangularMetric matrix;
    double s_tilde = 0.0;
    double volume = 0.0;
    double residual_norm = 0.0;  ///< max-norm of the Lagrange system residual
    Normalization normalization = Normalization::STildeEqualsN;
};

struct SolverOptions {
    int starts = 10000;
    std::uint64_t seed = 0;
    int newton_max_iter = 200;
    double newton_tol = 1e-12;
    double dedup_tol = 1e-7;
    double diag_floor = 1e-6;       ///< reject iterates with any x_i below this
    double x_log_half_width = 1.0;  ///< x_i sampled as exp(U(-w, w))
    double u_half_width = 2.5;      ///< u_ij sampled as U(-w, w)
    int threads = 1;
    /// Extra deterministic starts tried before the random sample.
    std::vector<RatioCoordinates> extra_starts;
};

/// Residual of the normalized Lagrange system: x_i dS/dx_i - lambda for each
/// diagonal coordinate, followed by dS/du_ij in row-major order.
Eigen::VectorXd residual(const RatioCoordinates& c, double lambda = 2.0);

/// Damped Newton iteration on the residual with an exact forward-mode
/// Jacobian. Returns nothing on divergence or domain escape.
std::optional<CriticalPoint> newton_solve(const RatioCoordinates& start,
                                          const SolverOptions& opts);

/// Seeded multistart search. Converged roots are deduplicated in raw (x, u)
/// coordinates by max-norm and returned sorted lexicographically, so the
/// output is a deterministic function of (n, opts) for any thread count.
std::vector<CriticalPoint> multistart(int n, const SolverOptions& opts);

/// Rescales a critical point to the requested convention (ratios unchanged)
/// and re-verifies the residual under the matching multiplier.
CriticalPoint normalize(const CriticalPoint& pt, Normalization convention);

struct MatchReport {
    std::vector<std::pair<int, int>> matched;  ///< (found index, reference index)
    std::vector<int> missing_refs;
    std::vector<int> extra_points;

    bool perfect() const { return missing_refs.empty() && extra_points.empty(); }
};

/// Maximum bipartite matching between found points and reference tuples under
/// max-norm distance <= tol in (x, u) coordinates.
MatchReport verify_against_reference(const std::vector<CriticalPoint>& points,
                                     const std::vector<RatioCoordinates>& reference,
                                     double tol);

}  // namespace loem
