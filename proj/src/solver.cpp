#include "loem/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "loem/detail/curvature_kernel.hpp"
#include "loem/detail/dual.hpp"

namespace loem {

namespace {

double max_abs(const Eigen::VectorXd& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Jacobian of the residual via one dual-number sweep per variable.
Eigen::MatrixXd residual_jacobian(int n, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& u, double lambda) {
    using detail::Dual;
    const int m = RatioCoordinates::ratio_count(n);
    const int dim = n + m;
    std::vector<Dual> xd(n), ud(m), r(dim);
    Eigen::MatrixXd jac(dim, dim);
    for (int c = 0; c < dim; ++c) {
        for (int i = 0; i < n; ++i) xd[i] = Dual(x[i], c == i ? 1.0 : 0.0);
        for (int k = 0; k < m; ++k) ud[k] = Dual(u[k], c == n + k ? 1.0 : 0.0);
        detail::residual_kernel(n, xd.data(), ud.data(), Dual(lambda), r.data());
        for (int row = 0; row < dim; ++row) jac(row, c) = r[row].d;
    }
    return jac;
}

Eigen::VectorXd residual_at(int n, const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                            double lambda) {
    const int dim = n + RatioCoordinates::ratio_count(n);
    Eigen::VectorXd r(dim);
    detail::residual_kernel(n, x.data(), u.data(), lambda, r.data());
    return r;
}

CriticalPoint make_point(const RatioCoordinates& coords, double residual_norm,
                         Normalization norm) {
    CriticalPoint pt{coords, from_ratio_coords(coords), 0.0, 0.0, residual_norm, norm};
    pt.s_tilde = scalar_curvature_triangular(pt.matrix);
    pt.volume = volume(pt.matrix);
    return pt;
}

// Lexicographic order on the concatenated (x, u) tuple.
bool coord_less(const RatioCoordinates& a, const RatioCoordinates& b) {
    for (int i = 0; i < a.x.size(); ++i) {
        if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
    }
    for (int i = 0; i < a.u.size(); ++i) {
        if (a.u[i] != b.u[i]) return a.u[i] < b.u[i];
    }
    return false;
}

double coord_dist(const RatioCoordinates& a, const RatioCoordinates& b) {
    double d = 0.0;
    for (int i = 0; i < a.x.size(); ++i) d = std::max(d, std::abs(a.x[i] - b.x[i]));
    for (int i = 0; i < a.u.size(); ++i) d = std::max(d, std::abs(a.u[i] - b.u[i]));
    return d;
}

// Uniform in [0, 1) from the top 53 bits; keeps sampling independent of the
// standard library's distribution implementation.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Eigen::VectorXd residual(const RatioCoordinates& c, double lambda) {
    const int n = c.size();
    for (int i = 0; i < n; ++i) {
        if (!(c.x[i] > 0.0)) {
            throw std::domain_error("residual: diagonal coordinates must be positive");
        }
    }
    return residual_at(n, c.x, c.u, lambda);
}

std::optional<CriticalPoint> newton_solve(const RatioCoordinates& start,
                                          const SolverOptions& opts) {
    const int n = start.size();
    constexpr double kLambda = 2.0;

    Eigen::VectorXd x = start.x;
    Eigen::VectorXd u = start.u;
    if ((x.array() < opts.diag_floor).any()) {
        return std::nullopt;
    }

    Eigen::VectorXd r = residual_at(n, x, u, kLambda);
    double rnorm = max_abs(r);
    if (!std::isfinite(rnorm)) {
        return std::nullopt;
    }

    // Iterate until the damped step can no longer strictly decrease the
    // residual, then accept if the tolerance was reached. Polishing past the
    // first crossing matters at degenerate roots, where the residual is
    // quadratic in the remaining coordinate error: stopping at the crossing
    // would leave duplicates spread wider than the dedup tolerance.
    for (int iter = 0; iter < opts.newton_max_iter; ++iter) {
        const Eigen::MatrixXd jac = residual_jacobian(n, x, u, kLambda);
        const Eigen::VectorXd step = jac.partialPivLu().solve(-r);
        if (!step.allFinite()) {
            break;
        }

        double t = 1.0;
        bool accepted = false;
        for (int halving = 0; halving <= 30; ++halving, t *= 0.5) {
            const Eigen::VectorXd xc = x + t * step.head(n);
            const Eigen::VectorXd uc = u + t * step.tail(step.size() - n);
            if ((xc.array() < opts.diag_floor).any()) {
                continue;
            }
            const Eigen::VectorXd rc = residual_at(n, xc, uc, kLambda);
            const double rcnorm = max_abs(rc);
            if (std::isfinite(rcnorm) && rcnorm < rnorm) {
                x = xc;
                u = uc;
                r = rc;
                rnorm = rcnorm;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            break;
        }
    }
    if (rnorm <= opts.newton_tol) {
        return make_point({x, u}, rnorm, Normalization::STildeEqualsN);
    }
    return std::nullopt;
}

std::vector<CriticalPoint> multistart(int n, const SolverOptions& opts) {
    if (n < 1) {
        throw std::domain_error("multistart: n must be positive");
    }
    const int m = RatioCoordinates::ratio_count(n);

    std::vector<RatioCoordinates> starts;
    starts.reserve(opts.extra_starts.size() + opts.starts);
    for (const auto& s : opts.extra_starts) {
        starts.push_back(s);
    }
    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.starts; ++s) {
        RatioCoordinates c;
        c.x.resize(n);
        c.u.resize(m);
        for (int i = 0; i < n; ++i) {
            c.x[i] = std::exp((2.0 * uniform01(rng) - 1.0) * opts.x_log_half_width);
        }
        for (int k = 0; k < m; ++k) {
            c.u[k] = (2.0 * uniform01(rng) - 1.0) * opts.u_half_width;
        }
        starts.push_back(std::move(c));
    }

    std::vector<std::optional<CriticalPoint>> slots(starts.size());
    const auto solve_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            slots[i] = newton_solve(starts[i], opts);
        }
    };
    const int threads = std::max(1, opts.threads);
    if (threads == 1 || starts.size() < 2) {
        solve_range(0, starts.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (starts.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const size_t lo = t * chunk;
            const size_t hi = std::min(starts.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(solve_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<CriticalPoint> found;
    for (auto& slot : slots) {
        if (!slot) continue;
        // Converged roots of the lambda = 2 system satisfy S = n up to the
        // residual tolerance; anything else is a numerical artifact.
        if (std::abs(slot->s_tilde - n) > 1e-9) continue;
        found.push_back(std::move(*slot));
    }
    std::sort(found.begin(), found.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        return coord_less(a.coords, b.coords);
    });

    std::vector<CriticalPoint> unique;
    for (auto& pt : found) {
        bool dup = false;
        for (const auto& kept : unique) {
            if (coord_dist(pt.coords, kept.coords) <= opts.dedup_tol) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(std::move(pt));
    }
    return unique;
}

CriticalPoint normalize(const CriticalPoint& pt, Normalization convention) {
    const int n = pt.coords.size();
    double factor = 1.0;
    switch (convention) {
        case Normalization::STildeEqualsN:
            factor = std::sqrt(n / pt.s_tilde);
            break;
        case Normalization::EinsteinConstantOne:
            factor = std::sqrt(4.0 * n / pt.s_tilde);
            break;
        case Normalization::UnitVolume:
            factor = std::pow(pt.volume, -1.0 / n);
            break;
    }
    RatioCoordinates coords{factor * pt.coords.x, pt.coords.u};
    CriticalPoint out = make_point(coords, 0.0, convention);
    // The multiplier scales with the convention: nl = 2S by Euler homogeneity.
    const double lambda = 2.0 * out.s_tilde / n;
    out.residual_norm = max_abs(residual_at(n, coords.x, coords.u, lambda));
    return out;
}

MatchReport verify_against_reference(const std::vector<CriticalPoint>& points,
                                     const std::vector<RatioCoordinates>& reference,
                                     double tol) {
    const int np = static_cast<int>(points.size());
    const int nr = static_cast<int>(reference.size());
    std::vector<std::vector<int>> adj(np);
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < nr; ++j) {
            if (points[i].coords.size() == reference[j].size() &&
                coord_dist(points[i].coords, reference[j]) <= tol) {
                adj[i].push_back(j);
            }
        }
    }

    // Kuhn's augmenting-path matching; sizes are tiny.
    std::vector<int> match_ref(nr, -1);
    std::vector<char> used;
    const auto try_augment = [&](auto&& self, int i) -> bool {
        for (int j : adj[i]) {
            if (used[j]) continue;
            used[j] = 1;
            if (match_ref[j] < 0 || self(self, match_ref[j])) {
                match_ref[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < np; ++i) {
        used.assign(nr, 0);
        try_augment(try_augment, i);
    }

    MatchReport report;
    std::vector<char> point_matched(np, 0);
    for (int j = 0; j < nr; ++j) {
        if (match_ref[j] >= 0) {
            report.matched.emplace_back(match_ref[j], j);
            point_matched[match_ref[j]] = 1;
        } else {
            report.missing_refs.push_back(j);
        }
    }
    for (int i = 0; i < np; ++i) {
        if (!point_matched[i]) report.extra_points.push_back(i);
    }
    std::sort(report.matched.begin(), report.matched.end());
    return report;
}

}  // namespace loem
