#include "loem/isometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace loem {

namespace {

constexpr int kGroupBudget = 8;

std::string group_key(const Eigen::MatrixXi& m) {
    std::string key;
    key.reserve(static_cast<size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            key.push_back(static_cast<char>(m(i, j)));
        }
    }
    return key;
}

std::vector<Eigen::MatrixXi> generate_group(int n) {
    std::vector<Eigen::MatrixXi> gens;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        Eigen::MatrixXi p = Eigen::MatrixXi::Zero(n, n);
        for (int i = 0; i < n; ++i) p(i, perm[i]) = 1;
        gens.push_back(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int k = 1; k <= n; ++k) {
        gens.push_back(t_matrix(n, k));
    }

    std::unordered_set<std::string> seen;
    std::vector<Eigen::MatrixXi> elements;
    std::vector<Eigen::MatrixXi> frontier;
    for (const auto& g : gens) {
        if (seen.insert(group_key(g)).second) {
            elements.push_back(g);
            frontier.push_back(g);
        }
    }
    while (!frontier.empty()) {
        std::vector<Eigen::MatrixXi> next;
        for (const auto& a : frontier) {
            for (const auto& g : gens) {
                Eigen::MatrixXi prod = a * g;
                if (seen.insert(group_key(prod)).second) {
                    elements.push_back(prod);
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(elements.begin(), elements.end(),
              [](const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
                  return group_key(a) < group_key(b);
              });
    return elements;
}

// Row-major lexicographic comparison; entries closer than tol are tied.
bool lex_less(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const double d = a(i, j) - b(i, j);
            if (d < -tol) return true;
            if (d > tol) return false;
        }
    }
    return false;
}

bool entrywise_close(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
    return a.rows() == b.rows() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

// Connected components of the off-diagonal support of a Gram matrix; each
// component is one irreducible factor of the corresponding product metric.
std::vector<std::vector<int>> gram_components(const Eigen::MatrixXd& gram, double tol) {
    const int n = static_cast<int>(gram.rows());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> stack{s};
        std::vector<int> comp;
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w = 0; w < n; ++w) {
                if (!seen[w] && std::abs(gram(v, w)) > tol) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

TriangularMetric factor_from_gram(const Eigen::MatrixXd& gram, const std::vector<int>& comp) {
    const int k = static_cast<int>(comp.size());
    Eigen::MatrixXd sub(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            sub(i, j) = gram(comp[i], comp[j]);
        }
    }
    // Triangular representative with L^T L = sub, via the reversed Cholesky.
    Eigen::MatrixXd g = sub;
    g.rowwise().reverseInPlace();
    g.colwise().reverseInPlace();
    const Eigen::MatrixXd lrev = g.llt().matrixL();
    Eigen::MatrixXd upper = lrev;
    upper.rowwise().reverseInPlace();
    upper.colwise().reverseInPlace();
    return TriangularMetric(upper.transpose());
}

bool factor_less(const std::pair<int, Eigen::MatrixXd>& a,
                 const std::pair<int, Eigen::MatrixXd>& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second, 0.0);
}

}  // namespace

Eigen::MatrixXi t_matrix(int n, int k) {
    if (k < 1 || k > n) {
        throw std::out_of_range("t_matrix: k must be in 1..n");
    }
    Eigen::MatrixXi t = Eigen::MatrixXi::Identity(n, n);
    for (int j = 0; j < n; ++j) t(k - 1, j) = -1;
    return t;
}

const std::vector<Eigen::MatrixXi>& orbit_group(int n) {
    if (n < 1) {
        throw std::domain_error("orbit_group: n must be positive");
    }
    if (n > kGroupBudget) {
        throw capacity_error("orbit_group: enumeration budget is n <= 8");
    }
    static std::map<int, std::vector<Eigen::MatrixXi>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, generate_group(n)).first;
    }
    return it->second;
}

TriangularMetric apply_move(const TriangularMetric& a, const Eigen::MatrixXi& g) {
    return cholesky_canonical(a.matrix() * g.cast<double>());
}

TriangularMetric canonical_form(const TriangularMetric& a, double tol) {
    const auto& group = orbit_group(a.size());
    Eigen::MatrixXd best;
    bool have = false;
    for (const auto& g : group) {
        const Eigen::MatrixXd cand = apply_move(a, g).matrix();
        if (!have || lex_less(cand, best, tol)) {
            best = cand;
            have = true;
        }
    }
    return TriangularMetric(best);
}

TriangularMetric hat(const TriangularMetric& a) {
    const int n = a.size();
    Eigen::MatrixXd flip = Eigen::MatrixXd::Identity(n, n);
    flip(n - 1, n - 1) = -1.0;
    return cholesky_canonical(flip * a.matrix() * t_matrix(n, n).cast<double>());
}

namespace detail {

std::vector<FactorSignature> signature_set(const TriangularMetric& a, double tol) {
    const int n = a.size();
    std::vector<FactorSignature> out;
    const auto push_unique = [&](FactorSignature sig) {
        std::sort(sig.factors.begin(), sig.factors.end(), factor_less);
        for (const auto& have : out) {
            if (have.factors.size() != sig.factors.size()) continue;
            bool same = true;
            for (size_t i = 0; i < sig.factors.size() && same; ++i) {
                same = have.factors[i].first == sig.factors[i].first &&
                       entrywise_close(have.factors[i].second, sig.factors[i].second, tol);
            }
            if (same) return;
        }
        out.push_back(std::move(sig));
    };

    // The whole-orbit singleton keys points in one move orbit together.
    FactorSignature whole;
    whole.factors.emplace_back(n, canonical_form(a, tol).matrix());
    push_unique(std::move(whole));

    for (const auto& g : orbit_group(n)) {
        const TriangularMetric image = apply_move(a, g);
        const Eigen::MatrixXd gram = image.matrix().transpose() * image.matrix();
        const auto comps = gram_components(gram, 1e-9);
        if (comps.size() < 2) continue;

        std::vector<std::vector<FactorSignature>> block_sigs;
        block_sigs.reserve(comps.size());
        for (const auto& comp : comps) {
            block_sigs.push_back(signature_set(factor_from_gram(gram, comp), tol));
        }
        // Every combination of block signatures flattens to a signature of
        // the product.
        std::vector<size_t> choice(comps.size(), 0);
        while (true) {
            FactorSignature merged;
            for (size_t b = 0; b < comps.size(); ++b) {
                const auto& f = block_sigs[b][choice[b]].factors;
                merged.factors.insert(merged.factors.end(), f.begin(), f.end());
            }
            push_unique(std::move(merged));
            size_t pos = 0;
            while (pos < comps.size() && ++choice[pos] == block_sigs[pos].size()) {
                choice[pos++] = 0;
            }
            if (pos == comps.size()) break;
        }
    }
    return out;
}

bool signatures_intersect(const std::vector<FactorSignature>& a,
                          const std::vector<FactorSignature>& b, double tol) {
    for (const auto& sa : a) {
        for (const auto& sb : b) {
            if (sa.factors.size() != sb.factors.size()) continue;
            bool same = true;
            for (size_t i = 0; i < sa.factors.size() && same; ++i) {
                same = sa.factors[i].first == sb.factors[i].first &&
                       entrywise_close(sa.factors[i].second, sb.factors[i].second, tol);
            }
            if (same) return true;
        }
    }
    return false;
}

}  // namespace detail

std::vector<IsometryClass> classify(const std::vector<CriticalPoint>& points, double tol) {
    const int np = static_cast<int>(points.size());
    std::vector<std::vector<detail::FactorSignature>> sigs(np);
    std::vector<TriangularMetric> canon;
    canon.reserve(np);
    for (int i = 0; i < np; ++i) {
        sigs[i] = detail::signature_set(points[i].matrix, tol);
        canon.push_back(canonical_form(points[i].matrix, tol));
    }

    // Union-find over points; the volume invariant is a cheap pre-filter.
    std::vector<int> parent(np);
    for (int i = 0; i < np; ++i) parent[i] = i;
    const auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < np; ++i) {
        for (int j = i + 1; j < np; ++j) {
            if (find(i) == find(j)) continue;
            if (std::abs(points[i].volume - points[j].volume) > 1e-9) continue;
            if (detail::signatures_intersect(sigs[i], sigs[j], tol)) {
                parent[find(j)] = find(i);
            }
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < np; ++i) {
        groups[find(i)].push_back(i);
    }

    std::vector<IsometryClass> classes;
    for (auto& [root, members] : groups) {
        IsometryClass cls{canon[members.front()], {}, points[members.front()].s_tilde,
                          points[members.front()].volume};
        for (int idx : members) {
            if (lex_less(canon[idx].matrix(), cls.canonical.matrix(), tol)) {
                cls.canonical = canon[idx];
            }
        }
        cls.members = std::move(members);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [tol](const IsometryClass& a, const IsometryClass& b) {
        if (std::abs(a.volume - b.volume) > 1e-9) return a.volume < b.volume;
        return lex_less(a.canonical.matrix(), b.canonical.matrix(), tol);
    });
    return classes;
}

}  // namespace loem
