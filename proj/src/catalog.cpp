#include "loem/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

namespace loem {

namespace {

constexpr int kPartitionBudget = 1000;
constexpr uint128 kU128Max = ~static_cast<uint128>(0);

uint128 checked_add(uint128 a, uint128 b) {
    if (a > kU128Max - b) {
        throw capacity_error("128-bit accumulator overflow");
    }
    return a + b;
}

uint128 checked_mul(uint128 a, uint128 b) {
    if (a != 0 && b > kU128Max / a) {
        throw capacity_error("128-bit accumulator overflow");
    }
    return a * b;
}

// Memoized pentagonal-number table, extended on demand.
std::vector<uint128>& partition_table() {
    static std::vector<uint128> table{1};  // p(0) = 1
    return table;
}
std::mutex partition_mutex;

bool metrics_equal(const TriangularMetric& a, const TriangularMetric& b, double tol) {
    return a.size() == b.size() &&
           (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

std::string u128_to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

TriangularMetric standard_matrix(int n) {
    if (n < 1) {
        throw std::domain_error("standard_matrix: n must be positive");
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i <= n; ++i) {
        const double r1 = static_cast<double>(n - i + 1);
        const double r2 = static_cast<double>(n - i + 2);
        for (int j = 1; j < i; ++j) {
            a(i - 1, j - 1) = 1.0 / std::sqrt(r1 * r2);
        }
        a(i - 1, i - 1) = std::sqrt(r2 / r1);
    }
    return TriangularMetric(a);
}

TriangularMetric standard_einstein_matrix(int n) {
    return scale(standard_matrix(n), std::sqrt(4.0 * (n + 1) / (n + 3)));
}

TriangularMetric routine_from_partition(const std::vector<int>& parts) {
    if (parts.empty()) {
        throw std::domain_error("routine_from_partition: empty part list");
    }
    std::vector<TriangularMetric> blocks;
    blocks.reserve(parts.size());
    for (int k : parts) {
        if (k < 1) {
            throw std::domain_error("routine_from_partition: parts must be positive");
        }
        blocks.push_back(standard_einstein_matrix(k));
    }
    return block_diag(blocks);
}

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 1) {
        throw std::domain_error("partitions_of: n must be positive");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<std::vector<int>> enumerate_compositions(int n) {
    if (n < 1) {
        throw std::domain_error("enumerate_compositions: n must be positive");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            cur.push_back(k);
            self(self, rest - k);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<TriangularMetric> routine_critical_points(int n, int budget) {
    if (n < 1) {
        throw std::domain_error("routine_critical_points: n must be positive");
    }
    if (n > budget) {
        throw capacity_error("routine_critical_points: n exceeds the configured budget");
    }

    // Forward declaration of hat without pulling in the isometry header: the
    // entrywise form of the last-row involution.
    const auto hat_rows = [](const TriangularMetric& a) {
        const int k = a.size();
        Eigen::MatrixXd b = a.matrix();
        for (int j = 0; j < k - 1; ++j) {
            b(k - 1, j) = b(k - 1, k - 1) - b(k - 1, j);
        }
        return TriangularMetric(b);
    };

    std::vector<TriangularMetric> out;
    for (const auto& comp : enumerate_compositions(n)) {
        const int l = static_cast<int>(comp.size());
        // Pair consecutive parts into super-blocks; an odd tail of three
        // parts goes into the last super-block. l = 1 has no pairs.
        std::vector<std::vector<int>> super;
        if (l >= 2) {
            int i = 0;
            while (i < l) {
                if (l - i == 3) {
                    super.push_back({comp[i], comp[i + 1], comp[i + 2]});
                    i += 3;
                } else {
                    super.push_back({comp[i], comp[i + 1]});
                    i += 2;
                }
            }
        } else {
            super.push_back(comp);
        }

        std::vector<TriangularMetric> super_blocks;
        super_blocks.reserve(super.size());
        for (const auto& parts : super) {
            super_blocks.push_back(routine_from_partition(parts));
        }
        const size_t m = l >= 2 ? super.size() : 0;
        for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
            std::vector<TriangularMetric> chosen;
            chosen.reserve(super_blocks.size());
            for (size_t b = 0; b < super_blocks.size(); ++b) {
                const bool hatted = m > 0 && ((mask >> b) & 1);
                chosen.push_back(hatted ? hat_rows(super_blocks[b]) : super_blocks[b]);
            }
            TriangularMetric candidate = block_diag(chosen);
            bool dup = false;
            for (const auto& have : out) {
                if (metrics_equal(have, candidate, 1e-10)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back(std::move(candidate));
        }
    }
    return out;
}

uint128 partition_count(int n) {
    if (n < 1 || n > kPartitionBudget) {
        throw capacity_error("partition_count: supported range is 1 <= n <= 1000");
    }
    std::lock_guard<std::mutex> lock(partition_mutex);
    auto& table = partition_table();
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        uint128 acc = 0;
        bool positive = true;
        for (int k = 1;; ++k) {
            const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m) break;
            uint128 term = table[m - g1];
            if (g2 <= m) term = checked_add(term, table[m - g2]);
            if (positive) {
                acc = checked_add(acc, term);
            } else {
                acc -= term;  // partial alternating sums stay non-negative
            }
            positive = !positive;
        }
        table.push_back(acc);
    }
    return table[n];
}

double emhs_lower_constant() {
    return std::numbers::sqrt2 * std::numbers::pi / 3.0;
}

bool maroti_inequality_holds(int n) {
    // Compare in log space so large p(n) never leaves the double range.
    const uint128 p = partition_count(n);
    const double log_p = std::log(static_cast<double>(p));
    const double log_bound = 2.5 * std::sqrt(static_cast<double>(n)) -
                             std::log(13.0 * static_cast<double>(n));
    return log_p > log_bound;
}

PartitionSummary bounds(int n) {
    PartitionSummary s;
    s.n = n;
    s.p_n = partition_count(n);
    const double nd = static_cast<double>(n);
    s.maroti_bound = std::exp(2.5 * std::sqrt(nd)) / (13.0 * nd);
    s.hardy_ramanujan =
        std::exp(std::numbers::pi * std::sqrt(2.0 * nd / 3.0)) / (4.0 * nd * std::sqrt(3.0));
    s.rem_sqrt2_bound = std::pow(1.0 + std::numbers::sqrt2, nd - 1.0);

    // Compositions have lengths l = 1..n; the sum runs over all of them.
    uint128 sum = 0;
    uint128 binom = 1;  // C(n-1, l-1), updated incrementally
    for (int l = 1; l <= n; ++l) {
        if (l > 1) {
            binom = checked_mul(binom, static_cast<uint128>(n - l + 1));
            binom /= static_cast<uint128>(l - 1);
        }
        const uint128 weight = checked_mul(binom, static_cast<uint128>(1) << (l / 2));
        sum = checked_add(sum, weight);
    }
    s.rem_sum_bound = sum;

    if (!maroti_inequality_holds(n)) {
        throw std::logic_error("bounds: p(n) fell below the claimed lower bound");
    }
    return s;
}

}  // namespace loem
