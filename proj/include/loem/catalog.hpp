#pragma once

#include <string>
#include <vector>

#include "loem/metric.hpp"

namespace loem {

using uint128 = unsigned __int128;

std::string u128_to_string(uint128 v);

/// Frame of the standard (Killing) metric: a_ij = 1/sqrt((n-i+1)(n-i+2)) for
/// j < i and a_ii = sqrt((n-i+2)/(n-i+1)). det = sqrt(n+1) and
/// S = n(n+3)/(n+1).
TriangularMetric standard_matrix(int n);

/// standard_matrix scaled by sqrt(4(n+1)/(n+3)); has Einstein constant 1.
TriangularMetric standard_einstein_matrix(int n);

/// Block diagonal of standard Einstein blocks for an ordered list of parts.
TriangularMetric routine_from_partition(const std::vector<int>& parts);

/// All non-increasing partitions of n, lexicographically descending.
std::vector<std::vector<int>> partitions_of(int n);

/// All 2^(n-1) ordered decompositions of n, lexicographic order.
std::vector<std::vector<int>> enumerate_compositions(int n);

/// Routine critical points in the Einstein-constant-1 normalization: for
/// every composition, consecutive parts are paired into super-blocks (an odd
/// tail is absorbed into the last super-block) and all hat-variant choices
/// are emitted, then exact duplicates are removed. Scaled by 1/2, every
/// output solves the Lagrange system. Count >= (1+sqrt(2))^(n-1).
std::vector<TriangularMetric> routine_critical_points(int n, int budget = 8);

/// Exact p(n) by Euler's pentagonal-number recurrence, 128-bit accumulators;
/// valid for 1 <= n <= 1000.
uint128 partition_count(int n);

struct PartitionSummary {
    int n = 0;
    uint128 p_n = 0;
    double maroti_bound = 0.0;      ///< exp(2.5 sqrt(n)) / (13 n), a strict lower bound for p(n)
    double hardy_ramanujan = 0.0;   ///< exp(pi sqrt(2n/3)) / (4 n sqrt(3))
    uint128 rem_sum_bound = 0;      ///< sum_l C(n-1, l-1) 2^{floor(l/2)}
    double rem_sqrt2_bound = 0.0;   ///< (1 + sqrt(2))^(n-1)
};

/// Reported alongside the bounds: the exponential growth constant
/// sqrt(2) pi / 3 of the census over the three-dimensional fiber family.
double emhs_lower_constant();

PartitionSummary bounds(int n);

/// log p(n) > 2.5 sqrt(n) - log(13 n), compared in log space.
bool maroti_inequality_holds(int n);

}  // namespace loem
