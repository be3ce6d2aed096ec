#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loem/catalog.hpp"
#include "loem/isometry.hpp"
#include "loem/solver.hpp"

namespace loem {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Normalization n);
Normalization normalization_from_string(const std::string& s);

ordered_json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const ordered_json& j);

/// { n, convention, points: [ { x, u, matrix, s_tilde, volume, residual_norm } ] }
ordered_json solve_result_to_json(int n, Normalization convention,
                                  const std::vector<CriticalPoint>& points);

struct SolveResult {
    int n = 0;
    Normalization convention = Normalization::STildeEqualsN;
    std::vector<CriticalPoint> points;
};

/// Parses a solve result; throws std::runtime_error (or json exceptions) on
/// malformed input.
SolveResult solve_result_from_json(const ordered_json& j);

std::string points_to_csv(const std::vector<CriticalPoint>& points);

/// { s_tilde, volume, einstein_constant, total_scalar | null }
ordered_json curvature_report_to_json(const CurvatureReport& report);

/// { classes: [ { volume, s_tilde, canonical_matrix, member_indices } ] }
ordered_json classes_to_json(const std::vector<IsometryClass>& classes);

ordered_json match_report_to_json(const MatchReport& report, int n_points, int n_refs);

/// { n, partitions, routine_points, counts }
ordered_json catalog_to_json(int n);

ordered_json bounds_to_json(const PartitionSummary& s);

/// Writes via a temporary file in the same directory plus an atomic rename.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace loem
