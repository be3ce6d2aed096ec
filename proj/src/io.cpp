#include "loem/io.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace loem {

namespace {

std::vector<double> vec_to_std(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

Eigen::VectorXd vec_from_std(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(Normalization n) {
    switch (n) {
        case Normalization::STildeEqualsN: return "stilde-n";
        case Normalization::EinsteinConstantOne: return "einstein-1";
        case Normalization::UnitVolume: return "unit-volume";
    }
    throw std::logic_error("unknown normalization");
}

Normalization normalization_from_string(const std::string& s) {
    if (s == "stilde-n") return Normalization::STildeEqualsN;
    if (s == "einstein-1") return Normalization::EinsteinConstantOne;
    if (s == "unit-volume") return Normalization::UnitVolume;
    throw std::runtime_error("unknown convention: " + s);
}

ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const ordered_json& j) {
    const auto rows = j.get<std::vector<std::vector<double>>>();
    const auto n = rows.size();
    Eigen::MatrixXd m(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw std::runtime_error("matrix_from_json: ragged matrix");
        }
        for (size_t jj = 0; jj < n; ++jj) {
            m(i, jj) = rows[i][jj];
        }
    }
    return m;
}

ordered_json solve_result_to_json(int n, Normalization convention,
                                  const std::vector<CriticalPoint>& points) {
    ordered_json doc;
    doc["n"] = n;
    doc["convention"] = to_string(convention);
    ordered_json pts = ordered_json::array();
    for (const auto& p : points) {
        ordered_json jp;
        jp["x"] = vec_to_std(p.coords.x);
        jp["u"] = vec_to_std(p.coords.u);
        jp["matrix"] = matrix_to_json(p.matrix.matrix());
        jp["s_tilde"] = p.s_tilde;
        jp["volume"] = p.volume;
        jp["residual_norm"] = p.residual_norm;
        pts.push_back(std::move(jp));
    }
    doc["points"] = std::move(pts);
    return doc;
}

SolveResult solve_result_from_json(const ordered_json& j) {
    SolveResult r;
    r.n = j.at("n").get<int>();
    if (r.n < 1) {
        throw std::runtime_error("solve_result_from_json: invalid n");
    }
    r.convention = normalization_from_string(j.at("convention").get<std::string>());
    for (const auto& jp : j.at("points")) {
        CriticalPoint p{RatioCoordinates{vec_from_std(jp.at("x").get<std::vector<double>>()),
                                         vec_from_std(jp.at("u").get<std::vector<double>>())},
                        TriangularMetric(matrix_from_json(jp.at("matrix"))),
                        jp.at("s_tilde").get<double>(),
                        jp.at("volume").get<double>(),
                        jp.at("residual_norm").get<double>(),
                        r.convention};
        if (p.coords.size() != r.n ||
            p.coords.u.size() != RatioCoordinates::ratio_count(r.n)) {
            throw std::runtime_error("solve_result_from_json: coordinate size mismatch");
        }
        r.points.push_back(std::move(p));
    }
    return r;
}

std::string points_to_csv(const std::vector<CriticalPoint>& points) {
    std::ostringstream out;
    if (points.empty()) {
        return "";
    }
    const int n = points.front().coords.size();
    out << "index";
    for (int i = 1; i <= n; ++i) out << ",x" << i;
    for (int i = 2; i <= n; ++i) {
        for (int j = 1; j < i; ++j) out << ",u" << i << j;
    }
    out << ",s_tilde,volume,residual_norm\n";
    for (size_t k = 0; k < points.size(); ++k) {
        const auto& p = points[k];
        out << (k + 1);
        for (int i = 0; i < p.coords.x.size(); ++i) out << ',' << format_g17(p.coords.x[i]);
        for (int i = 0; i < p.coords.u.size(); ++i) out << ',' << format_g17(p.coords.u[i]);
        out << ',' << format_g17(p.s_tilde) << ',' << format_g17(p.volume) << ','
            << format_g17(p.residual_norm) << '\n';
    }
    return out.str();
}

ordered_json curvature_report_to_json(const CurvatureReport& report) {
    ordered_json doc;
    doc["s_tilde"] = report.s_tilde;
    doc["volume"] = report.volume;
    doc["einstein_constant"] = report.einstein_constant;
    doc["total_scalar"] = report.total_scalar ? ordered_json(*report.total_scalar)
                                              : ordered_json(nullptr);
    return doc;
}

ordered_json classes_to_json(const std::vector<IsometryClass>& classes) {
    ordered_json doc;
    ordered_json arr = ordered_json::array();
    for (const auto& c : classes) {
        ordered_json jc;
        jc["volume"] = c.volume;
        jc["s_tilde"] = c.s_tilde;
        jc["canonical_matrix"] = matrix_to_json(c.canonical.matrix());
        jc["member_indices"] = c.members;
        arr.push_back(std::move(jc));
    }
    doc["classes"] = std::move(arr);
    return doc;
}

ordered_json match_report_to_json(const MatchReport& report, int n_points, int n_refs) {
    ordered_json doc;
    doc["points"] = n_points;
    doc["references"] = n_refs;
    ordered_json matched = ordered_json::array();
    for (const auto& [found, ref] : report.matched) {
        matched.push_back(ordered_json::array({found, ref}));
    }
    doc["matched"] = std::move(matched);
    doc["missing_references"] = report.missing_refs;
    doc["extra_points"] = report.extra_points;
    doc["perfect"] = report.perfect();
    return doc;
}

ordered_json catalog_to_json(int n) {
    ordered_json doc;
    doc["n"] = n;
    doc["partitions"] = partitions_of(n);
    ordered_json pts = ordered_json::array();
    for (const auto& m : routine_critical_points(n)) {
        pts.push_back(matrix_to_json(m.matrix()));
    }
    doc["routine_points"] = std::move(pts);
    doc["counts"] = bounds_to_json(bounds(n));
    return doc;
}

ordered_json bounds_to_json(const PartitionSummary& s) {
    ordered_json doc;
    doc["n"] = s.n;
    doc["p_n"] = u128_to_string(s.p_n);
    doc["maroti_bound"] = s.maroti_bound;
    doc["hardy_ramanujan"] = s.hardy_ramanujan;
    doc["rem_sum_bound"] = u128_to_string(s.rem_sum_bound);
    doc["rem_sqrt2_bound"] = s.rem_sqrt2_bound;
    doc["emhs_lower_constant"] = emhs_lower_constant();
    return doc;
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    fs::create_directories(dir);
    std::random_device rd;
    const fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("atomic_write: cannot open " + tmp.string());
        }
        out << contents;
        if (!out.flush()) {
            throw std::runtime_error("atomic_write: write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace loem
