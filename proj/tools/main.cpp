#include <chrono>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "loem/catalog.hpp"
#include "loem/io.hpp"
#include "loem/isometry.hpp"
#include "loem/reference.hpp"
#include "loem/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

constexpr int kSolveSoftCap = 6;

struct CliConfig {
    int n = 3;
    loem::SolverOptions solver;
    std::string convention = "stilde-n";
    std::string out;
    std::string format = "json";
    std::string input;
    bool allow_large = false;
};

void write_or_print(const std::string& out_path, const std::string& contents) {
    if (out_path.empty()) {
        std::cout << contents;
        if (contents.empty() || contents.back() != '\n') std::cout << '\n';
    } else {
        loem::atomic_write(out_path, contents);
    }
}

void print_matrix(const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::printf("  [");
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::printf("%s% .15g", j ? ", " : " ", m(i, j));
        }
        std::printf(" ]\n");
    }
}

int cmd_solve(const CliConfig& cfg) {
    if (cfg.n > kSolveSoftCap && !cfg.allow_large) {
        throw loem::capacity_error(
            "solve: n > 6 grows factorially; pass --allow-large to override");
    }
    const auto convention = loem::normalization_from_string(cfg.convention);
    const auto t0 = std::chrono::steady_clock::now();
    auto points = loem::multistart(cfg.n, cfg.solver);
    if (convention != loem::Normalization::STildeEqualsN) {
        for (auto& p : points) p = loem::normalize(p, convention);
    }
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string contents;
    if (cfg.format == "csv") {
        contents = loem::points_to_csv(points);
    } else {
        contents = loem::solve_result_to_json(cfg.n, convention, points).dump(2) + "\n";
    }
    if (!cfg.out.empty()) {
        loem::atomic_write(cfg.out, contents);
    }

    std::fprintf(stderr, "n=%d starts=%d seed=%llu: %zu critical points (%.2fs)\n", cfg.n,
                 cfg.solver.starts, static_cast<unsigned long long>(cfg.solver.seed),
                 points.size(), elapsed);
    std::fprintf(stderr, "%4s %14s %14s %12s\n", "#", "s_tilde", "volume", "residual");
    for (size_t i = 0; i < points.size(); ++i) {
        std::fprintf(stderr, "%4zu %14.10f %14.10f %12.3e\n", i + 1, points[i].s_tilde,
                     points[i].volume, points[i].residual_norm);
    }
    if (cfg.out.empty()) {
        std::cout << contents;
    }
    return kExitOk;
}

int cmd_classify(const CliConfig& cfg) {
    const auto doc = loem::ordered_json::parse(loem::read_file(cfg.input));
    const auto result = loem::solve_result_from_json(doc);
    const auto classes = loem::classify(result.points);
    write_or_print(cfg.out, loem::classes_to_json(classes).dump(2) + "\n");
    std::fprintf(stderr, "%zu points -> %zu isometry classes\n", result.points.size(),
                 classes.size());
    for (size_t i = 0; i < classes.size(); ++i) {
        std::fprintf(stderr, "class %zu: %zu members, s_tilde=%.10f, volume=%.10f\n", i + 1,
                     classes[i].members.size(), classes[i].s_tilde, classes[i].volume);
    }
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg, double tol) {
    const auto doc = loem::ordered_json::parse(loem::read_file(cfg.input));
    auto result = loem::solve_result_from_json(doc);
    if (!loem::has_reference_census(result.n)) {
        std::fprintf(stderr, "verify: no bundled reference census for n = %d\n", result.n);
        return kExitUsage;
    }
    for (auto& p : result.points) {
        if (p.normalization != loem::Normalization::STildeEqualsN) {
            p = loem::normalize(p, loem::Normalization::STildeEqualsN);
        }
    }
    const auto refs = loem::reference_coords(result.n);
    const auto report = loem::verify_against_reference(result.points, refs, tol);
    write_or_print(cfg.out, loem::match_report_to_json(report, result.points.size(),
                                                       refs.size())
                                    .dump(2) +
                                "\n");
    std::fprintf(stderr, "%zu/%zu matched\n", report.matched.size(), refs.size());
    if (report.perfect() && report.matched.size() == refs.size()) {
        return kExitOk;
    }
    for (int j : report.missing_refs) {
        std::fprintf(stderr, "missing reference row %d\n",
                     loem::reference_census(result.n)[j].index);
    }
    for (int i : report.extra_points) {
        std::fprintf(stderr, "unmatched solved point %d\n", i + 1);
    }
    return kExitMismatch;
}

int cmd_catalog(const CliConfig& cfg) {
    const auto doc = loem::catalog_to_json(cfg.n);
    write_or_print(cfg.out, doc.dump(2) + "\n");
    std::fprintf(stderr, "n=%d: %zu partitions, %zu routine points\n", cfg.n,
                 doc.at("partitions").size(), doc.at("routine_points").size());
    return kExitOk;
}

int cmd_bounds(const CliConfig& cfg) {
    const auto summary = loem::bounds(cfg.n);
    write_or_print(cfg.out, loem::bounds_to_json(summary).dump(2) + "\n");
    std::fprintf(stderr,
                 "n=%d p=%s maroti=%.6g hardy_ramanujan=%.6g rem_sum=%s rem_sqrt2=%.6g "
                 "emhs=%.9f\n",
                 summary.n, loem::u128_to_string(summary.p_n).c_str(), summary.maroti_bound,
                 summary.hardy_ramanujan, loem::u128_to_string(summary.rem_sum_bound).c_str(),
                 summary.rem_sqrt2_bound, loem::emhs_lower_constant());
    return kExitOk;
}

int cmd_standard(const CliConfig& cfg) {
    const auto killing = loem::standard_matrix(cfg.n);
    const auto einstein = loem::standard_einstein_matrix(cfg.n);
    if (!cfg.out.empty()) {
        loem::ordered_json doc;
        doc["n"] = cfg.n;
        doc["killing_frame"] = loem::matrix_to_json(killing.matrix());
        doc["einstein_frame"] = loem::matrix_to_json(einstein.matrix());
        loem::atomic_write(cfg.out, doc.dump(2) + "\n");
    }
    std::printf("Killing frame (det=%.12g, s_tilde=%.12g):\n", loem::volume(killing),
                loem::scalar_curvature_triangular(killing));
    print_matrix(killing.matrix());
    std::printf("Einstein-constant-1 frame (s_tilde=%.12g):\n",
                loem::scalar_curvature_triangular(einstein));
    print_matrix(einstein.matrix());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census, classification and counting of invariant Einstein metrics on "
                 "Ledger-Obata spaces"};
    app.require_subcommand(1);

    CliConfig cfg;
    double verify_tol = 1e-7;

    auto add_common = [&cfg](CLI::App* cmd, bool with_n) {
        if (with_n) {
            cmd->add_option("-n,--factors", cfg.n, "number of group factors")
                ->check(CLI::PositiveNumber);
        }
        cmd->add_option("--out", cfg.out, "output file (defaults to stdout)");
    };

    auto* solve = app.add_subcommand("solve", "multistart census of critical points");
    add_common(solve, true);
    solve->add_option("--starts", cfg.solver.starts, "number of random starts")
        ->check(CLI::PositiveNumber);
    solve->add_option("--seed", cfg.solver.seed, "RNG seed");
    solve->add_option("--tol", cfg.solver.newton_tol, "Newton residual tolerance");
    solve->add_option("--dedup-tol", cfg.solver.dedup_tol, "root deduplication tolerance");
    solve->add_option("--threads", cfg.solver.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    solve->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    solve->add_option("--convention", cfg.convention, "normalization of reported points")
        ->check(CLI::IsMember({"stilde-n", "einstein-1", "unit-volume"}));
    solve->add_flag("--allow-large", cfg.allow_large, "lift the n <= 6 soft cap");

    auto* classify = app.add_subcommand("classify", "group solved points into isometry classes");
    classify->add_option("input", cfg.input, "solve output (json)")->required();
    add_common(classify, false);

    auto* verify = app.add_subcommand("verify", "match solved points against the bundled census");
    verify->add_option("input", cfg.input, "solve output (json)")->required();
    verify->add_option("--tol", verify_tol, "matching tolerance");
    add_common(verify, false);

    auto* catalog = app.add_subcommand("catalog", "partitions and routine critical points");
    add_common(catalog, true);

    auto* bounds = app.add_subcommand("bounds", "partition counts and lower bounds");
    add_common(bounds, true);

    auto* standard = app.add_subcommand("standard", "print the standard metric frames");
    add_common(standard, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(cfg);
        if (classify->parsed()) return cmd_classify(cfg);
        if (verify->parsed()) return cmd_verify(cfg, verify_tol);
        if (catalog->parsed()) return cmd_catalog(cfg);
        if (bounds->parsed()) return cmd_bounds(cfg);
        if (standard->parsed()) return cmd_standard(cfg);
    } catch (const loem::capacity_error& e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
