#include <cmath>

#include <doctest.h>

#include "loem/catalog.hpp"
#include "loem/curvature.hpp"
#include "loem/io.hpp"
#include "test_util.hpp"

using namespace loem;
using namespace loem::testing;

namespace {

// Independent oracle: the fully expanded degree-3 expression in ratio
// coordinates (x, y, z, u, v, w).
double stilde3_expanded(double x, double y, double z, double u, double v, double w) {
    const double t1 = u * x - y;
    const double t2 = v * x - w * y;
    const double t3 = w * y - z;
    const double t4 = v * v * x - w * w * u * y + (w * u - v) * z;
    return x * x + y * y + z * z - u * u * t1 * t1 - 2.0 * u * u * t2 * t2 -
           w * w * t3 * t3 - t4 * t4;
}

double stilde2_expanded(double x, double y, double u) {
    const double t = u * u * x - u * y;
    return x * x + y * y - t * t;
}

}  // namespace

TEST_SUITE_BEGIN("curvature");

TEST_CASE("lambda_term closed forms on triangular frames") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_metric(4, rng);
        const auto beta = inverse(a);
        for (int i = 0; i < 4; ++i) {
            CHECK(lambda_term(a.matrix(), beta, i, i, i) ==
                  doctest::Approx(a(i, i) * a(i, i)).epsilon(1e-12));
            for (int j = i + 1; j < 4; ++j) {
                CHECK(lambda_term(a.matrix(), beta, i, j, i) ==
                      doctest::Approx(a(j, i) * a(j, i)).epsilon(1e-12));
                CHECK(lambda_term(a.matrix(), beta, j, i, i) ==
                      doctest::Approx(lambda_term(a.matrix(), beta, i, j, i))
                          .epsilon(1e-14));
            }
        }
    }

    const double x = 1.3, y = 0.8, u = 0.6;
    Eigen::MatrixXd m(2, 2);
    m << x, 0, u * x, y;
    const TriangularMetric a2(m);
    const double expected = std::pow(u * u * x - u * y, 2);
    CHECK(lambda_term(a2.matrix(), inverse(a2), 1, 1, 0) ==
          doctest::Approx(expected).epsilon(1e-13));

    CHECK_THROWS_AS(lambda_term(a2.matrix(), inverse(a2), 0, 0, 2), std::out_of_range);
}

TEST_CASE("scalar_curvature_general on known frames") {
    CHECK(scalar_curvature_general(Eigen::MatrixXd::Identity(3, 3)) ==
          doctest::Approx(3.0).epsilon(1e-14));
    CHECK(scalar_curvature_general(standard_matrix(3).matrix()) ==
          doctest::Approx(4.5).epsilon(1e-12));
    CHECK(scalar_curvature_general(census_matrix(3, 22).matrix()) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(scalar_curvature_general(Eigen::MatrixXd::Zero(2, 2)),
                    degeneracy_error);
}

TEST_CASE("triangular form matches the expanded polynomial oracle") {
    std::mt19937_64 rng(22);
    RatioCoordinates c;
    c.x = Eigen::Vector2d(1, 1);
    c.u = Eigen::VectorXd::Constant(1, 1.0);
    CHECK(scalar_curvature_triangular(from_ratio_coords(c)) ==
          doctest::Approx(2.0).epsilon(1e-14));

    for (int rep = 0; rep < 50; ++rep) {
        const auto c3 = random_coords(3, rng);
        const double got = scalar_curvature_triangular(from_ratio_coords(c3));
        const double want = stilde3_expanded(c3.x[0], c3.x[1], c3.x[2], c3.u[0],
                                             c3.u[1], c3.u[2]);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));

        const auto c2 = random_coords(2, rng);
        CHECK(scalar_curvature_triangular(from_ratio_coords(c2)) ==
              doctest::Approx(stilde2_expanded(c2.x[0], c2.x[1], c2.u[0]))
                  .epsilon(1e-12));
    }
}

TEST_CASE("general and triangular forms agree") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto a = random_metric(n, rng);
        const double st = scalar_curvature_triangular(a);
        const double sg = scalar_curvature_general(a.matrix());
        CHECK(std::abs(st - sg) <= 1e-10 * std::max(1.0, std::abs(st)));
    }
}

TEST_CASE("orthogonal invariance of the general form") {
    std::mt19937_64 rng(24);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto a = random_metric(n, rng);
        const Eigen::MatrixXd q = random_orthogonal(n, rng);
        const double s0 = scalar_curvature_general(a.matrix());
        const double s1 = scalar_curvature_general(q * a.matrix());
        CHECK(std::abs(s0 - s1) <= 1e-9 * std::max(1.0, std::abs(s0)));
    }
}

TEST_CASE("homogeneity of degree two") {
    std::mt19937_64 rng(25);
    for (double c : {0.5, 2.0, 3.0}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = random_metric(4, rng);
            const double s0 = scalar_curvature_triangular(a);
            const double s1 = scalar_curvature_triangular(scale(a, c));
            CHECK(std::abs(s1 - c * c * s0) <= 1e-12 * std::max(1.0, std::abs(c * c * s0)));
        }
    }
}

TEST_CASE("Euler identity: sum x_i dS/dx_i = 2S") {
    std::mt19937_64 rng(26);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto c = random_coords(n, rng);
        const auto g = gradient_ratio(c);
        const double lhs = c.x.dot(g.x);
        const double rhs = 2.0 * scalar_curvature_triangular(from_ratio_coords(c));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("block additivity") {
    std::mt19937_64 rng(27);
    for (int rep = 0; rep < 30; ++rep) {
        const auto a = random_metric(2, rng);
        const auto b = random_metric(3, rng);
        const double sum = scalar_curvature_triangular(a) + scalar_curvature_triangular(b);
        const double whole = scalar_curvature_triangular(block_diag(a, b));
        CHECK(std::abs(whole - sum) <= 1e-10 * std::max(1.0, std::abs(sum)));
    }
}

TEST_CASE("gradient at the identity coordinates") {
    for (int n = 1; n <= 5; ++n) {
        RatioCoordinates c;
        c.x = Eigen::VectorXd::Ones(n);
        c.u = Eigen::VectorXd::Zero(RatioCoordinates::ratio_count(n));
        const auto g = gradient_ratio(c);
        for (int i = 0; i < n; ++i) CHECK(g.x[i] == doctest::Approx(2.0).epsilon(1e-14));
        for (int i = 0; i < g.u.size(); ++i) CHECK(g.u[i] == doctest::Approx(0.0));
    }
}

TEST_CASE("n=2 ratio derivative reproduces the cubic factorization") {
    std::mt19937_64 rng(28);
    for (int rep = 0; rep < 40; ++rep) {
        const auto c = random_coords(2, rng);
        const double x = c.x[0], y = c.x[1], u = c.u[0];
        const auto g = gradient_ratio(c);
        const double expected = -2.0 * u * (u * x - y) * (2.0 * u * x - y);
        CHECK(g.u[0] == doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("census row 20 is a critical point of the constrained problem") {
    const auto& row20 = reference_census(3).at(19);
    const auto g = gradient_ratio(row20.coords);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(row20.coords.x[i] * g.x[i] - 2.0) < 1e-9);
    }
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(g.u[i]) < 1e-9);
    }
}

TEST_CASE("analytic gradient against central finite differences") {
    std::mt19937_64 rng(29);
    const double h = 1e-6;
    int checked = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const auto c = random_coords(n, rng);
        const auto g = gradient_ratio(c);
        const auto eval = [&](const RatioCoordinates& cc) {
            return scalar_curvature_triangular(from_ratio_coords(cc));
        };
        for (int i = 0; i < n; ++i) {
            auto cp = c, cm = c;
            cp.x[i] += h;
            cm.x[i] -= h;
            const double fd = (eval(cp) - eval(cm)) / (2.0 * h);
            if (std::abs(g.x[i]) > 1e-8) {
                CHECK(std::abs(fd - g.x[i]) <= 1e-6 * std::abs(g.x[i]));
                ++checked;
            }
        }
        for (int i = 0; i < c.u.size(); ++i) {
            auto cp = c, cm = c;
            cp.u[i] += h;
            cm.u[i] -= h;
            const double fd = (eval(cp) - eval(cm)) / (2.0 * h);
            if (std::abs(g.u[i]) > 1e-8) {
                CHECK(std::abs(fd - g.u[i]) <= 1e-6 * std::abs(g.u[i]));
                ++checked;
            }
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("einstein_constant") {
    for (int n = 1; n <= 10; ++n) {
        const double st = n * (n + 3.0) / (n + 1.0);
        CHECK(einstein_constant(st, n) ==
              doctest::Approx((n + 3.0) / (4.0 * (n + 1.0))).epsilon(1e-14));
        CHECK(einstein_constant(4.0 * n, n) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(einstein_constant(static_cast<double>(n), n) ==
              doctest::Approx(0.25).epsilon(1e-15));
    }
}

TEST_CASE("curvature_report") {
    std::mt19937_64 rng(30);
    const auto a = random_metric(3, rng);
    const auto plain = curvature_report(a);
    CHECK(!plain.total_scalar.has_value());
    CHECK(plain.einstein_constant * 4.0 * 3 ==
          doctest::Approx(plain.s_tilde).epsilon(1e-12));
    CHECK(plain.volume == doctest::Approx(volume(a)).epsilon(1e-15));

    const auto with_p = curvature_report(a, 3.0);
    REQUIRE(with_p.total_scalar.has_value());
    CHECK(*with_p.total_scalar == doctest::Approx(0.75 * with_p.s_tilde).epsilon(1e-14));

    const auto jplain = curvature_report_to_json(plain);
    CHECK(jplain.at("total_scalar").is_null());
    CHECK(jplain.at("s_tilde").get<double>() == plain.s_tilde);
    const auto jp = curvature_report_to_json(with_p);
    CHECK(jp.at("total_scalar").get<double>() == *with_p.total_scalar);
}

TEST_SUITE_END();
