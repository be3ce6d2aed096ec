#include <cmath>
#include <set>

#include <doctest.h>

#include "loem/curvature.hpp"
#include "loem/isometry.hpp"
#include "test_util.hpp"

using namespace loem;
using namespace loem::testing;

namespace {

std::vector<CriticalPoint> census_points(int n) {
    std::vector<CriticalPoint> pts;
    for (const auto& ref : reference_census(n)) {
        const auto matrix = from_ratio_coords(ref.coords);
        pts.push_back({ref.coords, matrix, scalar_curvature_triangular(matrix),
                       volume(matrix), 0.0, Normalization::STildeEqualsN});
    }
    return pts;
}

bool same_canonical(const TriangularMetric& a, const TriangularMetric& b, double tol = 1e-8) {
    return max_abs_diff(canonical_form(a).matrix(), canonical_form(b).matrix()) <= tol;
}

}  // namespace

TEST_SUITE_BEGIN("isometry");

TEST_CASE("t_matrix definition and involution") {
    const auto t22 = t_matrix(2, 2);
    Eigen::MatrixXi expected(2, 2);
    expected << 1, 0, -1, -1;
    CHECK((t22 - expected).cwiseAbs().maxCoeff() == 0);

    const auto t32 = t_matrix(3, 2);
    Eigen::MatrixXi expected3(3, 3);
    expected3 << 1, 0, 0, -1, -1, -1, 0, 0, 1;
    CHECK((t32 - expected3).cwiseAbs().maxCoeff() == 0);

    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto t = t_matrix(n, k);
            CHECK(((t * t) - Eigen::MatrixXi::Identity(n, n)).cwiseAbs().maxCoeff() == 0);
            CHECK(std::lround(t.cast<double>().determinant()) == -1);
        }
    }

    CHECK_THROWS_AS(t_matrix(3, 0), std::out_of_range);
    CHECK_THROWS_AS(t_matrix(3, 4), std::out_of_range);
}

TEST_CASE("orbit_group closure sizes and element structure") {
    const auto& g1 = orbit_group(1);
    REQUIRE(g1.size() == 2);
    std::set<int> entries{g1[0](0, 0), g1[1](0, 0)};
    CHECK(entries == std::set<int>{-1, 1});

    const long expected[] = {2, 6, 24, 120};
    for (int n = 1; n <= 4; ++n) {
        const auto& g = orbit_group(n);
        CHECK(static_cast<long>(g.size()) == expected[n - 1]);
        for (const auto& el : g) {
            CHECK(el.cwiseAbs().maxCoeff() <= 1);
            CHECK(std::lround(std::abs(el.cast<double>().determinant())) == 1);
        }
    }
    CHECK_THROWS_AS(orbit_group(9), capacity_error);
}

TEST_CASE("apply_move preserves curvature and volume") {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 4; ++n) {
        const auto a = random_metric(n, rng);
        const double s0 = scalar_curvature_triangular(a);
        const double v0 = volume(a);
        for (const auto& g : orbit_group(n)) {
            const auto moved = apply_move(a, g);
            CHECK(std::abs(scalar_curvature_triangular(moved) - s0) <=
                  1e-9 * std::max(1.0, std::abs(s0)));
            CHECK(std::abs(volume(moved) - v0) <= 1e-10 * std::max(1.0, v0));
        }
    }
}

TEST_CASE("apply_move on the displayed identities") {
    Eigen::MatrixXd lower(2, 2);
    lower << 1, 0, 1, 1;
    const auto moved = apply_move(TriangularMetric(lower), t_matrix(2, 2));
    CHECK(max_abs_diff(moved.matrix(), Eigen::MatrixXd::Identity(2, 2)) < 1e-14);

    // column swap (2<->3) carries census row 7 into row 11's move orbit
    Eigen::MatrixXi swap23(3, 3);
    swap23 << 1, 0, 0, 0, 0, 1, 0, 1, 0;
    const auto r7 = census_matrix(3, 7);
    const auto r11 = census_matrix(3, 11);
    CHECK(same_canonical(apply_move(r7, swap23), r11));

    std::mt19937_64 rng(42);
    const auto a = random_metric(3, rng);
    CHECK(max_abs_diff(apply_move(a, Eigen::MatrixXi::Identity(3, 3)).matrix(),
                       a.matrix()) < 1e-12);
}

TEST_CASE("canonical_form is idempotent and constant on orbits") {
    std::mt19937_64 rng(43);
    for (int n = 2; n <= 4; ++n) {
        const auto a = random_metric(n, rng);
        const auto c = canonical_form(a);
        CHECK(max_abs_diff(canonical_form(c).matrix(), c.matrix()) < 1e-10);
        for (const auto& g : orbit_group(n)) {
            CHECK(max_abs_diff(canonical_form(apply_move(a, g)).matrix(), c.matrix()) <
                  1e-8);
        }
    }

    Eigen::MatrixXd lower(2, 2);
    lower << 1, 0, 1, 1;
    CHECK(same_canonical(TriangularMetric::identity(2), TriangularMetric(lower)));
    CHECK(same_canonical(census_matrix(3, 20), census_matrix(3, 18)));
}

TEST_CASE("hat involution and fixed points") {
    Eigen::MatrixXd lower(2, 2);
    lower << 1, 0, 1, 1;
    CHECK(max_abs_diff(hat(TriangularMetric(lower)).matrix(),
                       Eigen::MatrixXd::Identity(2, 2)) < 1e-14);

    std::mt19937_64 rng(44);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto a = random_metric(n, rng);
        const auto h = hat(a);

        // entrywise description of the move
        Eigen::MatrixXd expected = a.matrix();
        for (int j = 0; j < n - 1; ++j) {
            expected(n - 1, j) = expected(n - 1, n - 1) - expected(n - 1, j);
        }
        CHECK(max_abs_diff(h.matrix(), expected) < 1e-10);
        CHECK(max_abs_diff(hat(h).matrix(), a.matrix()) < 1e-10);
        CHECK(same_canonical(h, a));
    }

    // hat fixes exactly the frames with doubled last-row entries
    Eigen::MatrixXd fixed(3, 3);
    fixed << 1, 0, 0, 0.3, 1.2, 0, 1, 1, 2;
    CHECK(max_abs_diff(hat(TriangularMetric(fixed)).matrix(), fixed) < 1e-14);
    fixed(2, 0) = 0.7;
    CHECK(max_abs_diff(hat(TriangularMetric(fixed)).matrix(), fixed) > 0.1);
}

TEST_CASE("classify the bundled censuses") {
    const auto classes3 = classify(census_points(3));
    REQUIRE(classes3.size() == 3);
    // sorted by volume: 1 < 4 sqrt(6)/9 < 3 sqrt(3)/5 is false; 3 sqrt(3)/5
    // = 1.0392 < 4 sqrt(6)/9 = 1.0887, so the order is 1, 1.0392, 1.0887
    CHECK(classes3[0].volume == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(classes3[1].volume == doctest::Approx(3.0 * std::sqrt(3.0) / 5.0).epsilon(1e-9));
    CHECK(classes3[2].volume == doctest::Approx(4.0 * std::sqrt(6.0) / 9.0).epsilon(1e-9));
    CHECK(classes3[0].members.size() == 16);
    CHECK(classes3[1].members.size() == 12);
    CHECK(classes3[2].members.size() == 1);
    for (int idx : classes3[0].members) CHECK(idx <= 15);
    for (int idx : classes3[1].members) CHECK(idx >= 17);
    CHECK(classes3[2].members == std::vector<int>{16});

    const auto classes2 = classify(census_points(2));
    REQUIRE(classes2.size() == 2);
    CHECK(classes2[0].members.size() == 3);
    CHECK(classes2[1].members.size() == 1);

    const auto single = classify({census_points(2).front()});
    CHECK(single.size() == 1);
}

TEST_CASE("classification agrees across normalization conventions") {
    for (int n : {2, 3}) {
        const auto base = census_points(n);
        std::vector<CriticalPoint> einstein;
        for (const auto& pt : base) einstein.push_back(normalize(pt, Normalization::EinsteinConstantOne));
        std::vector<CriticalPoint> unit;
        for (const auto& pt : base) unit.push_back(normalize(pt, Normalization::UnitVolume));

        const auto cb = classify(base);
        const auto ce = classify(einstein);
        REQUIRE(cb.size() == ce.size());
        for (size_t i = 0; i < cb.size(); ++i) {
            CHECK(cb[i].members == ce[i].members);
        }
        // unit volume collapses the volume pre-filter entirely, yet the
        // grouping into classes must be unchanged (up to class order)
        const auto cu = classify(unit);
        REQUIRE(cu.size() == cb.size());
        std::set<std::vector<int>> want, got;
        for (const auto& c : cb) want.insert(c.members);
        for (const auto& c : cu) got.insert(c.members);
        CHECK(want == got);
    }
}

TEST_CASE("the explicit pairings hold as class equalities") {
    // pairs and triples connected through column swaps or the hat move
    const std::vector<std::vector<int>> groups = {
        {2, 3, 4}, {7, 11, 13}, {8, 12}, {18, 24, 28}, {19, 25},
        {2, 6},    {13, 14},    {18, 19}, {28, 29},
    };
    for (const auto& g : groups) {
        for (size_t i = 1; i < g.size(); ++i) {
            CAPTURE(g[0]);
            CAPTURE(g[i]);
            CHECK(same_canonical(census_matrix(3, g[0]), census_matrix(3, g[i])));
        }
    }

    // the nine enumerated identities, as canonical-form equalities
    const std::vector<std::pair<int, int>> identities = {
        {7, 4},   {8, 6},   {9, 5},   {10, 9},  {15, 14}, {16, 12},
        {20, 18}, {21, 20}, {22, 27}, {23, 26}, {26, 29}, {27, 28},
    };
    for (const auto& [lhs, rhs] : identities) {
        CAPTURE(lhs);
        CAPTURE(rhs);
        CHECK(same_canonical(census_matrix(3, lhs), census_matrix(3, rhs)));
    }
}

TEST_SUITE_END();
