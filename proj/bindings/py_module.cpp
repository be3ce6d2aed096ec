#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loem/catalog.hpp"
#include "loem/curvature.hpp"
#include "loem/io.hpp"
#include "loem/isometry.hpp"
#include "loem/reference.hpp"
#include "loem/solver.hpp"

namespace py = pybind11;
using namespace loem;

namespace {

RatioCoordinates make_coords(const std::vector<double>& x, const std::vector<double>& u) {
    RatioCoordinates c;
    c.x = Eigen::Map<const Eigen::VectorXd>(x.data(), x.size());
    c.u = Eigen::Map<const Eigen::VectorXd>(u.data(), u.size());
    return c;
}

SolverOptions make_options(int starts, std::uint64_t seed, int newton_max_iter,
                           double newton_tol, double dedup_tol, double diag_floor,
                           int threads, const std::vector<RatioCoordinates>& extra_starts,
                           double x_log_half_width, double u_half_width) {
    SolverOptions o;
    o.starts = starts;
    o.seed = seed;
    o.newton_max_iter = newton_max_iter;
    o.newton_tol = newton_tol;
    o.dedup_tol = dedup_tol;
    o.diag_floor = diag_floor;
    o.threads = threads;
    o.extra_starts = extra_starts;
    o.x_log_half_width = x_log_half_width;
    o.u_half_width = u_half_width;
    return o;
}

}  // namespace

PYBIND11_MODULE(loem, m) {
    m.doc() = "Invariant Einstein metrics on Ledger-Obata spaces: census, "
              "classification and counting";

    py::register_exception<degeneracy_error>(m, "DegeneracyError");
    py::register_exception<capacity_error>(m, "CapacityError");
    py::register_exception<unsupported_reference_error>(m, "UnsupportedReferenceError");

    py::class_<TriangularMetric>(m, "TriangularMetric")
        .def(py::init<Eigen::MatrixXd>())
        .def_static("identity", &TriangularMetric::identity)
        .def_property_readonly("n", &TriangularMetric::size)
        .def("matrix", &TriangularMetric::matrix,
             py::return_value_policy::reference_internal)
        .def("__getitem__",
             [](const TriangularMetric& a, std::pair<int, int> ij) {
                 return a(ij.first, ij.second);
             })
        .def("__repr__", [](const TriangularMetric& a) {
            std::ostringstream os;
            os << "TriangularMetric(n=" << a.size() << ")";
            return os.str();
        });

    py::class_<RatioCoordinates>(m, "RatioCoordinates")
        .def(py::init(&make_coords), py::arg("x"), py::arg("u"))
        .def_readonly("x", &RatioCoordinates::x)
        .def_readonly("u", &RatioCoordinates::u)
        .def_property_readonly("n", &RatioCoordinates::size);

    m.def("from_ratio_coords", &from_ratio_coords);
    m.def("to_ratio_coords", &to_ratio_coords);
    m.def("volume", &volume);
    m.def("inverse", &inverse);
    m.def("cholesky_canonical", &cholesky_canonical, py::arg("frame"),
          py::arg("pivot_tol") = 1e-10);
    m.def("block_diag",
          py::overload_cast<const TriangularMetric&, const TriangularMetric&>(&block_diag));
    m.def("scale", &scale);

    m.def("lambda_term", &lambda_term);
    m.def("scalar_curvature_general", &scalar_curvature_general);
    m.def("scalar_curvature_triangular", &scalar_curvature_triangular);
    m.def("gradient_ratio", [](const RatioCoordinates& c) {
        const auto g = gradient_ratio(c);
        return std::make_pair(g.x, g.u);
    });
    m.def("einstein_constant", &einstein_constant);

    py::class_<CurvatureReport>(m, "CurvatureReport")
        .def_readonly("s_tilde", &CurvatureReport::s_tilde)
        .def_readonly("volume", &CurvatureReport::volume)
        .def_readonly("einstein_constant", &CurvatureReport::einstein_constant)
        .def_readonly("total_scalar", &CurvatureReport::total_scalar);
    m.def("curvature_report", &curvature_report, py::arg("a"),
          py::arg("fiber_dim") = std::nullopt);

    py::enum_<Normalization>(m, "Normalization")
        .value("STILDE_EQUALS_N", Normalization::STildeEqualsN)
        .value("EINSTEIN_CONSTANT_ONE", Normalization::EinsteinConstantOne)
        .value("UNIT_VOLUME", Normalization::UnitVolume);

    py::class_<CriticalPoint>(m, "CriticalPoint")
        .def_readonly("coords", &CriticalPoint::coords)
        .def_readonly("matrix", &CriticalPoint::matrix)
        .def_readonly("s_tilde", &CriticalPoint::s_tilde)
        .def_readonly("volume", &CriticalPoint::volume)
        .def_readonly("residual_norm", &CriticalPoint::residual_norm)
        .def_readonly("normalization", &CriticalPoint::normalization);

    m.def("residual", &residual, py::arg("coords"), py::arg("lambda_") = 2.0);
    m.def(
        "newton_solve",
        [](const RatioCoordinates& start, int max_iter, double tol, double diag_floor) {
            SolverOptions o;
            o.newton_max_iter = max_iter;
            o.newton_tol = tol;
            o.diag_floor = diag_floor;
            return newton_solve(start, o);
        },
        py::arg("start"), py::arg("max_iter") = 200, py::arg("tol") = 1e-12,
        py::arg("diag_floor") = 1e-6);
    m.def(
        "multistart",
        [](int n, int starts, std::uint64_t seed, int newton_max_iter, double newton_tol,
           double dedup_tol, double diag_floor, int threads,
           const std::vector<RatioCoordinates>& extra_starts, double x_log_half_width,
           double u_half_width) {
            return multistart(n, make_options(starts, seed, newton_max_iter, newton_tol,
                                              dedup_tol, diag_floor, threads, extra_starts,
                                              x_log_half_width, u_half_width));
        },
        py::arg("n"), py::arg("starts") = 10000, py::arg("seed") = 0,
        py::arg("newton_max_iter") = 200, py::arg("newton_tol") = 1e-12,
        py::arg("dedup_tol") = 1e-7, py::arg("diag_floor") = 1e-6, py::arg("threads") = 1,
        py::arg("extra_starts") = std::vector<RatioCoordinates>{},
        py::arg("x_log_half_width") = 1.0, py::arg("u_half_width") = 2.5);
    m.def("normalize", &normalize);

    py::class_<MatchReport>(m, "MatchReport")
        .def_readonly("matched", &MatchReport::matched)
        .def_readonly("missing_refs", &MatchReport::missing_refs)
        .def_readonly("extra_points", &MatchReport::extra_points)
        .def("perfect", &MatchReport::perfect);
    m.def("verify_against_reference", &verify_against_reference, py::arg("points"),
          py::arg("reference"), py::arg("tol") = 1e-7);

    py::class_<ReferencePoint>(m, "ReferencePoint")
        .def_readonly("index", &ReferencePoint::index)
        .def_readonly("coords", &ReferencePoint::coords)
        .def_readonly("v_tilde", &ReferencePoint::v_tilde);
    m.def("reference_census", &reference_census,
          py::return_value_policy::reference_internal);
    m.def("reference_coords", &reference_coords);
    m.def("has_reference_census", &has_reference_census);

    m.def("t_matrix", &t_matrix);
    m.def("orbit_group", [](int n) {
        std::vector<Eigen::MatrixXi> out;
        for (const auto& g : orbit_group(n)) out.push_back(g);
        return out;
    });
    m.def("orbit_group_order", [](int n) { return orbit_group(n).size(); });
    m.def("apply_move", &apply_move);
    m.def("canonical_form", &canonical_form, py::arg("a"), py::arg("tol") = 1e-8);
    m.def("hat", &hat);

    py::class_<IsometryClass>(m, "IsometryClass")
        .def_readonly("canonical", &IsometryClass::canonical)
        .def_readonly("members", &IsometryClass::members)
        .def_readonly("s_tilde", &IsometryClass::s_tilde)
        .def_readonly("volume", &IsometryClass::volume);
    m.def("classify", &classify, py::arg("points"), py::arg("tol") = 1e-8);

    m.def("standard_matrix", &standard_matrix);
    m.def("standard_einstein_matrix", &standard_einstein_matrix);
    m.def("routine_from_partition", &routine_from_partition);
    m.def("partitions_of", &partitions_of);
    m.def("enumerate_compositions", &enumerate_compositions);
    m.def("routine_critical_points", &routine_critical_points, py::arg("n"),
          py::arg("budget") = 8);
    m.def("partition_count",
          [](int n) { return py::int_(py::str(u128_to_string(partition_count(n)))); });
    m.def("emhs_lower_constant", &emhs_lower_constant);
    m.def("maroti_inequality_holds", &maroti_inequality_holds);

    py::class_<PartitionSummary>(m, "PartitionSummary")
        .def_readonly("n", &PartitionSummary::n)
        .def_property_readonly(
            "p_n", [](const PartitionSummary& s) {
                return py::int_(py::str(u128_to_string(s.p_n)));
            })
        .def_readonly("maroti_bound", &PartitionSummary::maroti_bound)
        .def_readonly("hardy_ramanujan", &PartitionSummary::hardy_ramanujan)
        .def_property_readonly(
            "rem_sum_bound", [](const PartitionSummary& s) {
                return py::int_(py::str(u128_to_string(s.rem_sum_bound)));
            })
        .def_readonly("rem_sqrt2_bound", &PartitionSummary::rem_sqrt2_bound);
    m.def("bounds", &bounds);
}
