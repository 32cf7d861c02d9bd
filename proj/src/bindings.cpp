#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusgf/dynamics.hpp"
#include "torusgf/elliptic.hpp"
#include "torusgf/green.hpp"
#include "torusgf/lattice.hpp"
#include "torusgf/metric.hpp"
#include "torusgf/region.hpp"
#include "torusgf/wv.hpp"

namespace py = pybind11;
using namespace torusgf;

PYBIND11_MODULE(_core, m) {
    m.doc() = "critical points of the torus Green's function, conic metrics, "
              "and entire-function growth analysis";

    py::register_exception<Error>(m, "ComputationError");

    py::class_<TorusLattice>(m, "TorusLattice")
        .def_readonly("tau", &TorusLattice::tau)
        .def_readonly("omega1", &TorusLattice::omega1)
        .def_readonly("omega2", &TorusLattice::omega2)
        .def_readonly("eta1", &TorusLattice::eta1)
        .def_readonly("eta2", &TorusLattice::eta2)
        .def_readonly("e", &TorusLattice::e)
        .def_readonly("g2", &TorusLattice::g2)
        .def_readonly("g3", &TorusLattice::g3)
        .def_readonly("area", &TorusLattice::area);

    m.def("lattice_from_tau", &lattice_from_tau, py::arg("tau"));
    m.def("reduce_point", &reduce_point, py::arg("z"), py::arg("lattice"));
    m.def("theta1", &theta1, py::arg("z"), py::arg("tau"));

    py::class_<WeierstrassBundle>(m, "WeierstrassBundle")
        .def_readonly("at", &WeierstrassBundle::at)
        .def_readonly("sigma", &WeierstrassBundle::sigma)
        .def_readonly("zeta", &WeierstrassBundle::zeta)
        .def_readonly("p", &WeierstrassBundle::p)
        .def_readonly("p_prime", &WeierstrassBundle::p_prime);
    m.def("weierstrass", &weierstrass, py::arg("z"), py::arg("lattice"));

    py::class_<AntiConstants>(m, "AntiConstants")
        .def_readonly("A", &AntiConstants::A)
        .def_readonly("B", &AntiConstants::B);
    m.def("constants_AB", &constants_AB, py::arg("lattice"));
    m.def("green_value", &green_value, py::arg("z"), py::arg("lattice"),
          py::arg("C") = 0.0);
    m.def("green_grad", &green_grad, py::arg("z"), py::arg("lattice"));
    m.def("residual_R", &residual_R, py::arg("a"), py::arg("lattice"));

    py::enum_<PointKind>(m, "PointKind")
        .value("trivial_halfperiod", PointKind::trivial_halfperiod)
        .value("nontrivial", PointKind::nontrivial);
    py::enum_<Stability>(m, "Stability")
        .value("attracting", Stability::attracting)
        .value("repelling", Stability::repelling)
        .value("indeterminate", Stability::indeterminate);
    py::enum_<SolveStatus>(m, "SolveStatus")
        .value("ok", SolveStatus::ok)
        .value("boundary_indeterminate", SolveStatus::boundary_indeterminate)
        .value("solver_incomplete", SolveStatus::solver_incomplete);

    py::class_<CriticalPoint>(m, "CriticalPoint")
        .def_readonly("location", &CriticalPoint::location)
        .def_readonly("kind", &CriticalPoint::kind)
        .def_readonly("stability", &CriticalPoint::stability)
        .def_readonly("multiplier_modulus", &CriticalPoint::multiplier_modulus)
        .def_readonly("orientation_sign", &CriticalPoint::orientation_sign)
        .def_readonly("residual_norm", &CriticalPoint::residual_norm);
    py::class_<CriticalPointReport>(m, "CriticalPointReport")
        .def_readonly("points", &CriticalPointReport::points)
        .def_readonly("n_plus", &CriticalPointReport::n_plus)
        .def_readonly("n_minus", &CriticalPointReport::n_minus)
        .def_readonly("total", &CriticalPointReport::total)
        .def_readonly("status", &CriticalPointReport::status);
    m.def(
        "solve_critical_points",
        [](const TorusLattice& L) { return solve_critical_points(L); },
        py::arg("lattice"));

    m.def("g_map", &g_map, py::arg("z"), py::arg("lattice"));
    py::class_<Classification>(m, "Classification")
        .def_readonly("stability", &Classification::stability)
        .def_readonly("multiplier_modulus", &Classification::multiplier_modulus)
        .def_readonly("orientation_sign", &Classification::orientation_sign);
    m.def("classify_fixed_point", &classify_fixed_point, py::arg("a"),
          py::arg("lattice"));
    m.def("ineq_holds", &ineq_holds, py::arg("tau"));

    py::class_<ConsistencyRecord>(m, "ConsistencyRecord")
        .def_readonly("flags", &ConsistencyRecord::flags)
        .def_readonly("in_region", &ConsistencyRecord::in_region)
        .def_readonly("count", &ConsistencyRecord::count)
        .def_readonly("all_trivial_repelling",
                      &ConsistencyRecord::all_trivial_repelling)
        .def_readonly("boundary_band", &ConsistencyRecord::boundary_band)
        .def_readonly("consistent", &ConsistencyRecord::consistent);
    m.def("cross_validate", &cross_validate, py::arg("tau"));

    py::class_<MetricSolution>(m, "MetricSolution")
        .def_readonly("a", &MetricSolution::a)
        .def_readonly("c", &MetricSolution::c);
    m.def("make_metric_solution", &make_metric_solution, py::arg("a"),
          py::arg("c"), py::arg("lattice"));
    m.def("f_second_kind", &f_second_kind, py::arg("z"), py::arg("solution"));
    m.def("multipliers", &multipliers, py::arg("solution"));
    m.def("metric_u", &metric_u, py::arg("z"), py::arg("solution"));
    m.def("pde_residual", &pde_residual, py::arg("z"), py::arg("h"),
          py::arg("solution"));
    m.def(
        "cone_angle",
        [](const MetricSolution& sol, const std::vector<double>& radii) {
            return cone_angle(sol, radii);
        },
        py::arg("solution"), py::arg("radii"));

    py::class_<CoefficientSeries>(m, "CoefficientSeries")
        .def_readonly("label", &CoefficientSeries::label)
        .def_readonly("truncation", &CoefficientSeries::truncation)
        .def_static("exponential", &CoefficientSeries::exponential,
                    py::arg("max_radius"))
        .def_static("cosh_series", &CoefficientSeries::cosh_series,
                    py::arg("max_radius"))
        .def_static("monomial", &CoefficientSeries::monomial, py::arg("degree"))
        .def_static("from_file", &CoefficientSeries::from_file,
                    py::arg("path"));
    py::class_<MaxTerm>(m, "MaxTerm")
        .def_readonly("mu", &MaxTerm::mu)
        .def_readonly("log_mu", &MaxTerm::log_mu)
        .def_readonly("n", &MaxTerm::n);
    m.def("max_term", &max_term, py::arg("r"), py::arg("series"));
    py::class_<MaxModulus>(m, "MaxModulus")
        .def_readonly("M", &MaxModulus::M)
        .def_readonly("log_M", &MaxModulus::log_M)
        .def_readonly("z_r", &MaxModulus::z_r);
    m.def(
        "max_modulus",
        [](double r, const CoefficientSeries& s) { return max_modulus(r, s); },
        py::arg("r"), py::arg("series"));
    m.def(
        "macintyre_a",
        [](double r, const CoefficientSeries& s, double dr) {
            return macintyre_a(r, s, dr);
        },
        py::arg("r"), py::arg("series"), py::arg("dr"));
    m.def("wv_approx_error", &wv_approx_error, py::arg("r"), py::arg("eps"),
          py::arg("series"));

    py::enum_<EscapeStatus>(m, "EscapeStatus")
        .value("escaped", EscapeStatus::escaped)
        .value("escaped_overflow", EscapeStatus::escaped_overflow)
        .value("bounded", EscapeStatus::bounded);
    py::class_<EscapeRecord>(m, "EscapeRecord")
        .def_readonly("orbit", &EscapeRecord::orbit)
        .def_readonly("status", &EscapeRecord::status)
        .def_readonly("escaped_at", &EscapeRecord::escaped_at);
    m.def("escaping_orbit", &escaping_orbit, py::arg("f"), py::arg("z0"),
          py::arg("bound") = 1e10, py::arg("max_iter") = 100);

    py::class_<RSSample>(m, "RSSample")
        .def_readonly("z", &RSSample::z)
        .def_readonly("lhs", &RSSample::lhs)
        .def_readonly("rhs", &RSSample::rhs)
        .def_readonly("qualifying", &RSSample::qualifying)
        .def_readonly("holds", &RSSample::holds);
    py::class_<RSReport>(m, "RSReport")
        .def_readonly("samples", &RSReport::samples)
        .def_readonly("n_qualifying", &RSReport::n_qualifying)
        .def_readonly("n_vacuous", &RSReport::n_vacuous)
        .def_readonly("n_violations", &RSReport::n_violations)
        .def_readonly("min_margin", &RSReport::min_margin);
    m.def(
        "rippon_stallard_check",
        [](const std::function<cplx(cplx)>& g,
           const std::function<cplx(cplx)>& gprime, double R,
           const std::vector<cplx>& samples) {
            return rippon_stallard_check(g, gprime, R, samples);
        },
        py::arg("g"), py::arg("gprime"), py::arg("R"), py::arg("samples"));
}
