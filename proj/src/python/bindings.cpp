#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kreiss/cert_ct.hpp"
#include "kreiss/cert_dt.hpp"
#include "kreiss/matio.hpp"
#include "kreiss/objective.hpp"
#include "kreiss/oracle.hpp"
#include "kreiss/solver.hpp"

namespace py = pybind11;
using namespace kreiss;

namespace {

TimeDomain time_from(const std::string& s) {
    if (s == "continuous") return TimeDomain::Continuous;
    if (s == "discrete") return TimeDomain::Discrete;
    throw py::value_error("time must be 'continuous' or 'discrete'");
}

py::dict to_dict(const KreissResult& r) {
    py::dict d;
    d["kreiss"] = r.kreiss;
    d["gamma_inv"] = r.gamma_inv;
    if (r.minimizer) d["minimizer"] = py::make_tuple(r.minimizer->c1, r.minimizer->c2);
    else d["minimizer"] = py::none();
    d["restarts"] = r.restarts;
    d["certificate_calls"] = r.certificate_calls;
    d["status"] = result_status_name(r.status);
    d["message"] = r.message;
    d["local_minima"] = r.local_minima;
    py::list pts;
    for (const LevelPointRecord& p : r.level_points) pts.append(py::make_tuple(p.c1, p.c2, p.gamma, p.residual));
    d["level_points"] = pts;
    py::list trace;
    for (const TraceEntry& t : r.trace)
        trace.append(py::make_tuple(t.phase, t.gamma, t.eta, t.verdict, t.bounds.lb, t.bounds.ub));
    d["trace"] = trace;
    d["wall_time_s"] = r.wall_time;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kreiss constants of stable matrices";

    py::register_exception<Error>(m, "KreissError", PyExc_RuntimeError);

    py::class_<MatrixProblem>(m, "Problem")
        .def_property_readonly("A", [](const MatrixProblem& p) { return p.A; })
        .def_property_readonly("n", [](const MatrixProblem& p) { return p.n; })
        .def_property_readonly("time", [](const MatrixProblem& p) { return time_domain_name(p.time_domain); })
        .def_property_readonly("spectral_abscissa", [](const MatrixProblem& p) { return p.spectral_abscissa; })
        .def_property_readonly("spectral_radius", [](const MatrixProblem& p) { return p.spectral_radius; })
        .def_property_readonly("norm2", [](const MatrixProblem& p) { return p.norm2; })
        .def_property_readonly("eigenvalues", [](const MatrixProblem& p) { return p.eigenvalues; });

    m.def(
        "problem", [](const Matrix& A, const std::string& time) { return make_problem(A, time_from(time)); },
        py::arg("A"), py::arg("time") = "continuous", "Validate a stable matrix for the given time domain.");

    m.def(
        "load", [](const std::string& path, std::optional<std::string> time) {
            std::optional<TimeDomain> td;
            if (time) td = time_from(*time);
            return load_matrix(path, format_from_path(path), td);
        },
        py::arg("path"), py::arg("time") = py::none());

    m.def(
        "generate",
        [](const std::string& kind, Index n, std::uint64_t seed, const std::string& time, double epsilon) {
            GenOptions go;
            go.time_domain = time_from(time);
            go.epsilon = epsilon;
            return gen_test_matrix(test_matrix_kind_from_name(kind), n, seed, go);
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("time") = "continuous", py::arg("epsilon") = 0.1);

    m.def(
        "objective", [](const MatrixProblem& p, double c1, double c2) { return objective_value(p, c1, c2); },
        py::arg("problem"), py::arg("c1"), py::arg("c2"), "g(x, y) or h(r, theta); +inf outside the domain.");

    m.def(
        "gradient",
        [](const MatrixProblem& p, double c1, double c2) {
            const EvalPoint pt = evaluate(p, c1, c2);
            const Eigen::Vector2d g = gradient(pt, p).grad;
            return py::make_tuple(g(0), g(1));
        },
        py::arg("problem"), py::arg("c1"), py::arg("c2"));

    m.def(
        "kreiss",
        [](const MatrixProblem& p, const std::string& method, std::optional<std::pair<double, double>> start,
           std::optional<double> tol, bool dnc) {
            SolverOptions opts;
            const Method mth = method_from_name(method);
            if (tol) {
                if (mth == Method::OwrBacktracking) opts.eta_tol_rel = *tol;
                else opts.gamma_tol = *tol;
            }
            opts.cert.use_dnc = dnc;
            std::optional<Coords> s;
            if (start) s = Coords{start->first, start->second};
            KreissResult r;
            {
                py::gil_scoped_release release;
                r = solve_kreiss(p, mth, s, opts);
            }
            return to_dict(r);
        },
        py::arg("problem"), py::arg("method") = "owr", py::arg("start") = py::none(), py::arg("tol") = py::none(),
        py::arg("dnc") = false);

    m.def(
        "certify",
        [](const MatrixProblem& p, double gamma, double eta, const std::string& variant) {
            const CertChoice choice = cert_choice_from_name(variant);
            const bool fixed = choice == CertChoice::FixedVertical || choice == CertChoice::FixedHorizontal;
            const CertificateReport rep = run_certificate(p, fixed, choice, gamma, eta, CertOptions{});
            py::list pts;
            for (const EvalPoint& e : rep.points) pts.append(py::make_tuple(e.c1, e.c2, e.value));
            py::dict d;
            d["gamma"] = rep.gamma;
            d["eta"] = rep.eta;
            d["variant"] = cert_variant_name(rep.variant);
            d["candidates"] = rep.candidates;
            d["points"] = pts;
            d["residuals"] = rep.residuals;
            return d;
        },
        py::arg("problem"), py::arg("gamma"), py::arg("eta"), py::arg("variant") = "variable-v");

    m.def(
        "grid_min",
        [](const MatrixProblem& p, int levels, int points) {
            GridOptions go;
            go.points = points;
            const GridResult g = grid_min(p, default_grid_ranges(p), levels, go);
            return py::make_tuple(g.value, g.c1, g.c2);
        },
        py::arg("problem"), py::arg("levels") = 4, py::arg("points") = 101);

    m.def(
        "ratio_curve",
        [](const MatrixProblem& p, const std::vector<double>& eps) {
            std::vector<std::pair<double, double>> out;
            for (const RatioPoint& r : ratio_curve(p, eps)) out.emplace_back(r.eps, r.ratio);
            return out;
        },
        py::arg("problem"), py::arg("eps"));
}
