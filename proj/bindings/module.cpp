// Python bindings for the core operations: simplex geometry, objectives,
// active-set estimates, and the solver.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <stdexcept>

#include "simplexopt/bench.hpp"
#include "simplexopt/generators.hpp"
#include "simplexopt/io.hpp"
#include "simplexopt/solver.hpp"

namespace py = pybind11;
using namespace simplexopt;

namespace {

Vec flatten(const std::vector<Vec>& rows, int* nrows, int* ncols) {
    if (rows.empty()) throw std::invalid_argument("matrix must be non-empty");
    *nrows = static_cast<int>(rows.size());
    *ncols = static_cast<int>(rows.front().size());
    Vec flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const Vec& r : rows) {
        if (static_cast<int>(r.size()) != *ncols)
            throw std::invalid_argument("matrix rows must have equal length");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
}

DirectionRule parse_rule(const std::string& name) {
    if (name == "fw") return DirectionRule::FW;
    if (name == "afw") return DirectionRule::AFW;
    if (name == "pg") return DirectionRule::PG;
    throw std::invalid_argument("rule must be fw|afw|pg");
}

LineSearchRule parse_ls(const std::string& name) {
    if (name == "armijo") return LineSearchRule::Armijo;
    if (name == "exact") return LineSearchRule::ExactQuadratic;
    throw std::invalid_argument("line_search must be armijo|exact");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Active-set accelerated first-order minimization over the unit simplex";

    py::class_<Objective, std::shared_ptr<Objective>>(m, "Objective")
        .def_property_readonly("dim", &Objective::dim)
        .def("value", [](const Objective& o, const Vec& x) { return o.value(x); })
        .def("gradient", [](const Objective& o, const Vec& x) { return o.gradient(x); })
        .def_property_readonly("lipschitz", &Objective::lipschitz);

    py::class_<QuadraticObjective, Objective, std::shared_ptr<QuadraticObjective>>(
        m, "QuadraticObjective")
        .def(py::init([](const std::vector<Vec>& q_rows, const Vec& c, std::uint64_t seed) {
                 int nr = 0, nc = 0;
                 Vec flat = flatten(q_rows, &nr, &nc);
                 if (nr != nc) throw std::invalid_argument("Q must be square");
                 return std::make_shared<QuadraticObjective>(nr, std::move(flat), c, seed);
             }),
             py::arg("q"), py::arg("c"), py::arg("seed") = 0);

    py::class_<ChebyshevObjective, Objective, std::shared_ptr<ChebyshevObjective>>(
        m, "ChebyshevObjective")
        .def(py::init([](const std::vector<Vec>& a_rows, std::uint64_t seed) {
                 int nr = 0, nc = 0;
                 Vec flat = flatten(a_rows, &nr, &nc);
                 return std::make_shared<ChebyshevObjective>(nr, nc, std::move(flat), seed);
             }),
             py::arg("points"), py::arg("seed") = 0)
        .def_property_readonly("sample_dim", &ChebyshevObjective::sample_dim)
        .def_property_readonly("b", &ChebyshevObjective::b);

    m.def(
        "project_simplex",
        [](const Vec& y, const std::optional<IndexSet>& face) {
            const int n = static_cast<int>(y.size());
            const FaceIndexSet f = face ? FaceIndexSet(*face, n) : FaceIndexSet::full(n);
            return project_simplex(y, f).coords();
        },
        py::arg("y"), py::arg("face") = std::nullopt,
        "Euclidean projection onto the unit simplex (or one of its faces)");

    m.def(
        "stationarity_gap",
        [](const Vec& x, const Vec& g) { return stationarity_gap(SimplexPoint(x), g); },
        py::arg("x"), py::arg("g"));

    m.def("is_feasible", &is_feasible, py::arg("y"), py::arg("tol") = 1e-12);

    m.def(
        "multipliers",
        [](const Vec& x, const Vec& g) {
            const MultiplierValues mv = multipliers(SimplexPoint(x), g);
            return py::make_tuple(mv.lambda, mv.mu);
        },
        py::arg("x"), py::arg("g"), "KKT multiplier estimates (lambda, mu) at a feasible point");

    py::class_<ActiveSetEstimate>(m, "ActiveSetEstimate")
        .def_readonly("active", &ActiveSetEstimate::active)
        .def_readonly("nonactive", &ActiveSetEstimate::nonactive)
        .def_readonly("grad_minimizers", &ActiveSetEstimate::grad_minimizers);

    m.def(
        "active_set_estimate",
        [](const Vec& x, const Vec& g, double epsilon) {
            return estimate(SimplexPoint(x), g, epsilon);
        },
        py::arg("x"), py::arg("g"), py::arg("epsilon") = 1e-1);

    py::class_<IterationRecord>(m, "IterationRecord")
        .def_readonly("k", &IterationRecord::k)
        .def_readonly("f", &IterationRecord::f)
        .def_readonly("gap", &IterationRecord::gap)
        .def_readonly("n_active", &IterationRecord::n_active)
        .def_readonly("epsilon", &IterationRecord::epsilon)
        .def_readonly("alpha", &IterationRecord::alpha)
        .def_property_readonly("step_kind",
                               [](const IterationRecord& r) { return step_kind_name(r.step); })
        .def_readonly("drop_step", &IterationRecord::drop_step)
        .def_readonly("elapsed_s", &IterationRecord::elapsed_s)
        .def_readonly("evals", &IterationRecord::evals);

    py::class_<SolveResult>(m, "SolveResult")
        .def_property_readonly("x", [](const SolveResult& r) { return r.x_final.coords(); })
        .def_readonly("f", &SolveResult::f_final)
        .def_readonly("gap", &SolveResult::gap_final)
        .def_property_readonly("status", [](const SolveResult& r) { return status_name(r.status); })
        .def_property_readonly("iterations",
                               [](const SolveResult& r) { return r.trace.size(); })
        .def_readonly("trace", &SolveResult::trace)
        .def_readonly("final_active_set", &SolveResult::final_active_set)
        .def_readonly("active_set_trace", &SolveResult::active_set_trace);

    m.def(
        "solve",
        [](std::shared_ptr<Objective> obj, const Vec& x0, const std::string& rule,
           bool active_set, const std::string& line_search, double tol, int maxit,
           double epsilon0, double decrease_c, double pg_scale, std::uint64_t seed,
           bool record_active_sets) {
            SolverConfig cfg;
            cfg.rule = parse_rule(rule);
            cfg.active_set_enabled = active_set;
            cfg.line_search = parse_ls(line_search);
            cfg.tol = tol;
            cfg.max_iterations = maxit;
            cfg.as.epsilon = cfg.as.epsilon0 = epsilon0;
            cfg.as.decrease_c = decrease_c;
            cfg.pg.gradient_scale = pg_scale;
            cfg.seed = seed;
            cfg.record_active_sets = record_active_sets;
            return solve(*obj, SimplexPoint(x0), cfg);
        },
        py::arg("objective"), py::arg("x0"), py::arg("rule") = "afw",
        py::arg("active_set") = true, py::arg("line_search") = "armijo", py::arg("tol") = 1e-6,
        py::arg("maxit") = 0, py::arg("epsilon0") = 1e-1, py::arg("decrease_c") = 1e-6,
        py::arg("pg_scale") = 1.0, py::arg("seed") = 0, py::arg("record_active_sets") = false,
        py::call_guard<py::gil_scoped_release>());

    py::class_<GeneratedQuadratic>(m, "GeneratedQuadratic")
        .def_readonly("objective", &GeneratedQuadratic::objective)
        .def_property_readonly("planted",
                               [](const GeneratedQuadratic& g) { return g.planted.coords(); })
        .def_readonly("planted_zero_set", &GeneratedQuadratic::planted_zero_set)
        .def_readonly("planted_support", &GeneratedQuadratic::planted_support)
        .def_readonly("gap_at_planted", &GeneratedQuadratic::gap_at_planted)
        .def_readonly("complementarity_margin", &GeneratedQuadratic::complementarity_margin);

    m.def(
        "gen_quadratic",
        [](int n, double rho, double theta, std::uint64_t seed, double margin_lo,
           double margin_hi) {
            QuadGenConfig cfg;
            cfg.n = n;
            cfg.rho = rho;
            cfg.theta = theta;
            cfg.seed = seed;
            cfg.margin_lo = margin_lo;
            cfg.margin_hi = margin_hi;
            return gen_quadratic(cfg);
        },
        py::arg("n"), py::arg("rho") = 0.1, py::arg("theta") = 0.5, py::arg("seed") = 0,
        py::arg("margin_lo") = 0.0, py::arg("margin_hi") = 1.0,
        "Sparse quadratic instance with a planted strict-complementarity stationary point");

    m.def(
        "gen_chebyshev",
        [](int n, int m_dim, std::uint64_t seed) {
            ChebGenConfig cfg;
            cfg.n = n;
            cfg.m = m_dim;
            cfg.seed = seed;
            return gen_chebyshev(cfg);
        },
        py::arg("n"), py::arg("m") = 10, py::arg("seed") = 0,
        "Smallest-enclosing-ball objective over random sample points");

    m.def(
        "random_start",
        [](int n, std::uint64_t seed) { return random_start(n, seed).coords(); }, py::arg("n"),
        py::arg("seed") = 0);

    m.def(
        "load_problem",
        [](const std::string& path) {
            const LoadedProblem lp = load_problem(path);
            return py::make_tuple(lp.kind, lp.objective);
        },
        py::arg("path"), "Read a problem file written by the command-line tool");
}
