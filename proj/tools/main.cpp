// simplexopt command line: instance generation, single solves, benchmark runs.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplexopt/bench.hpp"
#include "simplexopt/generators.hpp"
#include "simplexopt/io.hpp"
#include "simplexopt/rng.hpp"
#include "simplexopt/solver.hpp"

namespace {

using namespace simplexopt;

LineSearchRule parse_line_search(const std::string& name) {
    if (name == "armijo") return LineSearchRule::Armijo;
    if (name == "exact") return LineSearchRule::ExactQuadratic;
    throw CLI::ValidationError("--line-search", "expected armijo|exact");
}

int cmd_generate(const std::string& family, int n, double rho, double theta, int m,
                 std::uint64_t seed, const std::string& out) {
    if (family == "quadratic") {
        QuadGenConfig cfg;
        cfg.n = n;
        cfg.rho = rho;
        cfg.theta = theta;
        cfg.seed = seed;
        GeneratedQuadratic inst = gen_quadratic(cfg);
        ProblemMeta meta;
        meta.generator = "quadratic(theta*(B'B/n+I)+(1-theta)*S, planted sparse point)";
        meta.seed = inst.sub_seed;
        meta.rho = rho;
        meta.theta = theta;
        meta.planted_x = inst.planted.coords();
        save_quadratic(out, *inst.objective, meta);
        std::printf("wrote %s (quadratic, n=%d, support=%zu, planted gap=%s)\n", out.c_str(), n,
                    inst.planted_support.size(), fmt_double(inst.gap_at_planted).c_str());
    } else if (family == "chebyshev") {
        ChebGenConfig cfg;
        cfg.n = n;
        cfg.m = m;
        cfg.seed = seed;
        auto obj = gen_chebyshev(cfg);
        ProblemMeta meta;
        meta.generator = "chebyshev(standard normal sample points)";
        meta.seed = seed;
        save_chebyshev(out, *obj, meta);
        std::printf("wrote %s (chebyshev, n=%d, m=%d)\n", out.c_str(), n, m);
    } else {
        std::fprintf(stderr, "unknown family: %s\n", family.c_str());
        return 2;
    }
    return 0;
}

int cmd_solve(const std::string& problem_path, const std::string& algo, double tol, int maxit,
              const std::string& line_search, const std::string& start, std::uint64_t seed,
              const std::string& out_dir) {
    const LoadedProblem lp = load_problem(problem_path);
    const AlgorithmSpec spec = parse_algorithm(algo);
    const int n = lp.objective->dim();

    SimplexPoint x0 = SimplexPoint::vertex(n, 0);
    if (start == "uniform")
        x0 = SimplexPoint::uniform(n);
    else if (start == "random")
        x0 = random_start(n, seed);
    else if (start != "e1") {
        std::fprintf(stderr, "unknown start: %s (expected e1|uniform|random)\n", start.c_str());
        return 2;
    }

    SolverConfig cfg;
    cfg.rule = spec.rule;
    cfg.active_set_enabled = spec.active_set;
    cfg.line_search = parse_line_search(line_search);
    cfg.tol = tol;
    cfg.max_iterations = maxit;
    cfg.seed = seed;

    const SolveResult res = solve(*lp.objective, x0, cfg);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path out(out_dir);
    write_trace_csv_file((out / ("trace__" + spec.name + ".csv")).string(), res);
    {
        nlohmann::json j;
        j["problem"] = problem_path;
        j["algo"] = spec.name;
        j["status"] = status_name(res.status);
        j["iters"] = res.trace.size();
        j["f_final"] = res.f_final;
        j["gap_final"] = res.gap_final;
        j["x_final"] = doubles_to_base64(res.x_final.coords());
        nlohmann::json as = nlohmann::json::array();
        for (int i : res.final_active_set) as.push_back(i);
        j["final_active_set"] = std::move(as);
        std::ofstream os(out / ("result__" + spec.name + ".json"), std::ios::binary);
        os << j.dump(2) << '\n';
    }
    std::printf("%s: status=%s iters=%zu f=%s gap=%s |A|=%zu\n", spec.name.c_str(),
                status_name(res.status), res.trace.size(), fmt_double(res.f_final).c_str(),
                fmt_double(res.gap_final).c_str(), res.final_active_set.size());
    return res.status == SolveStatus::LineSearchFailure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active-set accelerated first-order minimization over the unit simplex"};
    app.require_subcommand(1);

    std::string family = "quadratic";
    std::string out;
    std::uint64_t seed = 0;
    int n = 512;
    double rho = 0.1;
    double theta = 0.5;
    int m = 10;
    double tol = 1e-6;
    int maxit = 0;
    std::string line_search = "armijo";
    std::vector<std::string> algos;

    auto* gen = app.add_subcommand("generate", "Generate a problem instance file");
    gen->add_option("--family", family, "quadratic|chebyshev");
    gen->add_option("--n", n, "dimension (number of points for chebyshev)");
    gen->add_option("--rho", rho, "planted sparsity level (quadratic)");
    gen->add_option("--theta", theta, "positive-definite mixing weight (quadratic)");
    gen->add_option("--m", m, "sample dimension (chebyshev)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out, "output problem file")->required();

    std::string problem_path;
    std::string algo = "as-afw";
    std::string start = "e1";
    auto* slv = app.add_subcommand("solve", "Solve a problem instance");
    slv->add_option("--problem", problem_path, "problem file from `generate`")->required();
    slv->add_option("--algo", algo, "fw|afw|pg|as-fw|as-afw|as-pg");
    slv->add_option("--tol", tol, "stationarity tolerance");
    slv->add_option("--maxit", maxit, "iteration cap (0 = dimension)");
    slv->add_option("--line-search", line_search, "armijo|exact");
    slv->add_option("--start", start, "e1|uniform|random");
    slv->add_option("--seed", seed, "random seed");
    slv->add_option("--out", out, "output directory")->required();

    int instances = 10;
    int starts = 10;
    auto* bench = app.add_subcommand("bench", "Run a benchmark experiment");
    bench->add_option("--family", family, "quadratic|chebyshev");
    bench->add_option("--n", n, "dimension");
    bench->add_option("--rho", rho, "planted sparsity level (quadratic)");
    bench->add_option("--theta", theta, "positive-definite mixing weight (quadratic)");
    bench->add_option("--m", m, "sample dimension (chebyshev)");
    bench->add_option("--instances", instances, "number of instances");
    bench->add_option("--starts", starts, "starting points per instance (quadratic)");
    bench->add_option("--algo", algos, "algorithm, repeatable")->required();
    bench->add_option("--tol", tol, "stationarity tolerance");
    bench->add_option("--maxit", maxit, "iteration cap (0 = dimension)");
    bench->add_option("--line-search", line_search, "armijo|exact");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--out", out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(family, n, rho, theta, m, seed, out);
        if (slv->parsed())
            return cmd_solve(problem_path, algo, tol, maxit, line_search, start, seed, out);
        if (bench->parsed()) {
            BenchParams p;
            p.family = family;
            p.n = n;
            p.rho = rho;
            p.theta = theta;
            p.m = m;
            p.instances = instances;
            p.starts = starts;
            p.algorithms = algos;
            p.tol = tol;
            p.max_iterations = maxit;
            p.line_search = parse_line_search(line_search);
            p.seed = seed;
            p.out_dir = out;
            const BenchOutcome outcome = run_experiment(p);
            int converged = 0;
            for (const RunSummary& s : outcome.summaries)
                if (s.status == "converged") ++converged;
            std::printf("bench: %zu runs, %d converged, outputs in %s\n",
                        outcome.summaries.size(), converged, out.c_str());
            return outcome.exit_code;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
