#include "simplexopt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "simplexopt/rng.hpp"

namespace simplexopt {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int worker_count(std::size_t runs) {
    int threads = 0;
    if (const char* env = std::getenv("SIMPLEXOPT_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), runs));
}

struct RunSpec {
    int instance = 0;  // 0-based
    int start = 0;     // 0-based
    int algo = 0;      // index into parsed algorithms
};

struct RunOutput {
    std::optional<SolveResult> result;
    double cpu_time_s = 0.0;
    std::string error;
};

std::string problem_id(int instance) { return "p" + std::to_string(instance + 1); }

}  // namespace

AlgorithmSpec parse_algorithm(const std::string& name) {
    AlgorithmSpec spec;
    spec.name = name;
    std::string base = name;
    if (name.rfind("as-", 0) == 0) {
        spec.active_set = true;
        base = name.substr(3);
    }
    if (base == "fw")
        spec.rule = DirectionRule::FW;
    else if (base == "afw")
        spec.rule = DirectionRule::AFW;
    else if (base == "pg")
        spec.rule = DirectionRule::PG;
    else
        throw std::invalid_argument("unknown algorithm: " + name +
                                    " (expected fw|afw|pg|as-fw|as-afw|as-pg)");
    return spec;
}

BenchOutcome run_experiment(const BenchParams& params) {
    if (params.algorithms.empty())
        throw std::invalid_argument("bench: need at least one algorithm");
    if (params.instances < 1 || params.n < 1)
        throw std::invalid_argument("bench: instances and n must be >= 1");
    const bool quadratic = params.family == "quadratic";
    if (!quadratic && params.family != "chebyshev")
        throw std::invalid_argument("bench: unknown family " + params.family);
    if (quadratic && params.starts < 1)
        throw std::invalid_argument("bench: starts must be >= 1");

    std::vector<AlgorithmSpec> algos;
    for (const std::string& name : params.algorithms) algos.push_back(parse_algorithm(name));

    fs::create_directories(params.out_dir);
    const fs::path out(params.out_dir);

    // instances are generated up front and shared read-only by the workers
    std::vector<GeneratedQuadratic> quads;
    std::vector<std::shared_ptr<ChebyshevObjective>> chebs;
    for (int i = 0; i < params.instances; ++i) {
        const std::uint64_t inst_seed = mix_seed(params.seed, static_cast<std::uint64_t>(i), 0xa11);
        if (quadratic) {
            QuadGenConfig cfg;
            cfg.n = params.n;
            cfg.rho = params.rho;
            cfg.theta = params.theta;
            cfg.seed = inst_seed;
            GeneratedQuadratic inst = gen_quadratic(cfg);
            ProblemMeta meta;
            meta.generator = "quadratic(theta*(B'B/n+I)+(1-theta)*S, planted sparse point)";
            meta.seed = inst.sub_seed;
            meta.rho = params.rho;
            meta.theta = params.theta;
            meta.planted_x = inst.planted.coords();
            save_quadratic((out / ("problem__" + problem_id(i) + ".json")).string(),
                           *inst.objective, meta);
            quads.push_back(std::move(inst));
        } else {
            ChebGenConfig cfg;
            cfg.n = params.n;
            cfg.m = params.m;
            cfg.seed = inst_seed;
            auto obj = gen_chebyshev(cfg);
            ProblemMeta meta;
            meta.generator = "chebyshev(standard normal sample points)";
            meta.seed = inst_seed;
            save_chebyshev((out / ("problem__" + problem_id(i) + ".json")).string(), *obj, meta);
            chebs.push_back(std::move(obj));
        }
    }

    const int starts = quadratic ? params.starts : 1;

    std::vector<RunSpec> specs;
    for (int i = 0; i < params.instances; ++i)
        for (int s = 0; s < starts; ++s)
            for (int a = 0; a < static_cast<int>(algos.size()); ++a)
                specs.push_back(RunSpec{i, s, a});
    std::vector<RunOutput> outputs(specs.size());

    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= specs.size()) return;
            const RunSpec& rs = specs[idx];
            RunOutput& ro = outputs[idx];
            try {
                const Objective& obj = quadratic
                                           ? static_cast<const Objective&>(*quads[rs.instance].objective)
                                           : static_cast<const Objective&>(*chebs[rs.instance]);
                const SimplexPoint x0 =
                    quadratic ? random_start(params.n,
                                             mix_seed(params.seed,
                                                      static_cast<std::uint64_t>(rs.instance),
                                                      static_cast<std::uint64_t>(rs.start), 0x57a))
                              : SimplexPoint::vertex(params.n, 0);

                SolverConfig cfg;
                cfg.rule = algos[rs.algo].rule;
                cfg.active_set_enabled = algos[rs.algo].active_set;
                cfg.line_search = params.line_search;
                cfg.tol = params.tol;
                cfg.max_iterations = params.max_iterations;
                cfg.seed = mix_seed(params.seed, static_cast<std::uint64_t>(rs.instance),
                                    static_cast<std::uint64_t>(rs.start),
                                    static_cast<std::uint64_t>(rs.algo));

                const auto t0 = Clock::now();
                SolveResult res = solve(obj, x0, cfg);
                ro.cpu_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
                ro.result = std::move(res);
            } catch (const std::exception& e) {
                ro.error = e.what();
            }
        }
    };

    const int nthreads = worker_count(specs.size());
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    // best objective value per (instance, start) across the compared algorithms
    std::vector<double> fmin(static_cast<std::size_t>(params.instances) *
                                 static_cast<std::size_t>(starts),
                             std::numeric_limits<double>::infinity());
    for (std::size_t idx = 0; idx < specs.size(); ++idx) {
        if (!outputs[idx].result) continue;
        const std::size_t cell = static_cast<std::size_t>(specs[idx].instance) *
                                     static_cast<std::size_t>(starts) +
                                 static_cast<std::size_t>(specs[idx].start);
        fmin[cell] = std::min(fmin[cell], outputs[idx].result->f_final);
    }

    BenchOutcome outcome;
    for (std::size_t idx = 0; idx < specs.size(); ++idx) {
        const RunSpec& rs = specs[idx];
        const RunOutput& ro = outputs[idx];
        const std::string pid = problem_id(rs.instance);
        const std::string sid = "s" + std::to_string(rs.start + 1);
        const std::string stem = pid + "__" + sid + "__" + algos[rs.algo].name;

        RunSummary sum;
        sum.problem = pid;
        sum.start = rs.start + 1;
        sum.algorithm = algos[rs.algo].name;
        sum.cpu_time_s = ro.cpu_time_s;
        if (!ro.result) {
            sum.status = "error:" + ro.error;
            outcome.exit_code = 1;
        } else {
            const SolveResult& res = *ro.result;
            sum.status = status_name(res.status);
            if (res.status == SolveStatus::LineSearchFailure) outcome.exit_code = 1;
            sum.iterations = static_cast<int>(res.trace.size());
            sum.f_final = res.f_final;
            sum.gap_final = res.gap_final;
            if (quadratic)
                sum.identified =
                    (res.final_active_set == quads[rs.instance].planted_zero_set) ? 1 : 0;

            write_trace_csv_file((out / ("trace__" + stem + ".csv")).string(), res);

            const std::size_t cell = static_cast<std::size_t>(rs.instance) *
                                         static_cast<std::size_t>(starts) +
                                     static_cast<std::size_t>(rs.start);
            std::ofstream curve(out / ("curve__" + stem + ".csv"), std::ios::binary);
            curve << "k,elapsed_s,error\n";
            for (const IterationRecord& r : res.trace)
                curve << r.k << ',' << fmt_double(r.elapsed_s) << ','
                      << fmt_double(r.f - fmin[cell]) << '\n';
            curve << res.trace.size() << ',' << fmt_double(ro.cpu_time_s) << ','
                  << fmt_double(res.f_final - fmin[cell]) << '\n';
        }
        outcome.summaries.push_back(std::move(sum));
    }

    // summary.csv
    {
        std::ofstream os(out / "summary.csv", std::ios::binary);
        os << "problem,start,algo,status,iters,f_final,gap_final,cpu_time_s,identified\n";
        for (const RunSummary& s : outcome.summaries) {
            os << s.problem << ',' << s.start << ',' << s.algorithm << ',' << s.status << ','
               << s.iterations << ',' << fmt_double(s.f_final) << ',' << fmt_double(s.gap_final)
               << ',' << fmt_double(s.cpu_time_s) << ','
               << (s.identified < 0 ? std::string("na") : std::to_string(s.identified)) << '\n';
        }
    }

    // summary.json embeds the full configuration
    {
        nlohmann::json j;
        j["family"] = params.family;
        j["n"] = params.n;
        if (quadratic) {
            j["rho"] = params.rho;
            j["theta"] = params.theta;
        } else {
            j["m"] = params.m;
        }
        j["instances"] = params.instances;
        j["starts"] = starts;
        j["algorithms"] = params.algorithms;
        j["tol"] = params.tol;
        j["maxit"] = (params.max_iterations > 0) ? params.max_iterations : params.n;
        j["line_search"] =
            (params.line_search == LineSearchRule::Armijo) ? "armijo" : "exact";
        j["seed"] = params.seed;
        nlohmann::json runs = nlohmann::json::array();
        for (const RunSummary& s : outcome.summaries) {
            nlohmann::json r;
            r["problem"] = s.problem;
            r["start"] = s.start;
            r["algo"] = s.algorithm;
            r["status"] = s.status;
            r["iters"] = s.iterations;
            r["f_final"] = s.f_final;
            r["gap_final"] = s.gap_final;
            r["cpu_time_s"] = s.cpu_time_s;
            if (s.identified >= 0) r["identified"] = (s.identified == 1);
            runs.push_back(std::move(r));
        }
        j["runs"] = std::move(runs);
        std::ofstream os(out / "summary.json", std::ios::binary);
        os << j.dump(2) << '\n';
    }

    return outcome;
}

}  // namespace simplexopt
