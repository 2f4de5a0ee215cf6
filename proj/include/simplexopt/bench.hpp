#ifndef SIMPLEXOPT_BENCH_HPP
#define SIMPLEXOPT_BENCH_HPP

#include <string>
#include <vector>

#include "simplexopt/generators.hpp"
#include "simplexopt/io.hpp"
#include "simplexopt/solver.hpp"

namespace simplexopt {

struct AlgorithmSpec {
    std::string name;  // fw | afw | pg | as-fw | as-afw | as-pg
    DirectionRule rule = DirectionRule::FW;
    bool active_set = false;
};

AlgorithmSpec parse_algorithm(const std::string& name);

struct BenchParams {
    std::string family = "quadratic";  // quadratic | chebyshev
    int n = 512;
    double rho = 0.1;
    double theta = 0.5;
    int m = 10;
    int instances = 10;
    int starts = 10;  // chebyshev always starts from e_1 and ignores this
    std::vector<std::string> algorithms;
    double tol = 1e-6;
    int max_iterations = 0;  // 0 means n
    LineSearchRule line_search = LineSearchRule::Armijo;
    std::uint64_t seed = 0;
    std::string out_dir;
};

struct RunSummary {
    std::string problem;  // p1, p2, ...
    int start = 1;        // 1-based starting-point id
    std::string algorithm;
    std::string status;  // solver status, or error:<what>
    int iterations = 0;
    double f_final = 0.0;
    double gap_final = 0.0;
    double cpu_time_s = 0.0;
    int identified = -1;  // planted zero set recovered; -1 when not applicable
};

struct BenchOutcome {
    std::vector<RunSummary> summaries;
    int exit_code = 0;
};

/// Generates the instances, runs every (instance, start, algorithm) triple —
/// in parallel up to SIMPLEXOPT_THREADS workers — and writes problem files,
/// per-run trace and error-curve CSVs, summary.csv and summary.json into
/// out_dir. The error curves report f(x^k) - f_min with f_min the best value
/// any compared algorithm reached on that (instance, start) pair. All outputs
/// except timing columns are byte-reproducible for a fixed seed.
BenchOutcome run_experiment(const BenchParams& params);

}  // namespace simplexopt

#endif
