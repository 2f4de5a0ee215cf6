// Acceptance suite: end-to-end checks of the solver's contract, one
// criterion per function, each printing a PASS/FAIL line. Run all with no
// arguments or a single one with --criterion N. --cli PATH points at the
// command-line binary for the reproducibility check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "simplexopt/bench.hpp"
#include "simplexopt/rng.hpp"
#include "test_util.hpp"

using namespace simplexopt;
using namespace simplexopt::testing;
namespace fs = std::filesystem;

namespace {

std::string g_cli_path;

double spectral_norm(const Vec& q, int n) {
    Eigen::MatrixXd em(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) em(i, j) = q[static_cast<std::size_t>(i) * n + j];
    const Eigen::VectorXd evs = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(em).eigenvalues();
    return std::max(std::fabs(evs.minCoeff()), std::fabs(evs.maxCoeff()));
}

double min_eigenvalue(const Vec& q, int n, const IndexSet& subset) {
    const int t = static_cast<int>(subset.size());
    Eigen::MatrixXd sub(t, t);
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            sub(a, b) = q[static_cast<std::size_t>(subset[static_cast<std::size_t>(a)]) * n +
                          subset[static_cast<std::size_t>(b)]];
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sub).eigenvalues().minCoeff();
}

Vec random_symmetric(int n, Rng& rng) {
    Vec q(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = rng.uniform(-2.0, 2.0);
            q[static_cast<std::size_t>(i) * n + j] = v;
            q[static_cast<std::size_t>(j) * n + i] = v;
        }
    return q;
}

SimplexPoint basin_start(const SimplexPoint& planted, double delta, std::uint64_t seed) {
    Rng rng(seed);
    Vec y = planted.coords();
    for (double& v : y) v += delta * rng.uniform();
    return project_simplex(y, FaceIndexSet::full(planted.dim()));
}

// ---------------------------------------------------------------------------

// Decrease law of the mass shift at the theoretical epsilon bound.
bool criterion_1(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(101);
    const double C = 1e-6;
    int checked = 0, violations = 0;
    double worst = -1e300;
    for (int inst = 0; inst < 20; ++inst) {
        const int n = 5 + static_cast<int>(rng.below(46));  // n <= 50
        const Vec q = random_symmetric(n, rng);
        const double exact_l = std::max(spectral_norm(q, n), 1e-12);
        Vec c(static_cast<std::size_t>(n));
        for (double& v : c) v = rng.uniform(-1.0, 1.0);
        const QuadraticObjective obj(n, q, c, exact_l, 0);
        const double eps = 2.0 / (n * exact_l * (2.0 * C + 1.0));

        for (int pt = 0; pt < 50; ++pt) {
            const SimplexPoint x{random_simplex_vec(n, rng)};
            const Vec g = obj.gradient(x.coords());
            if (stationarity_gap(x, g) <= 1e-12) continue;
            const ShiftResult sr = shift_to_tilde(x, estimate(x, g, eps));
            const double lhs = obj.value(sr.x_tilde.coords()) - obj.value(x.coords());
            const double slack = lhs - (-C * exact_l * sr.shift_dist2);
            worst = std::max(worst, slack);
            ++checked;
            if (slack > 1e-12) ++violations;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << checked << " points, " << violations << " violations, worst slack " << worst << ", "
       << secs << " s";
    detail = os.str();
    return checked == 1000 && violations == 0 && secs < 10.0;
}

// Gradient minimizers always land in the nonactive estimate.
bool criterion_2(std::string& detail) {
    Rng rng(202);
    int tested = 0, violations = 0;
    while (tested < 1000) {
        const int n = 2 + static_cast<int>(rng.below(40));
        const SimplexPoint x{random_simplex_vec(n, rng)};
        Vec g(static_cast<std::size_t>(n));
        for (double& v : g) v = rng.uniform(-5.0, 5.0);
        if (stationarity_gap(x, g) <= 1e-8) continue;
        ++tested;
        const double eps = std::pow(10.0, rng.uniform(-6.0, 0.0));
        const ActiveSetEstimate est = estimate(x, g, eps);
        for (int j : est.grad_minimizers)
            if (!std::binary_search(est.nonactive.begin(), est.nonactive.end(), j)) ++violations;
    }
    detail = "1000 non-stationary points, " + std::to_string(violations) + " violations";
    return violations == 0;
}

struct IdentificationRun {
    GeneratedQuadratic instance;
    SolveResult result;
    std::string algo;
};

// Shared driver for criteria 3 and 10: the sparse indefinite family with an
// attracting planted point, solved from starts inside its basin.
std::vector<IdentificationRun> identification_runs() {
    std::vector<IdentificationRun> runs;
    for (int inst = 0; inst < 20; ++inst) {
        QuadGenConfig g;
        g.n = 200;
        g.rho = 0.1;
        g.theta = 0.9;  // indefinite overall, positive definite on the planted face
        g.seed = 300 + static_cast<std::uint64_t>(inst);
        GeneratedQuadratic gen = gen_quadratic(g);
        const SimplexPoint x0 =
            basin_start(gen.planted, 0.25, 9000 + static_cast<std::uint64_t>(inst));
        for (const char* name : {"as-afw", "as-pg"}) {
            const AlgorithmSpec spec = parse_algorithm(name);
            SolverConfig cfg;
            cfg.rule = spec.rule;
            cfg.active_set_enabled = true;
            cfg.max_iterations = 200;
            cfg.record_active_sets = true;
            SolveResult res = solve(*gen.objective, x0, cfg);
            runs.push_back(IdentificationRun{gen, std::move(res), name});
        }
    }
    return runs;
}

// Planted-support identification on the nonconvex family.
bool criterion_3(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    int ok = 0, total = 0, nonconvex = 0, attracting = 0;
    const std::vector<IdentificationRun> runs = identification_runs();
    for (const IdentificationRun& r : runs) {
        ++total;
        if (r.result.gap_final <= 1e-6 &&
            r.result.final_active_set == r.instance.planted_zero_set)
            ++ok;
    }
    // construction sanity: every instance indefinite, planted face hessian PD
    for (std::size_t i = 0; i < runs.size(); i += 2) {
        const GeneratedQuadratic& gen = runs[i].instance;
        const Vec& q = gen.objective->q();
        if (min_eigenvalue(q, 200, full_index_set(200)) < 0.0) ++nonconvex;
        if (min_eigenvalue(q, 200, gen.planted_support) > 0.0) ++attracting;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << ok << "/" << total << " runs identified (need >= 90%), " << nonconvex
       << "/20 indefinite, " << attracting << "/20 attracting faces, " << secs << " s";
    detail = os.str();
    return total == 40 && ok * 10 >= total * 9 && nonconvex == 20 && attracting == 20 &&
           secs < 60.0;
}

// Global convergence of all six configurations.
bool criterion_4(std::string& detail) {
    int ok = 0, total = 0;
    for (int inst = 0; inst < 20; ++inst) {
        QuadGenConfig g;
        g.n = 100;
        g.rho = 1.0 / g.n;  // vertex support: the regime where the plain
        g.theta = 1.0;      // toward-vertex baseline is linearly convergent
        g.margin_lo = 0.5;
        g.seed = 400 + static_cast<std::uint64_t>(inst);
        const GeneratedQuadratic gen = gen_quadratic(g);
        const SimplexPoint x0 = random_start(g.n, 4400 + static_cast<std::uint64_t>(inst));
        for (const char* name : {"fw", "afw", "pg", "as-fw", "as-afw", "as-pg"}) {
            const AlgorithmSpec spec = parse_algorithm(name);
            SolverConfig cfg;
            cfg.rule = spec.rule;
            cfg.active_set_enabled = spec.active_set;
            cfg.max_iterations = 10 * g.n;
            const SolveResult res = solve(*gen.objective, x0, cfg);
            ++total;
            if (res.status == SolveStatus::Converged && res.gap_final <= cfg.tol) ++ok;
        }
    }
    detail = std::to_string(ok) + "/" + std::to_string(total) + " runs reached the tolerance";
    return total == 120 && ok == total;
}

// Geometric error contraction after the active set settles.
bool criterion_5(std::string& detail) {
    int ok = 0, total = 0;
    double worst_gm = 0.0;
    for (int inst = 0; inst < 10; ++inst) {
        QuadGenConfig g;
        g.n = 100;
        g.rho = 0.1;
        g.theta = 1.0;  // strongly convex
        g.margin_lo = 0.5;
        g.seed = 500 + static_cast<std::uint64_t>(inst);
        const GeneratedQuadratic gen = gen_quadratic(g);
        const double f_star = gen.objective->value(gen.planted.coords());

        // confirm the planted value with an independent long projected-gradient run
        {
            SolverConfig vc;
            vc.rule = DirectionRule::PG;
            vc.active_set_enabled = false;
            vc.line_search = LineSearchRule::ExactQuadratic;
            vc.tol = 1e-12;
            vc.max_iterations = 20000;
            const SolveResult vres =
                solve(*gen.objective, random_start(g.n, 31 + static_cast<std::uint64_t>(inst)), vc);
            if (std::fabs(vres.f_final - f_star) > 1e-9 || gen.gap_at_planted > 1e-10) {
                detail = "planted optimum failed verification on instance " + std::to_string(inst);
                return false;
            }
        }

        const SimplexPoint x0 = random_start(g.n, 7100 + static_cast<std::uint64_t>(inst));
        for (const char* name : {"as-fw", "as-afw", "as-pg"}) {
            const AlgorithmSpec spec = parse_algorithm(name);
            SolverConfig cfg;
            cfg.rule = spec.rule;
            cfg.active_set_enabled = true;
            cfg.line_search = LineSearchRule::ExactQuadratic;
            cfg.max_iterations = 1000;
            cfg.record_active_sets = true;
            const SolveResult res = solve(*gen.objective, x0, cfg);
            ++total;

            int k_id = -1;
            for (std::size_t k = 0; k < res.active_set_trace.size(); ++k)
                if (res.active_set_trace[k] == gen.planted_zero_set) {
                    k_id = static_cast<int>(k);
                    break;
                }
            if (k_id < 0) continue;

            double logsum = 0.0;
            int count = 0;
            auto add_ratio = [&](double e0, double e1) {
                if (e0 > 1e-14 && e1 > 0.0) {
                    logsum += std::log(e1 / e0);
                    ++count;
                }
            };
            for (std::size_t k = static_cast<std::size_t>(k_id); k + 1 < res.trace.size(); ++k)
                add_ratio(res.trace[k].f - f_star, res.trace[k + 1].f - f_star);
            if (!res.trace.empty())
                add_ratio(res.trace.back().f - f_star, res.f_final - f_star);

            const double gm = count > 0 ? std::exp(logsum / count) : 0.0;
            worst_gm = std::max(worst_gm, gm);
            if (gm < 0.99) ++ok;
        }
    }
    std::ostringstream os;
    os << ok << "/" << total << " runs contracted geometrically, worst mean ratio " << worst_gm;
    detail = os.str();
    return total == 30 && ok == total;
}

// Sort-threshold projection against brute-force support enumeration.
bool criterion_6(std::string& detail) {
    Rng rng(606);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));  // n <= 8
        Vec y(static_cast<std::size_t>(n));
        for (double& v : y) v = rng.uniform(-2.0, 2.0);
        const IndexSet face = random_face(n, rng);
        const Vec oracle = brute_force_project(y, face);
        const SimplexPoint p = project_simplex(y, FaceIndexSet(face, n));
        worst = std::max(worst, max_abs_diff(oracle, p.coords()));
    }
    std::ostringstream os;
    os << "500 points, max deviation " << worst;
    detail = os.str();
    return worst <= 1e-10;
}

// Line-search contracts: the backtracking inequality and exact-step optimality.
bool criterion_7(std::string& detail) {
    Rng rng(707);
    int cases = 0, armijo_bad = 0, grid_bad = 0;
    double worst_gap = -1e300;
    while (cases < 500) {
        const int n = 2 + static_cast<int>(rng.below(7));
        Vec b(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (double& v : b) v = rng.normal();
        Vec q(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    s += b[static_cast<std::size_t>(k) * n + i] *
                         b[static_cast<std::size_t>(k) * n + j];
                q[static_cast<std::size_t>(i) * n + j] = s / n;
                q[static_cast<std::size_t>(j) * n + i] = s / n;
            }
        Vec c(static_cast<std::size_t>(n));
        for (double& v : c) v = rng.uniform(-1.0, 1.0);
        const QuadraticObjective obj(n, q, c);

        // random feasible descent segment
        const SimplexPoint x{random_simplex_vec(n, rng)};
        const SimplexPoint target{random_simplex_vec(n, rng)};
        Direction dir;
        dir.d.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            dir.d[static_cast<std::size_t>(i)] =
                target[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
        dir.dir_deriv = dot(obj.gradient(x.coords()), dir.d);
        dir.alpha_max = rng.uniform() < 0.3 ? rng.uniform(0.05, 1.0) : 1.0;
        if (dir.dir_deriv >= -1e-8) continue;
        ++cases;

        const double f_x = obj.value(x.coords());
        const LineSearchConfig ls;
        const ArmijoResult ar = armijo(obj, x, f_x, dir, ls);
        if (!(ar.alpha > 0.0 && ar.alpha <= dir.alpha_max &&
              ar.f_new <= f_x + ls.slope * ar.alpha * dir.dir_deriv))
            ++armijo_bad;

        const double a_exact = exact_quadratic(obj, x, dir);
        Vec pt(static_cast<std::size_t>(n));
        auto f_at = [&](double a) {
            for (int i = 0; i < n; ++i)
                pt[static_cast<std::size_t>(i)] =
                    x[static_cast<std::size_t>(i)] + a * dir.d[static_cast<std::size_t>(i)];
            return obj.value(pt);
        };
        const double f_exact = f_at(a_exact);
        double grid_best = 1e300;
        for (int gi = 1; gi <= 10000; ++gi)
            grid_best = std::min(grid_best, f_at(dir.alpha_max * gi / 10000.0));
        worst_gap = std::max(worst_gap, f_exact - grid_best);
        if (f_exact > grid_best + 1e-10) ++grid_bad;
    }
    std::ostringstream os;
    os << armijo_bad << " backtracking violations, " << grid_bad
       << " grid violations, worst exact-vs-grid " << worst_gap;
    detail = os.str();
    return armijo_bad == 0 && grid_bad == 0;
}

// Central-difference validation of both objective families.
bool criterion_8(std::string& detail) {
    Rng rng(808);
    double worst_q = 0.0, worst_c = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(20));
        Vec c(static_cast<std::size_t>(n));
        for (double& v : c) v = rng.uniform(-1.0, 1.0);
        const QuadraticObjective obj(n, random_symmetric(n, rng), c);
        worst_q =
            std::max(worst_q, check_gradient(obj, SimplexPoint{random_simplex_vec(n, rng)}, 1e-6));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(10));
        const int n = 2 + static_cast<int>(rng.below(20));
        Vec a(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
        for (double& v : a) v = rng.normal();
        const ChebyshevObjective obj(m, n, a);
        worst_c =
            std::max(worst_c, check_gradient(obj, SimplexPoint{random_simplex_vec(n, rng)}, 1e-6));
    }
    std::ostringstream os;
    os << "worst relative error: quadratic " << worst_q << ", chebyshev " << worst_c;
    detail = os.str();
    return worst_q <= 1e-5 && worst_c <= 1e-5;
}

// Iteration and objective comparison against the plain baselines on the
// smallest-enclosing-ball family.
bool criterion_9(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = 512, m = 10, maxit = 4 * n;
    const char* base_names[] = {"fw", "afw", "pg"};
    const char* as_names[] = {"as-fw", "as-afw", "as-pg"};
    int iter_wins[3] = {0, 0, 0};
    int f_ok[3] = {0, 0, 0};
    for (int seed = 0; seed < 10; ++seed) {
        ChebGenConfig g;
        g.n = n;
        g.m = m;
        g.seed = static_cast<std::uint64_t>(seed);
        const auto obj = gen_chebyshev(g);
        auto run = [&](const char* name) {
            const AlgorithmSpec spec = parse_algorithm(name);
            SolverConfig cfg;
            cfg.rule = spec.rule;
            cfg.active_set_enabled = spec.active_set;
            cfg.line_search = LineSearchRule::ExactQuadratic;
            cfg.max_iterations = maxit;
            const SolveResult res = solve(*obj, SimplexPoint::vertex(n, 0), cfg);
            const int iters = res.status == SolveStatus::Converged
                                  ? static_cast<int>(res.trace.size())
                                  : maxit + 1;
            return std::pair<int, double>{iters, res.f_final};
        };
        for (int a = 0; a < 3; ++a) {
            const auto [ib, fb] = run(base_names[a]);
            const auto [ia, fa] = run(as_names[a]);
            if (ia <= ib) ++iter_wins[a];
            if (fa <= fb + 1e-4) ++f_ok[a];
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "iteration wins fw " << iter_wins[0] << "/10, afw " << iter_wins[1] << "/10, pg "
       << iter_wins[2] << "/10; objective ok " << (f_ok[0] + f_ok[1] + f_ok[2]) << "/30; " << secs
       << " s";
    detail = os.str();
    bool ok = secs < 300.0;
    for (int a = 0; a < 3; ++a) ok = ok && iter_wins[a] >= 8 && f_ok[a] == 10;
    return ok;
}

// Bounded runs of consecutive drop steps once the active set has settled.
bool criterion_10(std::string& detail) {
    int checked = 0, worst = 0, bound = 0;
    for (const IdentificationRun& r : identification_runs()) {
        if (r.algo != "as-afw") continue;
        ++checked;
        bound = static_cast<int>(r.instance.planted_support.size()) - 1;
        int k_id = -1;
        for (std::size_t k = 0; k < r.result.active_set_trace.size(); ++k)
            if (r.result.active_set_trace[k] == r.instance.planted_zero_set) {
                k_id = static_cast<int>(k);
                break;
            }
        if (k_id < 0) continue;
        int streak = 0;
        for (std::size_t k = static_cast<std::size_t>(k_id); k < r.result.trace.size(); ++k) {
            streak = r.result.trace[k].drop_step ? streak + 1 : 0;
            worst = std::max(worst, streak);
        }
    }
    std::ostringstream os;
    os << checked << " runs, longest consecutive drop-step streak " << worst << " (bound " << bound
       << ")";
    detail = os.str();
    return checked == 20 && worst <= bound;
}

// Byte-identical benchmark outputs for a fixed seed, timing columns aside.
bool criterion_11(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no --cli path given";
        return false;
    }
    const fs::path root = fs::temp_directory_path() / "simplexopt_acceptance_repro";
    fs::remove_all(root);
    fs::create_directories(root);

    auto bench = [&](const std::string& family, const std::string& extra, const fs::path& out) {
        const std::string cmd = "\"" + g_cli_path + "\" bench --family " + family +
                                " --n 24 --instances 2 --starts 2 " + extra +
                                " --algo fw --algo as-fw --algo as-pg --seed 512 --out \"" +
                                out.string() + "\" > /dev/null";
        return std::system(cmd.c_str());
    };

    for (const std::string family : {std::string("quadratic"), std::string("chebyshev")}) {
        const std::string extra = family == "quadratic" ? "--rho 0.2" : "--m 4 --maxit 200";
        if (bench(family, extra, root / (family + "_a")) != 0 ||
            bench(family, extra, root / (family + "_b")) != 0) {
            detail = "bench invocation failed for " + family;
            return false;
        }
    }

    // compare all emitted files with timing fields blanked
    auto normalized = [](const fs::path& p) {
        std::ifstream is(p, std::ios::binary);
        std::stringstream ss;
        ss << is.rdbuf();
        std::string out;
        std::istringstream lines(ss.str());
        std::string line;
        const bool csv = p.extension() == ".csv";
        std::vector<std::size_t> timing_cols;
        bool first = true;
        while (std::getline(lines, line)) {
            if (csv) {
                std::vector<std::string> cells;
                std::stringstream cs(line);
                std::string cell;
                while (std::getline(cs, cell, ',')) cells.push_back(cell);
                if (first) {
                    for (std::size_t i = 0; i < cells.size(); ++i)
                        if (cells[i] == "elapsed_s" || cells[i] == "cpu_time_s")
                            timing_cols.push_back(i);
                    first = false;
                }
                for (std::size_t col : timing_cols)
                    if (col < cells.size()) cells[col] = "_";
                for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
                out += '\n';
            } else {
                // json summary: blank the timing field wherever it appears
                const std::string key = "\"cpu_time_s\":";
                const std::size_t at = line.find(key);
                if (at != std::string::npos) line = line.substr(0, at + key.size()) + " 0,";
                out += line + '\n';
            }
        }
        return out;
    };

    int files = 0;
    for (const std::string family : {std::string("quadratic"), std::string("chebyshev")}) {
        const fs::path a = root / (family + "_a");
        const fs::path b = root / (family + "_b");
        for (const auto& entry : fs::directory_iterator(a)) {
            const fs::path other = b / entry.path().filename();
            if (!fs::exists(other)) {
                detail = "missing file in second run: " + entry.path().filename().string();
                return false;
            }
            if (normalized(entry.path()) != normalized(other)) {
                detail = "mismatch in " + entry.path().filename().string();
                return false;
            }
            ++files;
        }
    }
    detail = std::to_string(files) + " files identical after blanking timing fields";
    return files > 0;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (arg == "--cli" && i + 1 < argc)
            g_cli_path = argv[++i];
    }

    const std::vector<Criterion> criteria = {
        {1, "mass-shift sufficient decrease at the epsilon bound", criterion_1},
        {2, "gradient minimizers stay nonactive", criterion_2},
        {3, "planted active-set identification", criterion_3},
        {4, "global convergence of all configurations", criterion_4},
        {5, "post-identification geometric contraction", criterion_5},
        {6, "projection matches brute-force enumeration", criterion_6},
        {7, "line-search contracts", criterion_7},
        {8, "gradient finite-difference validation", criterion_8},
        {9, "active-set variants match or beat baselines", criterion_9},
        {10, "bounded consecutive drop steps", criterion_10},
        {11, "seed-reproducible benchmark outputs", criterion_11},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
