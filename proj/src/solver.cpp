#include "simplexopt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace simplexopt {

namespace {

constexpr double kDescentThreshold = -1e-14;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Direction compute_direction(DirectionRule rule, const SimplexPoint& xt, const Vec& g,
                            const FaceIndexSet& face, const PGConfig& pg) {
    switch (rule) {
        case DirectionRule::FW: return fw_direction(xt, g, face);
        case DirectionRule::AFW: return afw_direction(xt, g, face);
        case DirectionRule::PG: return pg_direction(xt, g, face, pg);
    }
    throw std::logic_error("unknown direction rule");
}

}  // namespace

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::MaxIterations: return "maxit";
        case SolveStatus::LineSearchFailure: return "line-search-failure";
    }
    return "?";
}

bool classify_drop_step(int /*prev_support_size*/, double alpha, double alpha_max, StepKind kind) {
    return kind == StepKind::AFWAway && std::fabs(alpha - alpha_max) <= 1e-12 && alpha_max < 1.0;
}

SolveResult solve(const Objective& obj, const SimplexPoint& x0, const SolverConfig& cfg) {
    const int n = obj.dim();
    if (x0.dim() != n) throw std::invalid_argument("solve: x0 dimension mismatch");
    if (!is_feasible(x0.coords(), 1e-10)) throw std::invalid_argument("solve: infeasible x0");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
    cfg.ls.validate();
    cfg.pg.validate();
    ActiveSetConfig as = cfg.as;
    as.validate();
    const int maxit = (cfg.max_iterations > 0) ? cfg.max_iterations : n;
    if (cfg.line_search == LineSearchRule::ExactQuadratic &&
        !obj.curvature_along(Vec(static_cast<std::size_t>(n), 0.0)).has_value())
        throw std::invalid_argument("solve: exact line search needs a constant-Hessian objective");

    const auto t0 = Clock::now();
    SolveResult result{x0};
    result.trace.reserve(static_cast<std::size_t>(std::min(maxit, 1 << 16)));

    SimplexPoint x = x0;
    Vec g;
    double f = 0.0;
    double gap = 0.0;
    bool converged = false;
    int stagnant = 0;

    for (int k = 0; k < maxit; ++k) {
        f = obj.value_and_gradient(x.coords(), g);
        gap = stationarity_gap(x, g);
        if (gap <= cfg.tol) {
            converged = true;
            break;
        }

        // phase 1: zero the estimated-active variables
        ShiftResult shift{x};
        if (cfg.active_set_enabled) {
            auto [sr, updated] = shift_with_epsilon_control(x, f, obj, as, &g);
            shift = std::move(sr);
            as = updated;
        } else {
            shift.f_tilde = f;
            shift.estimate.nonactive = full_index_set(n);
            shift.estimate.mult = multipliers(x, g);
        }

        const SimplexPoint& xt = shift.x_tilde;
        Vec g_tilde_storage;
        const Vec* g_tilde = &g;
        if (shift.moved_mass > 0.0) {
            g_tilde_storage = obj.gradient(xt.coords());
            g_tilde = &g_tilde_storage;
        }

        // phase 2: direction on the nonactive face plus line search
        const FaceIndexSet face(shift.estimate.nonactive, n);
        const Direction dir = compute_direction(cfg.rule, xt, *g_tilde, face, cfg.pg);

        double alpha = 0.0;
        int evals = 0;
        StepKind step = StepKind::Zero;
        bool ls_failed = false;
        if (dir.dir_deriv < kDescentThreshold) {
            step = dir.kind;
            if (cfg.line_search == LineSearchRule::Armijo) {
                try {
                    const ArmijoResult ar = armijo(obj, xt, shift.f_tilde, dir, cfg.ls);
                    alpha = ar.alpha;
                    evals = ar.evals;
                } catch (const std::runtime_error&) {
                    ls_failed = true;
                    evals = cfg.ls.max_backtracks + 1;
                    alpha = 0.0;
                    step = StepKind::Zero;
                }
            } else {
                alpha = exact_quadratic(obj, xt, dir);
            }
        }

        const bool drop = classify_drop_step(xt.support_size(), alpha, dir.alpha_max, step);

        IterationRecord rec;
        rec.k = k;
        rec.f = f;
        rec.gap = gap;
        rec.n_active = static_cast<int>(shift.estimate.active.size());
        rec.epsilon = as.epsilon;
        rec.alpha = alpha;
        rec.step = step;
        rec.drop_step = drop;
        rec.evals = evals;
        rec.elapsed_s = seconds_since(t0);
        result.trace.push_back(rec);
        if (cfg.record_active_sets) result.active_set_trace.push_back(shift.estimate.active);

        if (ls_failed) {
            x = xt;
            result.status = SolveStatus::LineSearchFailure;
            result.x_final = x;
            f = obj.value_and_gradient(x.coords(), g);
            gap = stationarity_gap(x, g);
            result.f_final = f;
            result.gap_final = gap;
            result.final_active_set = estimate(x, g, as.epsilon).active;
            return result;
        }

        // advance the iterate
        if (alpha > 0.0) {
            Vec xn = xt.coords();
            for (std::size_t i = 0; i < xn.size(); ++i) xn[i] += alpha * dir.d[i];
            // an away step at its maximal stepsize zeroes the away vertex exactly
            if (step == StepKind::AFWAway && std::fabs(alpha - dir.alpha_max) <= 1e-12 &&
                dir.pivot >= 0)
                xn[static_cast<std::size_t>(dir.pivot)] = 0.0;
            x = SimplexPoint(std::move(xn));
            stagnant = 0;
        } else if (shift.moved_mass > 0.0) {
            x = xt;
            stagnant = 0;
        } else {
            // no shift and no step: stationary on the estimated face while the
            // full gap is still above tol; shrink epsilon once and retry, then
            // give up to avoid cycling
            ++stagnant;
            if (!cfg.active_set_enabled || stagnant > 1) break;
            as.epsilon *= as.shrink;
        }
    }

    if (converged) {
        result.status = SolveStatus::Converged;
    } else {
        result.status = SolveStatus::MaxIterations;
        f = obj.value_and_gradient(x.coords(), g);
        gap = stationarity_gap(x, g);
    }
    result.x_final = x;
    result.f_final = f;
    result.gap_final = gap;
    result.final_active_set = estimate(x, g, as.epsilon).active;
    return result;
}

}  // namespace simplexopt
