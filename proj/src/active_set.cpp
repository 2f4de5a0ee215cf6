#include "simplexopt/active_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simplexopt {

void ActiveSetConfig::validate() const {
    if (!(epsilon > 0.0) || !(epsilon0 > 0.0) || epsilon > epsilon0)
        throw std::invalid_argument("active-set config: need 0 < epsilon <= epsilon0");
    if (!(shrink > 0.0) || !(shrink < 1.0))
        throw std::invalid_argument("active-set config: shrink must lie in (0,1)");
    if (!(decrease_c > 0.0))
        throw std::invalid_argument("active-set config: decrease constant must be positive");
    if (max_shrinks_per_iter < 0)
        throw std::invalid_argument("active-set config: max_shrinks_per_iter must be >= 0");
}

MultiplierValues multipliers(const SimplexPoint& x, const Vec& g) {
    if (g.size() != x.coords().size())
        throw std::invalid_argument("multipliers: dimension mismatch");
    MultiplierValues mv;
    mv.lambda = dot(g, x.coords());
    mv.mu.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) mv.mu[i] = g[i] - mv.lambda;
    return mv;
}

ActiveSetEstimate estimate(const SimplexPoint& x, const Vec& g, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("estimate: epsilon must be positive");
    ActiveSetEstimate est;
    est.mult = multipliers(x, g);
    const Vec& xi = x.coords();
    const std::size_t n = xi.size();

    // comparisons are exact: the tolerance is epsilon itself
    for (std::size_t i = 0; i < n; ++i) {
        if (xi[i] <= epsilon * est.mult.mu[i])
            est.active.push_back(static_cast<int>(i));
        else
            est.nonactive.push_back(static_cast<int>(i));
    }

    double gmin = g[0];
    for (std::size_t i = 1; i < n; ++i) gmin = std::min(gmin, g[i]);
    for (std::size_t i = 0; i < n; ++i)
        if (g[i] == gmin) est.grad_minimizers.push_back(static_cast<int>(i));
    return est;
}

ShiftResult shift_to_tilde(const SimplexPoint& x, const ActiveSetEstimate& est) {
    Vec xt = x.coords();

    double mass = 0.0;
    double dist2 = 0.0;
    for (int i : est.active) {
        const double v = xt[static_cast<std::size_t>(i)];
        mass += v;
        dist2 += v * v;
        xt[static_cast<std::size_t>(i)] = 0.0;
    }

    // pivot: smallest index that is both nonactive and a gradient minimizer
    int pivot = -1;
    {
        auto a = est.nonactive.begin();
        auto b = est.grad_minimizers.begin();
        while (a != est.nonactive.end() && b != est.grad_minimizers.end()) {
            if (*a == *b) {
                pivot = *a;
                break;
            }
            if (*a < *b)
                ++a;
            else
                ++b;
        }
    }
    if (pivot < 0) throw std::runtime_error("no pivot");

    xt[static_cast<std::size_t>(pivot)] += mass;
    dist2 += mass * mass;

    ShiftResult res{SimplexPoint(std::move(xt))};
    res.pivot = pivot;
    res.moved_mass = mass;
    res.shift_dist2 = dist2;
    res.estimate = est;
    return res;
}

namespace {

ShiftResult noop_shift(const SimplexPoint& x, double f_x, ActiveSetEstimate est) {
    ShiftResult res{x};
    res.pivot = -1;
    res.moved_mass = 0.0;
    res.shift_dist2 = 0.0;
    res.f_tilde = f_x;
    res.estimate = std::move(est);
    return res;
}

}  // namespace

std::pair<ShiftResult, ActiveSetConfig> shift_with_epsilon_control(const SimplexPoint& x,
                                                                   double f_x,
                                                                   const Objective& obj,
                                                                   ActiveSetConfig cfg,
                                                                   const Vec* grad) {
    cfg.validate();
    Vec g_local;
    if (!grad) {
        g_local = obj.gradient(x.coords());
        grad = &g_local;
    }
    const double cl = cfg.decrease_c * obj.lipschitz();

    for (int attempt = 0; attempt <= cfg.max_shrinks_per_iter; ++attempt) {
        ActiveSetEstimate est = estimate(x, *grad, cfg.epsilon);

        ShiftResult res{x};
        bool have_pivot = true;
        try {
            res = shift_to_tilde(x, est);
        } catch (const std::runtime_error&) {
            have_pivot = false;  // numerically stationary: converged for this step
        }
        if (!have_pivot) {
            // x stays put, so the estimate handed downstream must not claim
            // active coordinates that still carry mass
            est.active.clear();
            est.nonactive = full_index_set(x.dim());
            res = noop_shift(x, f_x, std::move(est));
            res.shrinks_used = attempt;
            return {std::move(res), cfg};
        }

        const double f_tilde = (res.moved_mass == 0.0) ? f_x : obj.value(res.x_tilde.coords());
        if (!std::isfinite(f_tilde)) throw std::runtime_error("objective overflow");

        if (f_tilde - f_x <= -cl * res.shift_dist2 + 1e-14) {
            res.decrease_ok = true;
            res.shrinks_used = attempt;
            res.f_tilde = f_tilde;
            return {std::move(res), cfg};
        }
        cfg.epsilon *= cfg.shrink;
    }

    // shrink budget exhausted: stay put and report failure; the trivial
    // estimate keeps downstream direction computations on the full face
    ActiveSetEstimate trivial = estimate(x, *grad, cfg.epsilon);
    trivial.active.clear();
    trivial.nonactive = full_index_set(x.dim());
    ShiftResult res = noop_shift(x, f_x, std::move(trivial));
    res.decrease_ok = false;
    res.shrinks_used = cfg.max_shrinks_per_iter;
    return {std::move(res), cfg};
}

}  // namespace simplexopt
