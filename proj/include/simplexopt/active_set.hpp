#ifndef SIMPLEXOPT_ACTIVE_SET_HPP
#define SIMPLEXOPT_ACTIVE_SET_HPP

#include <utility>

#include "simplexopt/objective.hpp"
#include "simplexopt/simplex.hpp"

namespace simplexopt {

struct ActiveSetConfig {
    double epsilon = 1e-1;   // current estimate parameter
    double epsilon0 = 1e-1;  // initial value
    double decrease_c = 1e-6;
    double shrink = 0.5;
    int max_shrinks_per_iter = 50;

    void validate() const;
};

/// Closed-form KKT multiplier estimates at a feasible point:
/// lambda = g'x and mu_i = g_i - lambda.
struct MultiplierValues {
    double lambda = 0.0;
    Vec mu;
};

/// Index partition into estimated-active A = {i : x_i <= epsilon * mu_i(x)}
/// and its complement N, together with the gradient-minimizer set J (all ties).
struct ActiveSetEstimate {
    IndexSet active;
    IndexSet nonactive;
    IndexSet grad_minimizers;
    MultiplierValues mult;
};

/// Outcome of zeroing the estimated-active variables and piling their mass
/// onto a gradient-minimizing nonactive pivot.
struct ShiftResult {
    explicit ShiftResult(SimplexPoint xt) : x_tilde(std::move(xt)) {}

    SimplexPoint x_tilde;
    int pivot = -1;  // -1 when nothing moved and no pivot was needed
    double moved_mass = 0.0;
    double shift_dist2 = 0.0;  // |x_tilde - x|^2
    bool decrease_ok = true;
    int shrinks_used = 0;
    double f_tilde = 0.0;  // filled by shift_with_epsilon_control
    ActiveSetEstimate estimate;
};

MultiplierValues multipliers(const SimplexPoint& x, const Vec& g);

ActiveSetEstimate estimate(const SimplexPoint& x, const Vec& g, double epsilon);

/// Builds x_tilde from the full estimated-active set: zeroes A, adds the
/// removed mass to the smallest index in N ∩ J. Throws "no pivot" when
/// N ∩ J is empty, which can only happen at numerically stationary points.
ShiftResult shift_to_tilde(const SimplexPoint& x, const ActiveSetEstimate& est);

/// Adaptive epsilon controller: estimates with the current epsilon, builds
/// x_tilde and accepts it when
///     f(x_tilde) - f(x) <= -C * L * |x_tilde - x|^2  (+1e-14 slack),
/// otherwise shrinks epsilon and retries. The accepted epsilon is returned in
/// the updated config and never grows back. On shrink exhaustion the result is
/// a no-op shift with decrease_ok = false; when N ∩ J is empty the point is
/// treated as converged for this step (no-op shift, decrease_ok = true).
/// `grad` optionally supplies the already-computed gradient at x.
std::pair<ShiftResult, ActiveSetConfig> shift_with_epsilon_control(const SimplexPoint& x,
                                                                   double f_x,
                                                                   const Objective& obj,
                                                                   ActiveSetConfig cfg,
                                                                   const Vec* grad = nullptr);

}  // namespace simplexopt

#endif
