#ifndef SIMPLEXOPT_LINE_SEARCH_HPP
#define SIMPLEXOPT_LINE_SEARCH_HPP

#include "simplexopt/direction.hpp"
#include "simplexopt/objective.hpp"
#include "simplexopt/simplex.hpp"

namespace simplexopt {

struct LineSearchConfig {
    double backtrack = 0.5;  // delta
    double slope = 1e-4;     // gamma
    int max_backtracks = 100;

    void validate() const;
};

struct ArmijoResult {
    double alpha = 0.0;
    double f_new = 0.0;
    int evals = 0;
};

/// Backtracking line search starting from alpha_max: accepts the first alpha
/// with f(x + alpha d) <= f(x) + slope * alpha * dir_deriv. Requires a descent
/// direction; throws "line search failure" past max_backtracks, which signals
/// an inconsistent gradient or directional derivative.
ArmijoResult armijo(const Objective& obj, const SimplexPoint& x_tilde, double f_x_tilde,
                    const Direction& dir, const LineSearchConfig& cfg);

/// Minimizer of the 1-D restriction for constant-Hessian objectives:
/// -dir_deriv / (d'Hd) clamped to (0, alpha_max]; alpha_max when the
/// restriction is linear or concave.
double exact_quadratic(const Objective& obj, const SimplexPoint& x_tilde, const Direction& dir);

}  // namespace simplexopt

#endif
