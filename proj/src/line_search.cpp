#include "simplexopt/line_search.hpp"

#include <cmath>
#include <stdexcept>

namespace simplexopt {

void LineSearchConfig::validate() const {
    if (!(backtrack > 0.0) || !(backtrack < 1.0))
        throw std::invalid_argument("line-search config: backtrack factor must lie in (0,1)");
    if (!(slope > 0.0) || !(slope < 1.0))
        throw std::invalid_argument("line-search config: slope must lie in (0,1)");
    if (max_backtracks < 1)
        throw std::invalid_argument("line-search config: max_backtracks must be >= 1");
}

ArmijoResult armijo(const Objective& obj, const SimplexPoint& x_tilde, double f_x_tilde,
                    const Direction& dir, const LineSearchConfig& cfg) {
    cfg.validate();
    if (!(dir.dir_deriv < 0.0))
        throw std::invalid_argument("armijo: requires a descent direction");

    const Vec& base = x_tilde.coords();
    Vec trial(base.size());
    double alpha = dir.alpha_max;
    ArmijoResult res;
    for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
        for (std::size_t i = 0; i < base.size(); ++i) trial[i] = base[i] + alpha * dir.d[i];
        const double f_trial = obj.value(trial);
        ++res.evals;
        if (f_trial <= f_x_tilde + cfg.slope * alpha * dir.dir_deriv) {
            res.alpha = alpha;
            res.f_new = f_trial;
            return res;
        }
        alpha *= cfg.backtrack;
    }
    throw std::runtime_error("line search failure");
}

double exact_quadratic(const Objective& obj, const SimplexPoint& x_tilde, const Direction& dir) {
    if (!(dir.dir_deriv < 0.0))
        throw std::invalid_argument("exact_quadratic: requires a descent direction");
    if (dir.d.size() != x_tilde.coords().size())
        throw std::invalid_argument("exact_quadratic: dimension mismatch");

    const auto kappa = obj.curvature_along(dir.d);
    if (!kappa.has_value())
        throw std::invalid_argument("exact_quadratic: objective has no constant Hessian");

    if (*kappa > 0.0) {
        const double unconstrained = -dir.dir_deriv / *kappa;
        return std::min(unconstrained, dir.alpha_max);
    }
    // concave or linear restriction with negative slope: far end of the segment
    return dir.alpha_max;
}

}  // namespace simplexopt
