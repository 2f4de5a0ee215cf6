#ifndef SIMPLEXOPT_DIRECTION_HPP
#define SIMPLEXOPT_DIRECTION_HPP

#include <string>

#include "simplexopt/simplex.hpp"

namespace simplexopt {

enum class DirectionRule { FW, AFW, PG };

enum class StepKind { FW, AFWToward, AFWAway, PG, Zero };

const char* step_kind_name(StepKind k);

struct PGConfig {
    double gradient_scale = 1.0;  // the fixed s > 0 in x - s*grad

    void validate() const;
};

/// Search direction on the face spanned by the nonactive estimate:
/// zero on the active estimate, feasible up to alpha_max from x_tilde.
struct Direction {
    Vec d;
    StepKind kind = StepKind::Zero;
    double dir_deriv = 0.0;  // gradient(x_tilde) . d
    double alpha_max = 1.0;
    int pivot = -1;  // toward vertex for FW, away vertex for AFW-away
};

/// d = e_i - x_tilde restricted to the face, i the smallest gradient
/// minimizer on the face. alpha_max = 1.
Direction fw_direction(const SimplexPoint& x_tilde, const Vec& g, const FaceIndexSet& face);

/// Picks the better of the toward direction e_i - x_tilde and the away
/// direction x_tilde - e_j (j the worst supported vertex on the face);
/// ties go toward. Away steps have alpha_max = x_j / (1 - x_j).
Direction afw_direction(const SimplexPoint& x_tilde, const Vec& g, const FaceIndexSet& face);

/// d = P(x_tilde - s*g) - x_tilde with the projection taken on the face.
/// Satisfies g.d <= -|d|^2 / s.
Direction pg_direction(const SimplexPoint& x_tilde, const Vec& g, const FaceIndexSet& face,
                       const PGConfig& cfg);

}  // namespace simplexopt

#endif
