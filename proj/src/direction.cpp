#include "simplexopt/direction.hpp"

#include <stdexcept>

namespace simplexopt {

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::FW: return "fw";
        case StepKind::AFWToward: return "afw-toward";
        case StepKind::AFWAway: return "afw-away";
        case StepKind::PG: return "pg";
        case StepKind::Zero: return "zero";
    }
    return "?";
}

void PGConfig::validate() const {
    if (!(gradient_scale > 0.0))
        throw std::invalid_argument("pg config: gradient scale must be positive");
}

Direction fw_direction(const SimplexPoint& x_tilde, const Vec& g, const FaceIndexSet& face) {
    if (g.size() != x_tilde.coords().size())
        throw std::invalid_argument("fw_direction: dimension mismatch");

    int toward = face.indices().front();
    for (int i : face.indices())
        if (g[static_cast<std::size_t>(i)] < g[static_cast<std::size_t>(toward)]) toward = i;

    Direction dir;
    dir.d.assign(g.size(), 0.0);
    for (int i : face.indices()) dir.d[static_cast<std::size_t>(i)] = -x_tilde[static_cast<std::size_t>(i)];
    dir.d[static_cast<std::size_t>(toward)] += 1.0;
    dir.kind = StepKind::FW;
    dir.dir_deriv = dot(g, dir.d);
    dir.alpha_max = 1.0;
    dir.pivot = toward;
    return dir;
}

Direction afw_direction(const SimplexPoint& x_tilde, const Vec& g, const FaceIndexSet& face) {
    Direction toward = fw_direction(x_tilde, g, face);
    toward.kind = StepKind::AFWToward;

    // away vertex: worst gradient among the supported face coordinates
    int away = -1;
    for (int i : face.indices()) {
        if (x_tilde[static_cast<std::size_t>(i)] <= 0.0) continue;
        if (away < 0 || g[static_cast<std::size_t>(i)] > g[static_cast<std::size_t>(away)]) away = i;
    }
    if (away < 0) return toward;  // x_tilde not supported on the face; nothing to move away from

    Direction aw;
    aw.d.assign(g.size(), 0.0);
    for (int i : face.indices()) aw.d[static_cast<std::size_t>(i)] = x_tilde[static_cast<std::size_t>(i)];
    aw.d[static_cast<std::size_t>(away)] -= 1.0;
    aw.kind = StepKind::AFWAway;
    aw.dir_deriv = dot(g, aw.d);
    aw.pivot = away;

    // ties select the toward direction
    if (toward.dir_deriv <= aw.dir_deriv) return toward;

    const double xj = x_tilde[static_cast<std::size_t>(away)];
    // xj = 1 makes the away direction vanish and it is never selected with a
    // negative derivative; a unit cap avoids the 0/0
    aw.alpha_max = (xj < 1.0) ? xj / (1.0 - xj) : 1.0;
    return aw;
}

Direction pg_direction(const SimplexPoint& x_tilde, const Vec& g, const FaceIndexSet& face,
                       const PGConfig& cfg) {
    if (g.size() != x_tilde.coords().size())
        throw std::invalid_argument("pg_direction: dimension mismatch");
    cfg.validate();

    Vec y = x_tilde.coords();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= cfg.gradient_scale * g[i];
    const SimplexPoint target = project_simplex(y, face);

    Direction dir;
    dir.d.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) dir.d[i] = target[i] - x_tilde[i];
    dir.kind = StepKind::PG;
    dir.dir_deriv = dot(g, dir.d);
    dir.alpha_max = 1.0;
    return dir;
}

}  // namespace simplexopt
