#ifndef SIMPLEXOPT_SOLVER_HPP
#define SIMPLEXOPT_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "simplexopt/active_set.hpp"
#include "simplexopt/direction.hpp"
#include "simplexopt/line_search.hpp"
#include "simplexopt/objective.hpp"

namespace simplexopt {

enum class LineSearchRule { Armijo, ExactQuadratic };

enum class SolveStatus { Converged, MaxIterations, LineSearchFailure };

const char* status_name(SolveStatus s);

struct SolverConfig {
    DirectionRule rule = DirectionRule::AFW;
    bool active_set_enabled = true;
    LineSearchRule line_search = LineSearchRule::Armijo;
    double tol = 1e-6;
    int max_iterations = 0;  // 0 means the problem dimension
    ActiveSetConfig as;
    LineSearchConfig ls;
    PGConfig pg;
    std::uint64_t seed = 0;
    bool record_active_sets = false;
};

struct IterationRecord {
    int k = 0;
    double f = 0.0;    // objective at the iterate entering the iteration
    double gap = 0.0;  // stationarity gap at that iterate
    int n_active = 0;  // size of the accepted active estimate
    double epsilon = 0.0;
    double alpha = 0.0;
    StepKind step = StepKind::Zero;
    bool drop_step = false;
    double elapsed_s = 0.0;
    int evals = 0;  // objective evaluations spent in the line search
};

struct SolveResult {
    explicit SolveResult(SimplexPoint x) : x_final(std::move(x)) {}

    SimplexPoint x_final;
    double f_final = 0.0;
    double gap_final = 0.0;
    SolveStatus status = SolveStatus::MaxIterations;
    std::vector<IterationRecord> trace;
    IndexSet final_active_set;  // estimate at the final point, final epsilon
    std::vector<IndexSet> active_set_trace;  // filled when record_active_sets
};

/// Two-phase iteration: (1) when the active set is enabled, zero the
/// estimated-active variables under the adaptive-epsilon decrease control;
/// (2) move along the configured direction on the nonactive face with the
/// configured line search. Stops at stationarity gap <= tol or after
/// max_iterations. With the active set disabled this is the plain FW / AFW /
/// PG loop on the full simplex.
SolveResult solve(const Objective& obj, const SimplexPoint& x0, const SolverConfig& cfg);

/// An iteration is a drop step when an away step takes its full stepsize
/// alpha_max < 1, zeroing one more component.
bool classify_drop_step(int prev_support_size, double alpha, double alpha_max, StepKind kind);

}  // namespace simplexopt

#endif
