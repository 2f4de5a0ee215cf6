#ifndef SIMPLEXOPT_GENERATORS_HPP
#define SIMPLEXOPT_GENERATORS_HPP

#include <cstdint>
#include <memory>

#include "simplexopt/objective.hpp"
#include "simplexopt/simplex.hpp"

namespace simplexopt {

struct QuadGenConfig {
    int n = 512;
    double rho = 0.1;    // sparsity: T = round(rho * n) nonzeros in the planted point
    double theta = 0.5;  // weight of the positive-definite part of Q
    std::uint64_t seed = 0;
    // strict-complementarity margin on the planted zero set: mu_i uniform in
    // [margin_lo, margin_hi]
    double margin_lo = 0.0;
    double margin_hi = 1.0;
    int max_retries = 32;

    void validate() const;
};

/// Quadratic instance with a planted stationary point of known support.
struct GeneratedQuadratic {
    std::shared_ptr<QuadraticObjective> objective;
    SimplexPoint planted;
    IndexSet planted_zero_set;
    IndexSet planted_support;
    double gap_at_planted = 0.0;
    double complementarity_margin = 0.0;  // min mu over the zero set
    std::uint64_t sub_seed = 0;           // seed that passed verification
};

/// Builds f(x) = 1/2 x'Qx - c'x with Q = theta*(B'B/n + I) + (1-theta)*S,
/// B standard normal, S symmetric uniform(-1,1), and c = Q x* - r chosen so
/// that the sparse planted point x* is stationary with strict complementarity.
/// Each candidate is verified (gap <= 1e-10, margin >= 1e-3) and regenerated
/// from the next sub-seed on failure.
GeneratedQuadratic gen_quadratic(const QuadGenConfig& cfg);

struct ChebGenConfig {
    int n = 512;  // number of sample points
    int m = 10;   // sample dimension
    std::uint64_t seed = 0;

    void validate() const;
};

/// Smallest-enclosing-ball objective over n standard-normal points in R^m.
std::shared_ptr<ChebyshevObjective> gen_chebyshev(const ChebGenConfig& cfg);

/// Random feasible starting point: Euclidean projection of uniform(0,1) noise.
SimplexPoint random_start(int n, std::uint64_t seed);

}  // namespace simplexopt

#endif
