#include "simplexopt/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "simplexopt/active_set.hpp"
#include "simplexopt/rng.hpp"

namespace simplexopt {

void QuadGenConfig::validate() const {
    if (n < 1) throw std::invalid_argument("quadratic generator: n must be >= 1");
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::invalid_argument("quadratic generator: rho must lie in (0,1)");
    if (!(theta > 0.0) || theta > 1.0)
        throw std::invalid_argument("quadratic generator: theta must lie in (0,1]");
    const long t = std::lround(rho * n);
    if (t < 1 || t >= n)
        throw std::invalid_argument("quadratic generator: round(rho*n) must lie in [1, n)");
    if (!(margin_lo >= 0.0) || !(margin_hi > margin_lo))
        throw std::invalid_argument("quadratic generator: bad margin range");
    if (max_retries < 1) throw std::invalid_argument("quadratic generator: max_retries >= 1");
}

void ChebGenConfig::validate() const {
    if (n < 1 || m < 1) throw std::invalid_argument("chebyshev generator: n and m must be >= 1");
}

namespace {

// distinct indices drawn without replacement, returned sorted
IndexSet draw_support(int n, int t, Rng& rng) {
    IndexSet pool = full_index_set(n);
    for (int i = 0; i < t; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(t));
    std::sort(pool.begin(), pool.end());
    return pool;
}

GeneratedQuadratic build_candidate(const QuadGenConfig& cfg, std::uint64_t sub_seed) {
    const int n = cfg.n;
    const std::size_t nn = static_cast<std::size_t>(n);
    Rng rng(sub_seed);

    // Q = theta * (B'B/n + I) + (1-theta) * S, assembled exactly symmetric
    Vec b_mat(nn * nn);
    for (double& v : b_mat) v = rng.normal();
    Vec q(nn * nn, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += b_mat[static_cast<std::size_t>(k) * nn + static_cast<std::size_t>(i)] *
                     b_mat[static_cast<std::size_t>(k) * nn + static_cast<std::size_t>(j)];
            double v = cfg.theta * (s / n + (i == j ? 1.0 : 0.0));
            q[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] = v;
            q[static_cast<std::size_t>(j) * nn + static_cast<std::size_t>(i)] = v;
        }
    }
    if (cfg.theta < 1.0) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const double s = (1.0 - cfg.theta) * rng.uniform(-1.0, 1.0);
                q[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] += s;
                if (j > i) q[static_cast<std::size_t>(j) * nn + static_cast<std::size_t>(i)] += s;
            }
        }
    }

    // planted point: T nonzeros on a random support, normalized uniform values
    const int t = static_cast<int>(std::lround(cfg.rho * n));
    const IndexSet support = draw_support(n, t, rng);
    Vec xs(nn, 0.0);
    double total = 0.0;
    for (int i : support) {
        const double v = rng.uniform();
        xs[static_cast<std::size_t>(i)] = v;
        total += v;
    }
    if (total <= 0.0) throw std::runtime_error("quadratic generator: degenerate planted point");
    for (int i : support) xs[static_cast<std::size_t>(i)] /= total;

    // multipliers at the planted point: 1 on the support, 1 + margin off it
    Vec r(nn, 1.0);
    IndexSet zero_set;
    zero_set.reserve(nn - static_cast<std::size_t>(t));
    std::size_t si = 0;
    for (int i = 0; i < n; ++i) {
        if (si < support.size() && support[si] == i) {
            ++si;
            continue;
        }
        zero_set.push_back(i);
        r[static_cast<std::size_t>(i)] = 1.0 + rng.uniform(cfg.margin_lo, cfg.margin_hi);
    }

    // c = Q x* - r makes the gradient at x* equal r
    Vec qx(nn, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* row = &q[static_cast<std::size_t>(i) * nn];
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += row[j] * xs[static_cast<std::size_t>(j)];
        qx[static_cast<std::size_t>(i)] = s;
    }
    Vec c(nn);
    for (std::size_t i = 0; i < nn; ++i) c[i] = qx[i] - r[i];

    GeneratedQuadratic out{
        std::make_shared<QuadraticObjective>(n, std::move(q), std::move(c), sub_seed),
        SimplexPoint(std::move(xs)),
        std::move(zero_set),
        support,
        0.0,
        0.0,
        sub_seed};

    // verify the construction numerically
    const Vec g = out.objective->gradient(out.planted.coords());
    out.gap_at_planted = stationarity_gap(out.planted, g);
    const MultiplierValues mv = multipliers(out.planted, g);
    double margin = std::numeric_limits<double>::infinity();
    for (int i : out.planted_zero_set)
        margin = std::min(margin, mv.mu[static_cast<std::size_t>(i)]);
    out.complementarity_margin = out.planted_zero_set.empty() ? 0.0 : margin;
    return out;
}

}  // namespace

GeneratedQuadratic gen_quadratic(const QuadGenConfig& cfg) {
    cfg.validate();
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        GeneratedQuadratic cand =
            build_candidate(cfg, mix_seed(cfg.seed, static_cast<std::uint64_t>(attempt), 0x9d));
        const bool gap_ok = cand.gap_at_planted <= 1e-10;
        const bool margin_ok = cand.planted_zero_set.empty() || cand.complementarity_margin >= 1e-3;
        if (gap_ok && margin_ok) return cand;
    }
    throw std::runtime_error("quadratic generator: verification failed for all sub-seeds");
}

std::shared_ptr<ChebyshevObjective> gen_chebyshev(const ChebGenConfig& cfg) {
    cfg.validate();
    Rng rng(mix_seed(cfg.seed, 0xc4eb));
    const std::size_t mn = static_cast<std::size_t>(cfg.m) * static_cast<std::size_t>(cfg.n);
    Vec a(mn);
    // column by column: each sample point is a contiguous draw
    for (int i = 0; i < cfg.n; ++i)
        for (int row = 0; row < cfg.m; ++row)
            a[static_cast<std::size_t>(row) * static_cast<std::size_t>(cfg.n) +
              static_cast<std::size_t>(i)] = rng.normal();
    return std::make_shared<ChebyshevObjective>(cfg.m, cfg.n, std::move(a), cfg.seed);
}

SimplexPoint random_start(int n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x57a7));
    Vec y(static_cast<std::size_t>(n));
    for (double& v : y) v = rng.uniform();
    return project_simplex(y, FaceIndexSet::full(n));
}

}  // namespace simplexopt
