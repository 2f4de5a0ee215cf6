#include "simplexopt/objective.hpp"

#include <cmath>
#include <stdexcept>

#include "simplexopt/rng.hpp"

namespace simplexopt {

namespace {

constexpr double kLipschitzFloor = 1e-12;
constexpr double kUpperBias = 1.01;

void require_finite(const Vec& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

}  // namespace

double power_method_norm(const std::function<void(const Vec&, Vec&)>& apply, int n,
                         std::uint64_t seed, int max_iters, double rtol) {
    Rng rng(mix_seed(seed, 0x509e));
    Vec v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng.normal();
    double nv = std::sqrt(norm2(v));
    if (nv == 0.0) return 0.0;
    for (double& x : v) x /= nv;

    Vec w(static_cast<std::size_t>(n));
    double est = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        apply(v, w);
        const double nw = std::sqrt(norm2(w));
        if (nw == 0.0) return 0.0;
        const double prev = est;
        est = nw;
        if (it > 0 && std::fabs(est - prev) <= rtol * std::max(1.0, est)) break;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[i] / nw;
    }
    return est;
}

double estimate_L(const Objective& obj, std::uint64_t seed) {
    const int n = obj.dim();
    if (auto* quad = dynamic_cast<const QuadraticObjective*>(&obj)) {
        const double nrm =
            power_method_norm([&](const Vec& x, Vec& y) { quad->multiply(x, y); }, n, seed);
        return std::max(kUpperBias * nrm, kLipschitzFloor);
    }
    if (auto* cheb = dynamic_cast<const ChebyshevObjective*>(&obj)) {
        Vec w(static_cast<std::size_t>(cheb->sample_dim()));
        const double nrm = power_method_norm(
            [&](const Vec& x, Vec& y) {
                cheb->apply(x, w);
                cheb->apply_transposed(w, y);
                for (double& g : y) g *= 2.0;
            },
            n, seed);
        return std::max(kUpperBias * nrm, kLipschitzFloor);
    }
    return obj.lipschitz();
}

// ---------------------------------------------------------------------------
// QuadraticObjective

QuadraticObjective::QuadraticObjective(int n, Vec q_rowmajor, Vec c, std::uint64_t seed)
    : n_(n), q_(std::move(q_rowmajor)), c_(std::move(c)), lipschitz_(0.0) {
    if (n_ < 1 || q_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) ||
        c_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("quadratic objective: dimension mismatch");
    require_finite(q_, "quadratic objective Q");
    require_finite(c_, "quadratic objective c");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::fabs(q_[static_cast<std::size_t>(i) * n_ + j] -
                          q_[static_cast<std::size_t>(j) * n_ + i]) > 1e-12)
                throw std::invalid_argument("quadratic objective: Q not symmetric");
    lipschitz_ = estimate_L(*this, seed);
}

QuadraticObjective::QuadraticObjective(int n, Vec q_rowmajor, Vec c, double lipschitz_L,
                                       std::uint64_t /*seed*/)
    : n_(n), q_(std::move(q_rowmajor)), c_(std::move(c)), lipschitz_(lipschitz_L) {
    if (n_ < 1 || q_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) ||
        c_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("quadratic objective: dimension mismatch");
    require_finite(q_, "quadratic objective Q");
    require_finite(c_, "quadratic objective c");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::fabs(q_[static_cast<std::size_t>(i) * n_ + j] -
                          q_[static_cast<std::size_t>(j) * n_ + i]) > 1e-12)
                throw std::invalid_argument("quadratic objective: Q not symmetric");
    if (!(lipschitz_L > 0.0) || !std::isfinite(lipschitz_L))
        throw std::invalid_argument("quadratic objective: Lipschitz constant must be positive");
}

void QuadraticObjective::multiply(const Vec& x, Vec& out) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("quadratic objective: dimension mismatch");
    out.assign(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        const double* row = &q_[static_cast<std::size_t>(i) * n_];
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += row[j] * x[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
}

double QuadraticObjective::value(const Vec& x) const {
    Vec qx;
    multiply(x, qx);
    return 0.5 * dot(x, qx) - dot(c_, x);
}

void QuadraticObjective::gradient(const Vec& x, Vec& g) const {
    multiply(x, g);
    for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(i)] -= c_[static_cast<std::size_t>(i)];
}

double QuadraticObjective::value_and_gradient(const Vec& x, Vec& g) const {
    multiply(x, g);
    const double quad = dot(x, g);
    double lin = dot(c_, x);
    for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(i)] -= c_[static_cast<std::size_t>(i)];
    return 0.5 * quad - lin;
}

std::optional<double> QuadraticObjective::curvature_along(const Vec& d) const {
    Vec qd;
    multiply(d, qd);
    return dot(d, qd);
}

// ---------------------------------------------------------------------------
// ChebyshevObjective

Vec ChebyshevObjective::column_norms_squared(int m, int n, const Vec& a) {
    Vec b(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int r = 0; r < m; ++r) {
            const double v = a[static_cast<std::size_t>(r) * n + i];
            s += v * v;
        }
        b[static_cast<std::size_t>(i)] = s;
    }
    return b;
}

ChebyshevObjective::ChebyshevObjective(int m, int n, Vec a_rowmajor, Vec b, std::uint64_t seed)
    : m_(m), n_(n), a_(std::move(a_rowmajor)), b_(std::move(b)), lipschitz_(0.0) {
    if (m_ < 1 || n_ < 1 ||
        a_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_) ||
        b_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("chebyshev objective: dimension mismatch");
    require_finite(a_, "chebyshev objective A");
    require_finite(b_, "chebyshev objective b");
    const Vec expected = column_norms_squared(m_, n_, a_);
    for (int i = 0; i < n_; ++i)
        if (std::fabs(b_[static_cast<std::size_t>(i)] - expected[static_cast<std::size_t>(i)]) >
            1e-10)
            throw std::invalid_argument("chebyshev objective: b is not the squared column norms");
    lipschitz_ = estimate_L(*this, seed);
}

ChebyshevObjective::ChebyshevObjective(int m, int n, Vec a_rowmajor, std::uint64_t seed)
    : m_(m), n_(n), a_(std::move(a_rowmajor)), lipschitz_(0.0) {
    if (m_ < 1 || n_ < 1 ||
        a_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_))
        throw std::invalid_argument("chebyshev objective: dimension mismatch");
    require_finite(a_, "chebyshev objective A");
    b_ = column_norms_squared(m_, n_, a_);
    lipschitz_ = estimate_L(*this, seed);
}

void ChebyshevObjective::apply(const Vec& x, Vec& w) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("chebyshev objective: dimension mismatch");
    w.assign(static_cast<std::size_t>(m_), 0.0);
    for (int r = 0; r < m_; ++r) {
        const double* row = &a_[static_cast<std::size_t>(r) * n_];
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += row[i] * x[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(r)] = s;
    }
}

void ChebyshevObjective::apply_transposed(const Vec& w, Vec& g) const {
    g.assign(static_cast<std::size_t>(n_), 0.0);
    for (int r = 0; r < m_; ++r) {
        const double* row = &a_[static_cast<std::size_t>(r) * n_];
        const double wr = w[static_cast<std::size_t>(r)];
        for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(i)] += row[i] * wr;
    }
}

double ChebyshevObjective::value(const Vec& x) const {
    Vec w;
    apply(x, w);
    return norm2(w) - dot(b_, x);
}

void ChebyshevObjective::gradient(const Vec& x, Vec& g) const {
    Vec w;
    apply(x, w);
    apply_transposed(w, g);
    for (int i = 0; i < n_; ++i)
        g[static_cast<std::size_t>(i)] =
            2.0 * g[static_cast<std::size_t>(i)] - b_[static_cast<std::size_t>(i)];
}

double ChebyshevObjective::value_and_gradient(const Vec& x, Vec& g) const {
    Vec w;
    apply(x, w);
    const double val = norm2(w) - dot(b_, x);
    apply_transposed(w, g);
    for (int i = 0; i < n_; ++i)
        g[static_cast<std::size_t>(i)] =
            2.0 * g[static_cast<std::size_t>(i)] - b_[static_cast<std::size_t>(i)];
    return val;
}

std::optional<double> ChebyshevObjective::curvature_along(const Vec& d) const {
    Vec w;
    apply(d, w);
    return 2.0 * norm2(w);
}

// ---------------------------------------------------------------------------

double check_gradient(const Objective& obj, const SimplexPoint& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("check_gradient: h must be positive");
    const Vec& base = x.coords();
    Vec g = obj.gradient(base);
    Vec pt = base;
    double worst = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        pt[i] = base[i] + h;
        const double fp = obj.value(pt);
        pt[i] = base[i] - h;
        const double fm = obj.value(pt);
        pt[i] = base[i];
        const double fd = (fp - fm) / (2.0 * h);
        const double rel = std::fabs(fd - g[i]) / std::max(1.0, std::fabs(g[i]));
        worst = std::max(worst, rel);
    }
    return worst;
}

}  // namespace simplexopt
