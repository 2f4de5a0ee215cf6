#include "simplexopt/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace simplexopt {

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

IndexSet full_index_set(int n) {
    IndexSet idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

FaceIndexSet::FaceIndexSet(IndexSet indices, int n) : indices_(std::move(indices)), n_(n) {
    if (indices_.empty()) throw std::invalid_argument("empty face");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0 || indices_[i] >= n_)
            throw std::invalid_argument("face index out of range");
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw std::invalid_argument("face indices must be strictly increasing");
    }
}

SimplexPoint::SimplexPoint(Vec coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("simplex point needs dimension >= 1");
    double sum = 0.0;
    for (double& c : coords_) {
        if (!std::isfinite(c)) throw std::invalid_argument("simplex point has non-finite entry");
        if (c < 0.0) {
            if (c < -kClampBudget) throw std::invalid_argument("simplex point has negative entry");
            c = 0.0;
        }
        sum += c;
    }
    if (std::fabs(sum - 1.0) > kRenormBudget)
        throw std::invalid_argument("simplex point sum drifted beyond renormalization budget");
    // leave coordinates untouched when already within the invariant, so that
    // constructing from a valid point is bitwise the identity
    if (std::fabs(sum - 1.0) > kSumTolerance) {
        for (double& c : coords_) c /= sum;
        // absorb the residual rounding error into the largest coordinate
        double resid = std::accumulate(coords_.begin(), coords_.end(), 0.0) - 1.0;
        if (resid != 0.0) {
            auto it = std::max_element(coords_.begin(), coords_.end());
            *it -= resid;
            if (*it < 0.0) *it = 0.0;
        }
    }
}

SimplexPoint SimplexPoint::vertex(int n, int i) {
    Vec v(static_cast<std::size_t>(n), 0.0);
    v.at(static_cast<std::size_t>(i)) = 1.0;
    return SimplexPoint(std::move(v));
}

SimplexPoint SimplexPoint::uniform(int n) {
    Vec v(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
    return SimplexPoint(std::move(v));
}

int SimplexPoint::support_size() const {
    int s = 0;
    for (double c : coords_) s += (c > 0.0) ? 1 : 0;
    return s;
}

SimplexPoint project_simplex(const Vec& y, const FaceIndexSet& face) {
    if (face.ambient_dim() != static_cast<int>(y.size()))
        throw std::invalid_argument("project_simplex: dimension mismatch");

    // fast path: y already lies on the face, so the projection is the identity
    // (up to zeroing off-face entries); keeps the operator bitwise idempotent
    {
        double sum = 0.0;
        double lo = 0.0;
        for (int i : face.indices()) {
            const double v = y[static_cast<std::size_t>(i)];
            sum += v;
            lo = std::min(lo, v);
        }
        if (lo >= 0.0 && std::fabs(sum - 1.0) <= kSumTolerance) {
            Vec p(y.size(), 0.0);
            for (int i : face.indices()) p[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
            return SimplexPoint(std::move(p));
        }
    }

    // gather face coordinates, sort descending, locate the exact threshold tau
    Vec u;
    u.reserve(face.size());
    for (int i : face.indices()) u.push_back(y[static_cast<std::size_t>(i)]);
    std::sort(u.begin(), u.end(), std::greater<double>());

    double prefix = 0.0;
    double tau = 0.0;
    int active = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        prefix += u[k];
        const double cand = (prefix - 1.0) / static_cast<double>(k + 1);
        if (u[k] - cand > 0.0) {
            tau = cand;
            active = static_cast<int>(k + 1);
        }
    }
    if (active == 0) {
        // only reachable when the entries are so large that u - 1 rounds to u;
        // fall back to the full-support threshold
        tau = (prefix - 1.0) / static_cast<double>(u.size());
    }

    Vec p(y.size(), 0.0);
    for (int i : face.indices()) {
        const double v = y[static_cast<std::size_t>(i)] - tau;
        p[static_cast<std::size_t>(i)] = (v > 0.0) ? v : 0.0;
    }
    return SimplexPoint(std::move(p));
}

double stationarity_gap(const SimplexPoint& x, const Vec& g) {
    if (g.size() != x.coords().size())
        throw std::invalid_argument("stationarity_gap: dimension mismatch");
    const double gx = dot(g, x.coords());
    const double gmin = *std::min_element(g.begin(), g.end());
    return std::max(0.0, gx - gmin);
}

double stationarity_gap_on_face(const SimplexPoint& x, const Vec& g, const FaceIndexSet& face) {
    if (g.size() != x.coords().size())
        throw std::invalid_argument("stationarity_gap: dimension mismatch");
    const double gx = dot(g, x.coords());
    double gmin = std::numeric_limits<double>::infinity();
    for (int i : face.indices()) gmin = std::min(gmin, g[static_cast<std::size_t>(i)]);
    return std::max(0.0, gx - gmin);
}

bool is_feasible(const Vec& y, double tol) {
    if (y.empty()) return false;
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (double c : y) {
        if (!std::isfinite(c)) return false;
        sum += c;
        lo = std::min(lo, c);
    }
    return lo >= -tol && std::fabs(sum - 1.0) <= tol;
}

}  // namespace simplexopt
