#ifndef SIMPLEXOPT_SIMPLEX_HPP
#define SIMPLEXOPT_SIMPLEX_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace simplexopt {

using Vec = std::vector<double>;
using IndexSet = std::vector<int>;  // sorted, distinct

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);  // squared Euclidean norm

IndexSet full_index_set(int n);

/// Coordinate subset identifying a face of the unit simplex
/// (points whose support lies inside the subset).
class FaceIndexSet {
public:
    // indices must be non-empty, strictly increasing, all in [0, n)
    FaceIndexSet(IndexSet indices, int n);
    static FaceIndexSet full(int n) { return FaceIndexSet(full_index_set(n), n); }

    const IndexSet& indices() const { return indices_; }
    int ambient_dim() const { return n_; }
    std::size_t size() const { return indices_.size(); }

private:
    IndexSet indices_;
    int n_;
};

/// A point of the unit simplex: componentwise nonnegative, coordinates sum to 1.
///
/// Construction tolerates floating-point drift: components in [-1e-12, 0) are
/// clamped to zero and a total-sum deviation of at most 1e-8 is renormalized
/// away. Anything worse throws, so genuine bugs are not papered over.
class SimplexPoint {
public:
    explicit SimplexPoint(Vec coords);

    static SimplexPoint vertex(int n, int i);
    static SimplexPoint uniform(int n);

    const Vec& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    int dim() const { return static_cast<int>(coords_.size()); }
    int support_size() const;

private:
    Vec coords_;
};

inline constexpr double kSumTolerance = 1e-12;
inline constexpr double kRenormBudget = 1e-8;
inline constexpr double kClampBudget = 1e-12;

/// Euclidean projection of y onto the face of the unit simplex spanned by
/// `face`. Components outside the face are exactly zero. Sort-based exact
/// threshold method, O(m log m) in the face size.
SimplexPoint project_simplex(const Vec& y, const FaceIndexSet& face);

/// First-order stationarity violation max{0, g'x - min_i g_i}. Zero exactly at
/// points satisfying the KKT conditions of the simplex-constrained problem.
double stationarity_gap(const SimplexPoint& x, const Vec& g);

/// Same measure restricted to a face (x must be supported on the face).
double stationarity_gap_on_face(const SimplexPoint& x, const Vec& g, const FaceIndexSet& face);

bool is_feasible(const Vec& y, double tol);

}  // namespace simplexopt

#endif
