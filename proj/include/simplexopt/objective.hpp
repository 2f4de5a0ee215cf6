#ifndef SIMPLEXOPT_OBJECTIVE_HPP
#define SIMPLEXOPT_OBJECTIVE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "simplexopt/simplex.hpp"

namespace simplexopt {

/// Evaluation contract for objectives minimized over the simplex.
/// Implementations must be immutable after construction; value/gradient
/// calls are reentrant.
class Objective {
public:
    virtual ~Objective() = default;

    virtual int dim() const = 0;
    virtual double value(const Vec& x) const = 0;
    virtual void gradient(const Vec& x, Vec& g) const = 0;

    Vec gradient(const Vec& x) const {
        Vec g;
        gradient(x, g);
        return g;
    }

    virtual double value_and_gradient(const Vec& x, Vec& g) const {
        gradient(x, g);
        return value(x);
    }

    /// Upper bound on the Lipschitz constant of the gradient over the simplex.
    virtual double lipschitz() const = 0;

    /// d'Hd for objectives with a constant Hessian H; nullopt otherwise.
    /// Exact line search is only available when this is implemented.
    virtual std::optional<double> curvature_along(const Vec& /*d*/) const {
        return std::nullopt;
    }
};

/// f(x) = 1/2 x'Qx - c'x with dense row-major symmetric Q.
class QuadraticObjective final : public Objective {
public:
    // Q given row-major, length n*n, symmetric to 1e-12. The Lipschitz
    // constant is estimated by power iteration seeded with `seed`.
    QuadraticObjective(int n, Vec q_rowmajor, Vec c, std::uint64_t seed = 0);
    // Same but with a caller-supplied Lipschitz constant.
    QuadraticObjective(int n, Vec q_rowmajor, Vec c, double lipschitz_L, std::uint64_t seed);

    using Objective::gradient;

    int dim() const override { return n_; }
    double value(const Vec& x) const override;
    void gradient(const Vec& x, Vec& g) const override;
    double value_and_gradient(const Vec& x, Vec& g) const override;
    double lipschitz() const override { return lipschitz_; }
    std::optional<double> curvature_along(const Vec& d) const override;

    const Vec& q() const { return q_; }
    const Vec& linear_term() const { return c_; }

    void multiply(const Vec& x, Vec& out) const;  // out = Qx

private:
    int n_;
    Vec q_;  // row-major n*n
    Vec c_;
    double lipschitz_;
};

/// f(x) = |Ax|^2 - b'x where the columns of A are sample points and
/// b_i = |column i|^2. Evaluation is matrix-free: A'A is never formed.
class ChebyshevObjective final : public Objective {
public:
    // A given row-major with m rows and n columns; b checked against the
    // squared column norms to 1e-10.
    ChebyshevObjective(int m, int n, Vec a_rowmajor, Vec b, std::uint64_t seed = 0);
    // b computed from A.
    ChebyshevObjective(int m, int n, Vec a_rowmajor, std::uint64_t seed = 0);

    using Objective::gradient;

    int dim() const override { return n_; }
    int sample_dim() const { return m_; }
    double value(const Vec& x) const override;
    void gradient(const Vec& x, Vec& g) const override;
    double value_and_gradient(const Vec& x, Vec& g) const override;
    double lipschitz() const override { return lipschitz_; }
    std::optional<double> curvature_along(const Vec& d) const override;

    const Vec& a() const { return a_; }
    const Vec& b() const { return b_; }

    void apply(const Vec& x, Vec& w) const;             // w = Ax (length m)
    void apply_transposed(const Vec& w, Vec& g) const;  // g = A'w (length n)

private:
    static Vec column_norms_squared(int m, int n, const Vec& a);

    int m_;
    int n_;
    Vec a_;  // row-major m*n
    Vec b_;
    double lipschitz_;
};

/// Largest singular value of a symmetric operator by power iteration:
/// at most `max_iters` products, stopping early when the estimate moves by
/// less than `rtol` in relative terms.
double power_method_norm(const std::function<void(const Vec&, Vec&)>& apply, int n,
                         std::uint64_t seed, int max_iters = 100, double rtol = 1e-8);

/// Gradient-Lipschitz estimate: power-iteration spectral norm scaled by 1.01,
/// floored at 1e-12 so downstream epsilon bounds never divide by zero.
/// For objectives without a known Hessian this echoes obj.lipschitz().
double estimate_L(const Objective& obj, std::uint64_t seed = 0);

/// Max componentwise relative error between the analytic gradient and central
/// finite differences with step h.
double check_gradient(const Objective& obj, const SimplexPoint& x, double h);

}  // namespace simplexopt

#endif
