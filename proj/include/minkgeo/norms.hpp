#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>

#include "minkgeo/fourier.hpp"
#include "minkgeo/sphharm.hpp"
#include "minkgeo/vec.hpp"

namespace minkgeo {

struct GradHess {
    std::array<double, 3> grad{};  // dF, first dim() entries valid
    SymMat half_hess_f2;           // (1/2) Hess(F^2)
};

struct AxiomReport {
    int samples = 0;
    double max_positivity_violation = 0.0;  // max(0, -F(v)/|v|) over samples
    double max_homogeneity_residual = 0.0;  // |F(lv)-|l|F(v)| / F(v)
    double max_euler_residual = 0.0;        // |<dF(v),v> - F(v)| / F(v)
    double min_hessian_eigenvalue = 0.0;    // smallest eigenvalue of (1/2)Hess(F^2) seen
    double max_hessian_violation = 0.0;     // max(0, -lambda_min/lambda_max), relative
    bool pass = false;
};

namespace detail {
class NormImpl;
}

/// A Minkowski norm on R^2 or R^3: smooth away from the origin, absolutely
/// homogeneous, with (1/2)Hess(F^2) positive definite off the origin.
/// Immutable and cheap to copy; all operations are pure.
class MinkowskiNorm {
public:
    static MinkowskiNorm p_norm(double p, int dim);
    static MinkowskiNorm euclidean(int dim) { return p_norm(2.0, dim); }
    /// F(v) = sqrt(v^T A v) with A symmetric positive definite.
    static MinkowskiNorm quadratic(const SymMat& A);
    /// Planar norm from its restriction to the unit circle, rho(theta) > 0.
    /// Even symmetry is enforced by the series type; convexity is audited by
    /// check_axioms, not assumed.
    static MinkowskiNorm custom_s1(EvenFourierSeries rho);
    /// Norm on R^3 from its restriction to the unit sphere. Derivatives use
    /// high-order finite differences of F.
    static MinkowskiNorm custom_s2(EvenSphericalExpansion rho);
    /// Restriction of a 3D norm to the plane spanned by an orthonormal pair.
    static MinkowskiNorm restricted(const MinkowskiNorm& base, Vec3 e1, Vec3 e2);

    int dim() const;
    const std::string& label() const;
    MinkowskiNorm with_label(std::string label) const;

    double evaluate(std::span<const double> v) const;
    double evaluate(Vec2 v) const { return evaluate({&v.x, 2}); }
    double evaluate(Vec3 v) const { return evaluate({&v.x, 3}); }

    /// Gradient of F and (1/2)Hess(F^2) at v != 0. p-norms with a fractional
    /// exponent are singular on the coordinate axes and reject such inputs.
    GradHess gradient_and_hessian(std::span<const double> v) const;
    GradHess gradient_and_hessian(Vec2 v) const { return gradient_and_hessian({&v.x, 2}); }
    GradHess gradient_and_hessian(Vec3 v) const { return gradient_and_hessian({&v.x, 3}); }

    Vec2 gradient2(Vec2 v) const {
        auto gh = gradient_and_hessian(v);
        return {gh.grad[0], gh.grad[1]};
    }

    /// Dual norm F*(xi) = sup { |xi(v)| : F(v) <= 1 }. Closed form for p-norm
    /// and quadratic kinds, golden-section maximization otherwise.
    double dual_evaluate(std::span<const double> xi) const;
    double dual_evaluate(Vec2 xi) const { return dual_evaluate({&xi.x, 2}); }
    double dual_evaluate(Vec3 xi) const { return dual_evaluate({&xi.x, 3}); }

    /// Samples off-axis directions and random scalings; reports the worst
    /// violation of positivity, homogeneity, and Hessian definiteness.
    AxiomReport check_axioms(int n_samples, uint64_t seed) const;

    /// True when derivatives blow up on coordinate hyperplanes (p-norms with
    /// non-even exponent); sampling code keeps away from the axes then.
    bool axis_singular() const;

private:
    explicit MinkowskiNorm(std::shared_ptr<const detail::NormImpl> impl);
    std::shared_ptr<const detail::NormImpl> impl_;
};

/// Parses the norm grammar `p:<float> | quad:<a11>,<a12>,<a22>[,...] |
/// custom:<csv path>`. `dim_hint` picks the dimension where the spec string
/// leaves it open (p-norms).
MinkowskiNorm parse_norm_spec(const std::string& spec, int dim_hint);

}  // namespace minkgeo
