#pragma once

#include <functional>
#include <string>
#include <vector>

#include "minkgeo/crofton2d.hpp"
#include "minkgeo/mc.hpp"
#include "minkgeo/norms.hpp"
#include "minkgeo/vec.hpp"

namespace minkgeo {

struct Polygon2D {
    std::vector<Vec2> vertices;

    static Polygon2D from_csv(const std::string& path);
    double shoelace_area() const;
    bool is_simple() const;
    /// Even-odd rule with half-open edge handling.
    bool contains(Vec2 p) const;
    Polygon2D translated(Vec2 d) const;
};

/// Lebesgue area of the dual unit ball { xi : F*(xi) <= 1 } by the polar
/// quadrature (1/2) int (1/F*)^2 dphi, split at the coordinate axes where
/// p-norm duals lose smoothness.
double dual_ball_area(const MinkowskiNorm& norm);

/// kappa = C_cal * intint g(t) g(t') |sin(t-t')| dt dt' over [0,pi)^2 with
/// C_cal = 1/(2pi). The pi-periodic kernel |sin| is diagonal in the even
/// Fourier basis, which gives the integral in closed form:
///   kappa = a_0^2 - (1/2) sum_k (a_k^2 + b_k^2) / (4k^2 - 1).
double kappa_from_density(const EvenFourierSeries& g);

/// Inverse-CDF sampler over [0,pi) proportional to |g|, piecewise constant
/// over `cells` equal slots; the exact proposal density is reported with
/// each draw so importance weights stay unbiased.
class DensitySampler1D {
public:
    explicit DensitySampler1D(const EvenFourierSeries& g, int cells = 4096);
    /// u in [0,1) -> theta; *q_density receives the proposal density at theta.
    double sample(double u, double* q_density) const;

private:
    std::vector<double> cdf_;
    std::vector<double> density_;
    double cell_width_;
};

/// HT area measure: the pair-intersection pushforward of the Crofton measure
/// is spatially constant, so HT^2(U) = kappa * Leb(U). The single calibration
/// constant C_cal = 1/(2pi) is pinned by the Euclidean case (kappa == 1) and
/// cross-checked against dual_ball_area / pi.
class HTAreaMeasure {
public:
    static constexpr double c_cal_inv_2pi = 1.0;  // see kappa_from_density

    static HTAreaMeasure from_norm(const MinkowskiNorm& norm, int order = 128);
    static HTAreaMeasure from_density(EvenFourierSeries g);

    double kappa() const { return kappa_; }
    const EvenFourierSeries& density() const { return g_; }

private:
    EvenFourierSeries g_;
    double kappa_ = 0.0;
};

double ht_area_exact(const HTAreaMeasure& measure, const Polygon2D& region);

/// Pair-sampling Monte Carlo: lines drawn from |g| x |g| with sign weights,
/// intersected (near-parallel pairs under the 1e-10 Jacobian floor rejected),
/// and the intersection point binned by point-in-polygon. Exercises the
/// pushforward directly. `on_point` (optional, workers=1 only) observes the
/// accepted intersection points.
MCEstimate ht_area_mc(const HTAreaMeasure& measure, const Polygon2D& region, uint64_t n,
                      uint64_t seed, int workers = 1,
                      const std::function<void(Vec2, double)>* on_point = nullptr);

}  // namespace minkgeo
