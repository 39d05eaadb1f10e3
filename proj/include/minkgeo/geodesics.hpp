#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "minkgeo/norms.hpp"

namespace minkgeo {

/// Sampled curve on a uniform parameter grid over [t0,t1].
struct ParamPath {
    int dim = 2;
    double t0 = 0.0, t1 = 1.0;
    std::vector<std::array<double, 3>> points;  // first `dim` entries valid

    size_t size() const { return points.size(); }
    double step() const { return (t1 - t0) / static_cast<double>(points.size() - 1); }

    static ParamPath straight(std::span<const double> a, std::span<const double> b, int samples);
    /// CSV rows `t,x,y[,z]` on a uniform t-grid.
    static ParamPath from_csv(const std::string& path);
};

/// Length functional: composite Simpson of F(r'(t)) with 4th-order finite
/// differences for r' on the sample grid. Paths with fewer than 5 samples
/// fall back to the exact polyline sum.
double path_length(const MinkowskiNorm& norm, const ParamPath& path);

struct ShortestPathReport {
    int trials = 0;
    double chord_length = 0.0;
    double min_margin = 0.0;  // min over trials of perturbed length - chord length
    bool pass = false;
};

/// Variational audit of chord minimality: endpoint-fixed sine-series bumps
/// with amplitude up to 0.2 |y-x|, each compared against the straight chord.
ShortestPathReport verify_shortest_path(const MinkowskiNorm& norm, std::span<const double> x,
                                        std::span<const double> y, int n_perturbations,
                                        uint64_t seed);

struct HessianIdentityReport {
    int samples = 0;
    double max_residual = 0.0;
    bool pass = false;
};

/// Checks (1/2)Hess(F^2) = F Hess(F) + dF dF^T entrywise at random off-axis
/// points, with Hess(F) from central differences of the analytic gradient.
HessianIdentityReport hessian_identity_check(const MinkowskiNorm& norm, int n_samples,
                                             uint64_t seed, double tol = 1e-5);

}  // namespace minkgeo
