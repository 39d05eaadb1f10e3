#pragma once

#include <cstdint>

#include "minkgeo/vec.hpp"

namespace minkgeo {

/// Coefficient of the symplectic form on the space of lines of the p-norm
/// plane in tangency coordinates (r, Theta):
///   (p-1)^2 Theta^{p(p-2)} Omega^{p^2-3p+1} / ||(Theta,Omega)||_{p(p-1)}^{(p-1)(2p-1)}
/// with Omega = (1 - Theta^p)^{1/p}. Defined on the open chart Theta in (0,1);
/// at p=2 it reduces to 1/Omega.
double psymp_density(double p, double theta_coord);

struct PullbackReport {
    int lines = 0;
    int excluded = 0;  // samples rejected near the chart boundary
    double max_rel_error = 0.0;
    bool pass = false;
};

/// Checks the (r,Theta) density against the sphere-bundle 2-form
/// (p-1)(alpha^{p-2} dx^dalpha + beta^{p-2} dy^dbeta): random tangent pairs
/// at random lines are lifted through the tangency parametrization by central
/// differences and both 2-form values compared in absolute value.
PullbackReport pullback_check(double p, int n_lines, uint64_t seed, double theta_lo = 0.05,
                              double theta_hi = 0.95, double tol = 1e-4);

/// Length of the segment by integrating the (r,Theta) density over the set
/// of crossing lines, chart by chart over the four tangent-point quadrants,
/// with the same unoriented-chart constant as the Fourier-density route.
double crofton_via_psymp(double p, Vec2 a, Vec2 b);

}  // namespace minkgeo
