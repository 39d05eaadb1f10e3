#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace minkgeo {

/// Gauss-Legendre nodes and weights on [-1,1], computed by Newton iteration
/// on the Legendre recurrence. Cached internally per order.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
    explicit GaussLegendre(int n);
};

/// Integrate f over [a,b] with n-point Gauss-Legendre.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n);

/// Legendre polynomial P_l(t) by the three-term recurrence.
double legendre_p(int l, double t);

/// Composite Simpson over uniformly spaced samples y_0..y_{m-1} with step h.
/// Falls back to a Simpson-3/8 tail when the interval count is odd.
double simpson_uniform(const std::vector<double>& y, double h);

}  // namespace minkgeo
