#pragma once

#include <functional>

#include "minkgeo/fourier.hpp"
#include "minkgeo/sphharm.hpp"

namespace minkgeo {

enum class Space { S1, S2 };

/// Eigenvalue of the cosine transform on the given even degree, computed by
/// quadrature: int |cos t| cos(2k t) dt on S^1 (piecewise-smooth split),
/// 2 pi int_{-1}^{1} |t| P_l(t) dt on S^2 (Funk-Hecke reduction).
double cosine_multiplier(Space space, int degree);

/// C(f)(u) = int |<xi,u>| f(xi) dxi, diagonal on even harmonics.
EvenFourierSeries cosine_forward(const EvenFourierSeries& f);
EvenSphericalExpansion cosine_forward(const EvenSphericalExpansion& f);

/// Direct quadrature of the cosine transform at one direction; the oracle
/// the diagonal form is tested against.
double cosine_forward_direct(const EvenFourierSeries& f, double u_angle);
double cosine_forward_direct(const EvenSphericalExpansion& f, Vec3 u);

struct InversionReport {
    /// sup |(1/4) C(g) - F_K| over a dense grid, F_K the fitted truncation of
    /// the input: consistency of the multiplier inversion.
    double roundtrip_sup_error = 0.0;
    /// sup |F_K - F| over a dense grid: what truncation at this order costs.
    double representation_sup_error = 0.0;
    double tail_energy_fraction = 0.0;
    bool tail_warning = false;  // top-quarter coefficient energy > 1e-6 of total
};

/// Solves F = (1/4) C(g) for the density g of a planar norm restriction.
/// The input must be even and strictly positive; the result may be signed.
EvenFourierSeries invert_cosine_s1(const std::function<double(double)>& norm_restriction,
                                   int order, InversionReport* report = nullptr);

/// Same on S^2: F = (1/4) C(f) for the hyperplane density f.
EvenSphericalExpansion invert_cosine_s2(const std::function<double(Vec3)>& norm_restriction,
                                        int max_degree, InversionReport* report = nullptr);

}  // namespace minkgeo
