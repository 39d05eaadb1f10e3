#pragma once

#include <functional>
#include <string>
#include <vector>

#include "minkgeo/vec.hpp"

namespace minkgeo {

/// Real orthonormal spherical harmonics Y_{l,m} evaluated at a unit vector.
/// Fully-normalized associated Legendre recurrence; stable far beyond the
/// degrees used here.
struct RealSphericalHarmonics {
    /// Fills out[idx(l,m)] for all l = 0..lmax, m = -l..l.
    static void evaluate(int lmax, Vec3 u, std::vector<double>& out);
    static size_t index(int l, int m) { return static_cast<size_t>(l * (l + 1) + m); }
    static size_t count(int lmax) { return static_cast<size_t>((lmax + 1) * (lmax + 1)); }
};

/// Even-degree real spherical-harmonic expansion on S^2 (degrees 0,2,...,L).
class EvenSphericalExpansion {
public:
    EvenSphericalExpansion() : lmax_(0), coeffs_(1, 0.0) {}
    EvenSphericalExpansion(int lmax, std::vector<double> coeffs);

    int max_degree() const { return lmax_; }
    /// Coefficient of Y_{l,m}; l must be even.
    double coeff(int l, int m) const;
    double& coeff(int l, int m);
    const std::vector<double>& raw() const { return coeffs_; }

    double operator()(Vec3 u) const;

    double min_on_grid(int n_polar = 96, int n_azimuth = 192) const;
    double max_abs_on_grid(int n_polar = 96, int n_azimuth = 192) const;
    double tail_energy_fraction() const;

    /// Projection onto even degrees <= lmax using Gauss-Legendre in cos(polar)
    /// and trapezoid in azimuth; exact for band-limited integrands. If
    /// even_tol >= 0 the odd-degree content is measured and must stay below
    /// even_tol relative to the largest even coefficient.
    static EvenSphericalExpansion fit(const std::function<double(Vec3)>& f, int lmax,
                                      double even_tol = 1e-8);

    std::string to_json() const;
    static EvenSphericalExpansion from_json(const std::string& text);

private:
    int lmax_;
    std::vector<double> coeffs_;  // packed over even l only
    static size_t packed_index(int l, int m);
    static size_t packed_count(int lmax);
};

}  // namespace minkgeo
