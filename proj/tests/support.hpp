#pragma once

#include <cmath>
#include <random>
#include <span>

#include "minkgeo/norms.hpp"
#include "minkgeo/vec.hpp"

namespace testsup {

using minkgeo::MinkowskiNorm;
using minkgeo::SymMat;
using minkgeo::Vec2;
using minkgeo::Vec3;

/// Central-difference gradient of a scalar function of 2 or 3 variables.
template <typename F>
inline void fd_gradient(const F& f, const double* v, int dim, double h, double* out) {
    for (int i = 0; i < dim; ++i) {
        double wp[3], wm[3];
        for (int k = 0; k < dim; ++k) wp[k] = wm[k] = v[k];
        wp[i] += h;
        wm[i] -= h;
        out[i] = (f(wp) - f(wm)) / (2.0 * h);
    }
}

/// Second central differences of a scalar function: the Hessian oracle used
/// against the analytic (1/2)Hess(F^2). Round-off grows like eps/h^2, so the
/// step is wider than for first differences.
template <typename F>
inline SymMat fd_hessian(const F& f, const double* v, int dim, double h) {
    SymMat m = SymMat::zero(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            double val;
            if (i == j) {
                double wp[3], wm[3];
                for (int k = 0; k < dim; ++k) wp[k] = wm[k] = v[k];
                wp[i] += h;
                wm[i] -= h;
                val = (f(wp) - 2.0 * f(v) + f(wm)) / (h * h);
            } else {
                double a[3], b[3], c[3], d[3];
                for (int k = 0; k < dim; ++k) a[k] = b[k] = c[k] = d[k] = v[k];
                a[i] += h; a[j] += h;
                b[i] += h; b[j] -= h;
                c[i] -= h; c[j] += h;
                d[i] -= h; d[j] -= h;
                val = (f(a) - f(b) - f(c) + f(d)) / (4.0 * h * h);
            }
            m.at(i, j) = m.at(j, i) = val;
        }
    }
    return m;
}

/// Random direction with all coordinates bounded away from zero, std::mt19937
/// based (test-side randomness, independent of the library's counter streams).
inline Vec2 random_offaxis_dir2(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Vec2 v{u(gen), u(gen)};
        const double r = v.norm2();
        if (r > 1e-2 && std::abs(v.x) / r > 2e-3 && std::abs(v.y) / r > 2e-3) return v;
    }
}

inline Vec3 random_offaxis_dir3(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Vec3 v{u(gen), u(gen), u(gen)};
        const double r = v.norm2();
        if (r > 1e-2 && std::abs(v.x) / r > 2e-3 && std::abs(v.y) / r > 2e-3 &&
            std::abs(v.z) / r > 2e-3)
            return v;
    }
}

}  // namespace testsup
