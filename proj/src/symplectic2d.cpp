#include "minkgeo/symplectic2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "minkgeo/crofton2d.hpp"
#include "minkgeo/quadrature.hpp"
#include "minkgeo/rng.hpp"

namespace minkgeo {

double psymp_density(double p, double theta_coord) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("psymp_density: p must be in (1,inf)");
    if (!(theta_coord > 0.0 && theta_coord < 1.0))
        throw std::domain_error("psymp_density: Theta must lie in the open chart (0,1)");
    const double Th = theta_coord;
    const double Om = std::pow(1.0 - std::pow(Th, p), 1.0 / p);
    const double s = p * (p - 1.0);
    const double norm_s = std::pow(std::pow(Th, s) + std::pow(Om, s),
                                   ((p - 1.0) * (2.0 * p - 1.0)) / s);
    return (p - 1.0) * (p - 1.0) * std::pow(Th, p * (p - 2.0)) *
           std::pow(Om, p * p - 3.0 * p + 1.0) / norm_s;
}

namespace {

/// Section of the line projection: (r,Theta) -> ((x,y),(alpha,beta)) with
/// (x,y) the tangency point on the sphere of radius r and (alpha,beta) the
/// p-unit direction of the line.
std::array<double, 4> tangency_lift(double p, double r, double Th) {
    const double Om = std::pow(1.0 - std::pow(Th, p), 1.0 / p);
    const double a = std::pow(Om, p - 1.0), b = std::pow(Th, p - 1.0);
    const double nrm = std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
    return {-r * Th, r * Om, a / nrm, b / nrm};
}

}  // namespace

PullbackReport pullback_check(double p, int n_lines, uint64_t seed, double theta_lo,
                              double theta_hi, double tol) {
    if (n_lines < 1) throw std::invalid_argument("pullback_check: need n_lines >= 1");
    if (!(p > 1.0)) throw std::invalid_argument("pullback_check: p must be in (1,inf)");
    PullbackReport rep;
    rep.lines = n_lines;
    CounterRng rng(seed, /*stream=*/0x70756c6cULL);
    const double h = 1e-6;
    const double edge = 1e-3;

    for (int i = 0; i < n_lines; ++i) {
        const uint64_t idx = static_cast<uint64_t>(i);
        const double r = 0.2 + 1.8 * rng.uniform(idx, 0);
        const double Th = theta_lo + (theta_hi - theta_lo) * rng.uniform(idx, 1);
        double t1r = 2.0 * rng.uniform(idx, 2) - 1.0, t1t = 2.0 * rng.uniform(idx, 3) - 1.0;
        double t2r = 2.0 * rng.uniform(idx, 4) - 1.0, t2t = 2.0 * rng.uniform(idx, 5) - 1.0;
        const double det = t1r * t2t - t2r * t1t;
        if (std::abs(det) < 1e-3) {  // nearly dependent tangents carry no information
            t2r += 0.5;
            t2t -= 0.5;
        }
        if (Th + h * std::max(std::abs(t1t), std::abs(t2t)) > 1.0 - edge ||
            Th - h * std::max(std::abs(t1t), std::abs(t2t)) < edge) {
            ++rep.excluded;
            continue;
        }

        auto lift_diff = [&](double tr, double tt) {
            const auto up = tangency_lift(p, r + h * tr, Th + h * tt);
            const auto um = tangency_lift(p, r - h * tr, Th - h * tt);
            std::array<double, 4> d;
            for (int k = 0; k < 4; ++k)
                d[static_cast<size_t>(k)] =
                    (up[static_cast<size_t>(k)] - um[static_cast<size_t>(k)]) / (2.0 * h);
            return d;
        };
        const auto u1 = lift_diff(t1r, t1t);
        const auto u2 = lift_diff(t2r, t2t);
        const auto base = tangency_lift(p, r, Th);
        const double alpha = base[2], beta = base[3];

        const double two_form =
            (p - 1.0) * (std::pow(alpha, p - 2.0) * (u1[0] * u2[2] - u2[0] * u1[2]) +
                         std::pow(beta, p - 2.0) * (u1[1] * u2[3] - u2[1] * u1[3]));
        const double chart_form = psymp_density(p, Th) * (t1r * t2t - t2r * t1t);
        const double rel =
            std::abs(std::abs(two_form) - std::abs(chart_form)) / std::abs(chart_form);
        rep.max_rel_error = std::max(rep.max_rel_error, rel);
    }
    rep.pass = rep.max_rel_error < tol;
    return rep;
}

namespace {

/// Monotone dot-product root: n(t) sweeps a quarter of the dual sphere, so
/// <w, n(t)> has at most one sign change on (0, pi/2).
void add_root_if_any(const std::function<double(double)>& f, double lo, double hi,
                     std::vector<double>& roots) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) {
        roots.push_back(lo);
        return;
    }
    if (fhi == 0.0) {
        roots.push_back(hi);
        return;
    }
    if ((flo < 0.0) == (fhi < 0.0)) return;
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    roots.push_back(0.5 * (lo + hi));
}

}  // namespace

double crofton_via_psymp(double p, Vec2 a, Vec2 b) {
    if (!(p > 1.0)) throw std::invalid_argument("crofton_via_psymp: p must be in (1,inf)");
    if (a.x == b.x && a.y == b.y)
        throw std::invalid_argument("crofton_via_psymp: endpoints coincide");

    // substitution Theta = sin(t)^{2/p}, Omega = cos(t)^{2/p}: the chart
    // boundary singularities of the density become integrable endpoints
    const double ex = 2.0 / p;
    auto Th_of = [&](double t) { return std::pow(std::sin(t), ex); };
    auto Om_of = [&](double t) { return std::pow(std::cos(t), ex); };
    auto dTh_of = [&](double t) {
        return ex * std::pow(std::sin(t), ex - 1.0) * std::cos(t);
    };

    double total = 0.0;
    const double signs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    for (const auto& s : signs) {
        auto conormal = [&](double t) {
            return Vec2{s[0] * std::pow(Th_of(t), p - 1.0), s[1] * std::pow(Om_of(t), p - 1.0)};
        };
        auto integrand = [&](double t) {
            const Vec2 n = conormal(t);
            const double pa = a.dot(n), pb = b.dot(n);
            const double lo = std::min(pa, pb), hi = std::max(pa, pb);
            const double width = std::max(0.0, hi - std::max(lo, 0.0));
            if (width == 0.0) return 0.0;
            return psymp_density(p, Th_of(t)) * width * dTh_of(t);
        };
        // split where the crossing width loses smoothness: projections of the
        // endpoints or of the direction changing sign
        std::vector<double> splits{1e-9, M_PI / 2.0 - 1e-9};
        const Vec2 v = b - a;
        for (const Vec2 w : {a, b, v}) {
            if (w.x == 0.0 && w.y == 0.0) continue;
            add_root_if_any([&](double t) { return w.dot(conormal(t)); }, 1e-9,
                            M_PI / 2.0 - 1e-9, splits);
        }
        std::sort(splits.begin(), splits.end());
        for (size_t i = 0; i + 1 < splits.size(); ++i) {
            if (splits[i + 1] - splits[i] < 1e-12) continue;
            total += gauss_legendre(integrand, splits[i], splits[i + 1], 128);
        }
    }
    return CroftonMeasure2D::c_len * total;
}

}  // namespace minkgeo
