#include "minkgeo/cosine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "minkgeo/quadrature.hpp"

namespace minkgeo {

double cosine_multiplier(Space space, int degree) {
    if (degree < 0 || degree % 2 != 0)
        throw std::invalid_argument("cosine multipliers exist for even degrees only");
    if (space == Space::S1) {
        // int_0^{2pi} |cos t| cos(2k t) dt = 4 int_0^{pi/2} cos t cos(2k t) dt
        const int k = degree / 2;
        const int nodes = std::max(48, 3 * k + 16);
        return 4.0 * gauss_legendre(
                         [k](double t) { return std::cos(t) * std::cos(2.0 * k * t); }, 0.0,
                         M_PI / 2.0, nodes);
    }
    // Funk-Hecke: 2 pi int_{-1}^1 |t| P_l(t) dt = 4 pi int_0^1 t P_l(t) dt for even l,
    // and the integrand is a polynomial, so Gauss-Legendre is exact.
    const int l = degree;
    const int nodes = l / 2 + 4;
    return 4.0 * M_PI *
           gauss_legendre([l](double t) { return t * legendre_p(l, t); }, 0.0, 1.0, nodes);
}

EvenFourierSeries cosine_forward(const EvenFourierSeries& f) {
    const int K = f.order();
    std::vector<double> a(static_cast<size_t>(K) + 1), b(static_cast<size_t>(K) + 1, 0.0);
    for (int k = 0; k <= K; ++k) {
        const double lam = cosine_multiplier(Space::S1, 2 * k);
        a[static_cast<size_t>(k)] = lam * f.cos_coeffs()[static_cast<size_t>(k)];
        b[static_cast<size_t>(k)] = lam * f.sin_coeffs()[static_cast<size_t>(k)];
    }
    return EvenFourierSeries(std::move(a), std::move(b));
}

EvenSphericalExpansion cosine_forward(const EvenSphericalExpansion& f) {
    EvenSphericalExpansion out = f;
    for (int l = 0; l <= f.max_degree(); l += 2) {
        const double lam = cosine_multiplier(Space::S2, l);
        for (int m = -l; m <= l; ++m) out.coeff(l, m) = lam * f.coeff(l, m);
    }
    return out;
}

double cosine_forward_direct(const EvenFourierSeries& f, double u_angle) {
    // kink of |cos(t - u)| at u +- pi/2; Gauss-Legendre on the smooth pieces
    const int nodes = std::max(64, 3 * f.order() + 24);
    auto integrand = [&](double t) { return std::abs(std::cos(t - u_angle)) * f(t); };
    const double k1 = u_angle - M_PI / 2.0, k2 = u_angle + M_PI / 2.0;
    return gauss_legendre(integrand, k1, k2, nodes) +
           gauss_legendre(integrand, k2, k1 + 2.0 * M_PI, nodes);
}

double cosine_forward_direct(const EvenSphericalExpansion& f, Vec3 u) {
    // rotate u to the pole; degrees are rotation invariant, so the rotated
    // integrand stays band-limited in azimuth
    const Vec3 w = u.normalized();
    Vec3 e1 = std::abs(w.z) < 0.9 ? Vec3{0, 0, 1}.cross(w) : Vec3{1, 0, 0}.cross(w);
    e1 = e1.normalized();
    const Vec3 e2 = w.cross(e1);
    const int L = f.max_degree();
    const int nphi = 4 * L + 8;
    const int nu = 2 * L + 16;
    GaussLegendre gl(nu);
    double total = 0.0;
    for (int half = 0; half < 2; ++half) {
        // u = cos(polar) in (0,1) resp. (-1,0); |<xi,u>| = |u| smooth per half
        for (int i = 0; i < nu; ++i) {
            const double c = 0.5 * (gl.x[static_cast<size_t>(i)] + 1.0);
            const double uu = half == 0 ? c : -c;
            const double st = std::sqrt(std::max(0.0, 1.0 - uu * uu));
            double ring = 0.0;
            for (int j = 0; j < nphi; ++j) {
                const double ph = 2.0 * M_PI * j / nphi;
                const Vec3 xi = uu * w + st * std::cos(ph) * e1 + st * std::sin(ph) * e2;
                ring += f(xi);
            }
            total += 0.5 * gl.w[static_cast<size_t>(i)] * std::abs(uu) * ring * (2.0 * M_PI / nphi);
        }
    }
    return total;
}

EvenFourierSeries invert_cosine_s1(const std::function<double(double)>& norm_restriction,
                                   int order, InversionReport* report) {
    const int n_nodes = std::max(8 * order + 8, 8192);
    std::vector<double> samples(static_cast<size_t>(n_nodes));
    double fmin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_nodes; ++j) {
        samples[static_cast<size_t>(j)] = norm_restriction(2.0 * M_PI * j / n_nodes);
        fmin = std::min(fmin, samples[static_cast<size_t>(j)]);
    }
    if (!(fmin > 0.0))
        throw std::invalid_argument("invert_cosine: norm restriction must be strictly positive");
    EvenFourierSeries fitted = EvenFourierSeries::fit(samples, order);

    std::vector<double> ga(static_cast<size_t>(order) + 1), gb(static_cast<size_t>(order) + 1, 0.0);
    for (int k = 0; k <= order; ++k) {
        const double lam = cosine_multiplier(Space::S1, 2 * k);
        ga[static_cast<size_t>(k)] = 4.0 * fitted.cos_coeffs()[static_cast<size_t>(k)] / lam;
        gb[static_cast<size_t>(k)] = 4.0 * fitted.sin_coeffs()[static_cast<size_t>(k)] / lam;
    }
    EvenFourierSeries g(std::move(ga), std::move(gb));

    if (report) {
        EvenFourierSeries back = cosine_forward(g);
        double rt = 0.0, repr = 0.0;
        const int dense = 4096;
        for (int j = 0; j < dense; ++j) {
            const double th = 2.0 * M_PI * j / dense;
            const double fk = fitted(th);
            rt = std::max(rt, std::abs(0.25 * back(th) - fk));
            repr = std::max(repr, std::abs(fk - norm_restriction(th)));
        }
        report->roundtrip_sup_error = rt;
        report->representation_sup_error = repr;
        report->tail_energy_fraction = g.tail_energy_fraction();
        report->tail_warning = report->tail_energy_fraction > 1e-6;
    }
    return g;
}

EvenSphericalExpansion invert_cosine_s2(const std::function<double(Vec3)>& norm_restriction,
                                        int max_degree, InversionReport* report) {
    EvenSphericalExpansion fitted = EvenSphericalExpansion::fit(norm_restriction, max_degree);
    {
        double fmin = std::numeric_limits<double>::infinity();
        const int nt = 32, np = 64;
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < np; ++j) {
                const double th = M_PI * (i + 0.5) / nt, ph = 2.0 * M_PI * j / np;
                fmin = std::min(fmin, norm_restriction(Vec3{std::sin(th) * std::cos(ph),
                                                            std::sin(th) * std::sin(ph),
                                                            std::cos(th)}));
            }
        if (!(fmin > 0.0))
            throw std::invalid_argument("invert_cosine: norm restriction must be strictly positive");
    }

    EvenSphericalExpansion f = fitted;
    for (int l = 0; l <= max_degree; l += 2) {
        const double lam = cosine_multiplier(Space::S2, l);
        for (int m = -l; m <= l; ++m) f.coeff(l, m) = 4.0 * fitted.coeff(l, m) / lam;
    }

    if (report) {
        EvenSphericalExpansion back = cosine_forward(f);
        double rt = 0.0, repr = 0.0;
        const int nt = 48, np = 96;
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < np; ++j) {
                const double th = M_PI * (i + 0.5) / nt, ph = 2.0 * M_PI * j / np;
                const Vec3 u{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                             std::cos(th)};
                const double fk = fitted(u);
                rt = std::max(rt, std::abs(0.25 * back(u) - fk));
                repr = std::max(repr, std::abs(fk - norm_restriction(u)));
            }
        report->roundtrip_sup_error = rt;
        report->representation_sup_error = repr;
        report->tail_energy_fraction = f.tail_energy_fraction();
        report->tail_warning = report->tail_energy_fraction > 1e-6;
    }
    return f;
}

}  // namespace minkgeo
