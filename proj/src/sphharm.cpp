#include "minkgeo/sphharm.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "minkgeo/jsonio.hpp"
#include "minkgeo/quadrature.hpp"

namespace minkgeo {

void RealSphericalHarmonics::evaluate(int lmax, Vec3 u, std::vector<double>& out) {
    out.assign(count(lmax), 0.0);
    const double ct = u.z;
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double phi = std::atan2(u.y, u.x);

    // Fully normalized P̄_lm with int_{S^2} (P̄_lm trig)^2 = 1 after the
    // sqrt(2) azimuthal factor below.
    static thread_local std::vector<double> pbar;
    pbar.assign(count(lmax), 0.0);
    auto P = [&](int l, int m) -> double& {
        return pbar[static_cast<size_t>(l * (l + 1) / 2 + m)];
    };
    P(0, 0) = std::sqrt(1.0 / (4.0 * M_PI));
    for (int m = 1; m <= lmax; ++m)
        P(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * st * P(m - 1, m - 1);
    for (int m = 0; m < lmax; ++m) P(m + 1, m) = std::sqrt(2.0 * m + 3.0) * ct * P(m, m);
    for (int m = 0; m <= lmax; ++m) {
        for (int l = m + 2; l <= lmax; ++l) {
            const double alm =
                std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
            const double blm = std::sqrt(
                ((static_cast<double>(l - 1) * (l - 1)) - static_cast<double>(m) * m) /
                (4.0 * static_cast<double>(l - 1) * (l - 1) - 1.0));
            P(l, m) = alm * (ct * P(l - 1, m) - blm * P(l - 2, m));
        }
    }

    static thread_local std::vector<double> cm, sm;
    cm.assign(static_cast<size_t>(lmax) + 1, 0.0);
    sm.assign(static_cast<size_t>(lmax) + 1, 0.0);
    for (int m = 0; m <= lmax; ++m) {
        cm[static_cast<size_t>(m)] = std::cos(m * phi);
        sm[static_cast<size_t>(m)] = std::sin(m * phi);
    }
    const double sqrt2 = std::sqrt(2.0);
    for (int l = 0; l <= lmax; ++l) {
        out[index(l, 0)] = P(l, 0);
        for (int m = 1; m <= l; ++m) {
            out[index(l, m)] = sqrt2 * P(l, m) * cm[static_cast<size_t>(m)];
            out[index(l, -m)] = sqrt2 * P(l, m) * sm[static_cast<size_t>(m)];
        }
    }
}

size_t EvenSphericalExpansion::packed_index(int l, int m) {
    // even degrees only: offset of degree l is sum over even l' < l of (2l'+1)
    const int h = l / 2;
    const int offset = h * (2 * h - 1);  // sum_{j=0}^{h-1} (4j+1)
    return static_cast<size_t>(offset + (m + l));
}

size_t EvenSphericalExpansion::packed_count(int lmax) {
    const int h = lmax / 2;
    return static_cast<size_t>((h + 1) * (2 * h + 1));
}

EvenSphericalExpansion::EvenSphericalExpansion(int lmax, std::vector<double> coeffs)
    : lmax_(lmax), coeffs_(std::move(coeffs)) {
    if (lmax_ < 0 || lmax_ % 2 != 0)
        throw std::invalid_argument("EvenSphericalExpansion: max degree must be even and >= 0");
    if (coeffs_.size() != packed_count(lmax_))
        throw std::invalid_argument("EvenSphericalExpansion: wrong coefficient count");
}

double EvenSphericalExpansion::coeff(int l, int m) const {
    if (l % 2 != 0 || l > lmax_ || std::abs(m) > l)
        throw std::invalid_argument("coeff: degree/order out of range");
    return coeffs_[packed_index(l, m)];
}

double& EvenSphericalExpansion::coeff(int l, int m) {
    if (l % 2 != 0 || l > lmax_ || std::abs(m) > l)
        throw std::invalid_argument("coeff: degree/order out of range");
    return coeffs_[packed_index(l, m)];
}

double EvenSphericalExpansion::operator()(Vec3 u) const {
    static thread_local std::vector<double> y;
    RealSphericalHarmonics::evaluate(lmax_, u, y);
    double s = 0.0;
    for (int l = 0; l <= lmax_; l += 2)
        for (int m = -l; m <= l; ++m)
            s += coeffs_[packed_index(l, m)] * y[RealSphericalHarmonics::index(l, m)];
    return s;
}

double EvenSphericalExpansion::min_on_grid(int n_polar, int n_azimuth) const {
    double mn = (*this)(Vec3{0, 0, 1});
    for (int i = 0; i < n_polar; ++i) {
        const double th = M_PI * (i + 0.5) / n_polar;
        for (int j = 0; j < n_azimuth; ++j) {
            const double ph = 2.0 * M_PI * j / n_azimuth;
            mn = std::min(mn, (*this)(Vec3{std::sin(th) * std::cos(ph),
                                           std::sin(th) * std::sin(ph), std::cos(th)}));
        }
    }
    return mn;
}

double EvenSphericalExpansion::max_abs_on_grid(int n_polar, int n_azimuth) const {
    double mx = std::abs((*this)(Vec3{0, 0, 1}));
    for (int i = 0; i < n_polar; ++i) {
        const double th = M_PI * (i + 0.5) / n_polar;
        for (int j = 0; j < n_azimuth; ++j) {
            const double ph = 2.0 * M_PI * j / n_azimuth;
            mx = std::max(mx, std::abs((*this)(Vec3{std::sin(th) * std::cos(ph),
                                                    std::sin(th) * std::sin(ph), std::cos(th)})));
        }
    }
    return mx;
}

double EvenSphericalExpansion::tail_energy_fraction() const {
    if (lmax_ == 0) return 0.0;
    double total = 0.0, tail = 0.0;
    const int cut = lmax_ - lmax_ / 4;
    for (int l = 0; l <= lmax_; l += 2) {
        double e = 0.0;
        for (int m = -l; m <= l; ++m) e += coeffs_[packed_index(l, m)] * coeffs_[packed_index(l, m)];
        total += e;
        if (l > cut && l > 0) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

EvenSphericalExpansion EvenSphericalExpansion::fit(const std::function<double(Vec3)>& f, int lmax,
                                                   double even_tol) {
    if (lmax < 0 || lmax % 2 != 0) throw std::invalid_argument("fit: max degree must be even");
    const int check_lmax = lmax + 1;  // include odd degrees for the evenness audit
    const int nu = 2 * check_lmax + 2;
    const int nphi = 4 * check_lmax + 4;
    GaussLegendre gl(nu);

    std::vector<double> full(RealSphericalHarmonics::count(check_lmax), 0.0);
    std::vector<double> y;
    for (int i = 0; i < nu; ++i) {
        const double u = gl.x[static_cast<size_t>(i)];
        const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (int j = 0; j < nphi; ++j) {
            const double ph = 2.0 * M_PI * j / nphi;
            const Vec3 xi{st * std::cos(ph), st * std::sin(ph), u};
            const double fv = f(xi);
            const double w = gl.w[static_cast<size_t>(i)] * (2.0 * M_PI / nphi);
            RealSphericalHarmonics::evaluate(check_lmax, xi, y);
            for (size_t k = 0; k < full.size(); ++k) full[k] += w * fv * y[k];
        }
    }

    double even_max = 0.0, odd_max = 0.0;
    for (int l = 0; l <= check_lmax; ++l)
        for (int m = -l; m <= l; ++m) {
            const double c = std::abs(full[RealSphericalHarmonics::index(l, m)]);
            (l % 2 == 0 ? even_max : odd_max) = std::max(l % 2 == 0 ? even_max : odd_max, c);
        }
    if (even_tol >= 0.0 && odd_max > even_tol * std::max(1.0, even_max))
        throw std::invalid_argument("fit: input is not antipodally even on S2");

    std::vector<double> packed(packed_count(lmax), 0.0);
    EvenSphericalExpansion out(lmax, std::move(packed));
    for (int l = 0; l <= lmax; l += 2)
        for (int m = -l; m <= l; ++m)
            out.coeff(l, m) = full[RealSphericalHarmonics::index(l, m)];
    return out;
}

std::string EvenSphericalExpansion::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.field("space", "S2");
    w.field("order", lmax_);
    w.field("coefficients", coeffs_);
    w.end_object();
    return w.str();
}

EvenSphericalExpansion EvenSphericalExpansion::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.at("space").get<std::string>() != "S2")
        throw std::invalid_argument("from_json: expected space S2");
    const int lmax = j.at("order").get<int>();
    std::vector<double> c = j.at("coefficients").get<std::vector<double>>();
    return EvenSphericalExpansion(lmax, std::move(c));
}

}  // namespace minkgeo
