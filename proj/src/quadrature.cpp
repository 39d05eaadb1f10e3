#include "minkgeo/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace minkgeo {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
    x.resize(static_cast<size_t>(n));
    w.resize(static_cast<size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double dz = -p1 / pp;
            z += dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<size_t>(i)] = -z;
        x[static_cast<size_t>(n - 1 - i)] = z;
        w[static_cast<size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<size_t>(n - 1 - i)] = w[static_cast<size_t>(i)];
    }
}

namespace {
const GaussLegendre& cached_rule(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
    return it->second;
}
}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussLegendre& gl = cached_rule(n);
    const double c = 0.5 * (b - a), m = 0.5 * (a + b);
    double s = 0.0;
    for (size_t i = 0; i < gl.x.size(); ++i) s += gl.w[i] * f(m + c * gl.x[i]);
    return c * s;
}

double legendre_p(int l, double t) {
    if (l == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= l; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double simpson_uniform(const std::vector<double>& y, double h) {
    const size_t m = y.size();
    if (m < 2) throw std::invalid_argument("simpson needs at least 2 samples");
    if (m == 2) return 0.5 * h * (y[0] + y[1]);
    size_t intervals = m - 1;
    double total = 0.0;
    size_t start = 0;
    if (intervals % 2 != 0) {
        if (intervals >= 3) {
            // Simpson 3/8 on the first three intervals keeps 4th-order accuracy.
            total += 3.0 * h / 8.0 * (y[0] + 3.0 * y[1] + 3.0 * y[2] + y[3]);
            start = 3;
        } else {
            return 0.5 * h * (y[0] + y[1]);  // single interval: trapezoid
        }
    }
    double s = y[start] + y[m - 1];
    for (size_t i = start + 1; i < m - 1; ++i) s += ((i - start) % 2 == 1 ? 4.0 : 2.0) * y[i];
    total += h / 3.0 * s;
    return total;
}

}  // namespace minkgeo
