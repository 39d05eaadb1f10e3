#include "minkgeo/geodesics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "minkgeo/csv.hpp"
#include "minkgeo/quadrature.hpp"
#include "minkgeo/rng.hpp"
#include "minkgeo/sampling.hpp"

namespace minkgeo {

ParamPath ParamPath::straight(std::span<const double> a, std::span<const double> b, int samples) {
    if (a.size() != b.size() || (a.size() != 2 && a.size() != 3))
        throw std::invalid_argument("straight path endpoints must share dimension 2 or 3");
    if (samples < 2) throw std::invalid_argument("a path needs at least 2 samples");
    ParamPath p;
    p.dim = static_cast<int>(a.size());
    p.points.resize(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        for (int k = 0; k < p.dim; ++k)
            p.points[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                a[static_cast<size_t>(k)] + t * (b[static_cast<size_t>(k)] - a[static_cast<size_t>(k)]);
    }
    return p;
}

ParamPath ParamPath::from_csv(const std::string& path) {
    auto rows = read_csv_rows(path);
    if (rows.size() < 2) throw std::invalid_argument("path CSV needs at least 2 rows");
    const size_t cols = rows[0].size();
    if (cols != 3 && cols != 4)
        throw std::invalid_argument("path CSV rows must be t,x,y or t,x,y,z");
    ParamPath p;
    p.dim = static_cast<int>(cols) - 1;
    p.t0 = rows.front()[0];
    p.t1 = rows.back()[0];
    const double h = (p.t1 - p.t0) / static_cast<double>(rows.size() - 1);
    if (!(h > 0)) throw std::invalid_argument("path CSV must have increasing t");
    p.points.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("path CSV has ragged rows");
        if (std::abs(rows[i][0] - (p.t0 + h * static_cast<double>(i))) > 1e-9 * std::max(1.0, std::abs(p.t1)))
            throw std::invalid_argument("path CSV requires a uniform t-grid");
        for (int k = 0; k < p.dim; ++k) p.points[i][static_cast<size_t>(k)] = rows[i][static_cast<size_t>(k) + 1];
    }
    return p;
}

double path_length(const MinkowskiNorm& norm, const ParamPath& path) {
    const size_t m = path.size();
    if (m < 2) throw std::invalid_argument("path_length: need at least 2 samples");
    if (path.dim != norm.dim()) throw std::invalid_argument("path_length: dimension mismatch");
    const int d = path.dim;
    const auto& x = path.points;

    if (m < 5) {
        double len = 0.0;
        for (size_t i = 0; i + 1 < m; ++i) {
            double dv[3];
            for (int k = 0; k < d; ++k) dv[static_cast<size_t>(k)] = x[i + 1][static_cast<size_t>(k)] - x[i][static_cast<size_t>(k)];
            len += norm.evaluate(std::span<const double>(dv, static_cast<size_t>(d)));
        }
        return len;
    }

    const double h = path.step();
    std::vector<double> speed(m);
    double dv[3];
    // 4th-order stencils written over point differences from the stencil
    // base, which keeps the length insensitive to large common offsets
    static const double cs[5][5] = {{-25, 48, -36, 16, -3},
                                    {-3, -10, 18, -6, 1},
                                    {1, -8, 0, 8, -1},
                                    {-1, 6, -18, 10, 3},
                                    {3, -16, 36, -48, 25}};
    for (size_t i = 0; i < m; ++i) {
        size_t j;     // window start
        int stencil;  // row in cs, equal to i - j
        if (i >= 2 && i + 2 < m) {
            j = i - 2;
            stencil = 2;
        } else if (i < 2) {
            j = 0;
            stencil = static_cast<int>(i);
        } else {
            j = m - 5;
            stencil = static_cast<int>(i - j);
        }
        const size_t base = j + static_cast<size_t>(stencil);
        for (int k = 0; k < d; ++k) {
            const size_t ku = static_cast<size_t>(k);
            double der = 0.0;
            for (int s = 0; s < 5; ++s) {
                if (cs[stencil][s] == 0.0) continue;
                der += cs[stencil][s] * (x[j + static_cast<size_t>(s)][ku] - x[base][ku]);
            }
            dv[ku] = der / (12.0 * h);
        }
        speed[i] = norm.evaluate(std::span<const double>(dv, static_cast<size_t>(d)));
    }
    return simpson_uniform(speed, h);
}

ShortestPathReport verify_shortest_path(const MinkowskiNorm& norm, std::span<const double> x,
                                        std::span<const double> y, int n_perturbations,
                                        uint64_t seed) {
    const int d = norm.dim();
    if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
        throw std::invalid_argument("verify_shortest_path: endpoint dimension mismatch");
    double sep = 0.0;
    for (int k = 0; k < d; ++k) sep += (y[static_cast<size_t>(k)] - x[static_cast<size_t>(k)]) * (y[static_cast<size_t>(k)] - x[static_cast<size_t>(k)]);
    sep = std::sqrt(sep);
    if (sep == 0.0) throw std::invalid_argument("verify_shortest_path: endpoints coincide");

    const int m = 1001;
    ParamPath chord = ParamPath::straight(x, y, m);
    ShortestPathReport rep;
    rep.trials = n_perturbations;
    rep.chord_length = path_length(norm, chord);
    rep.min_margin = std::numeric_limits<double>::infinity();

    CounterRng rng(seed, /*stream=*/0x67656f64ULL);
    constexpr int kModes = 5;
    for (int trial = 0; trial < n_perturbations; ++trial) {
        double coef[kModes][3];
        for (int k = 0; k < kModes; ++k)
            for (int c = 0; c < d; ++c)
                coef[k][c] = 2.0 * rng.uniform(static_cast<uint64_t>(trial),
                                               static_cast<uint32_t>(4 * k + c)) - 1.0;
        const double amp_frac = 0.05 + 0.95 * rng.uniform(static_cast<uint64_t>(trial), 30);

        ParamPath pert = chord;
        double maxd = 0.0;
        std::vector<std::array<double, 3>> delta(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            const double t = static_cast<double>(i) / (m - 1);
            double norm2 = 0.0;
            for (int c = 0; c < d; ++c) {
                double v = 0.0;
                for (int k = 0; k < kModes; ++k) v += coef[k][c] * std::sin((k + 1) * M_PI * t);
                delta[static_cast<size_t>(i)][static_cast<size_t>(c)] = v;
                norm2 += v * v;
            }
            maxd = std::max(maxd, std::sqrt(norm2));
        }
        const double scale = (maxd > 0) ? amp_frac * 0.2 * sep / maxd : 0.0;
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < d; ++c)
                pert.points[static_cast<size_t>(i)][static_cast<size_t>(c)] += scale * delta[static_cast<size_t>(i)][static_cast<size_t>(c)];

        const double len = path_length(norm, pert);
        rep.min_margin = std::min(rep.min_margin, len - rep.chord_length);
    }
    if (n_perturbations == 0) rep.min_margin = 0.0;
    rep.pass = rep.min_margin >= -1e-10;
    return rep;
}

HessianIdentityReport hessian_identity_check(const MinkowskiNorm& norm, int n_samples,
                                             uint64_t seed, double tol) {
    if (n_samples < 1) throw std::invalid_argument("hessian_identity_check: n_samples >= 1");
    const int d = norm.dim();
    CounterRng rng(seed, /*stream=*/0x68657373ULL);
    HessianIdentityReport rep;
    rep.samples = n_samples;

    for (int i = 0; i < n_samples; ++i) {
        double v[3];
        if (!sample_offaxis_direction(rng, static_cast<uint64_t>(i), 8, d, 1e-3, v)) continue;
        double r = 0.0;
        for (int k = 0; k < d; ++k) r += v[k] * v[k];
        const double scale = (0.5 + 1.5 * rng.uniform(static_cast<uint64_t>(i), 1)) / std::sqrt(r);
        for (int k = 0; k < d; ++k) v[k] *= scale;

        const GradHess gh = norm.gradient_and_hessian(std::span<const double>(v, static_cast<size_t>(d)));
        const double f = norm.evaluate(std::span<const double>(v, static_cast<size_t>(d)));

        // Hess(F) by central differences of the analytic gradient
        double vr = 0.0;
        for (int k = 0; k < d; ++k) vr = std::max(vr, std::abs(v[k]));
        const double h = 1e-5 * std::max(1.0, vr);
        SymMat hess_f = SymMat::zero(d);
        for (int j = 0; j < d; ++j) {
            double wp[3], wm[3];
            for (int k = 0; k < d; ++k) wp[k] = wm[k] = v[k];
            wp[j] += h;
            wm[j] -= h;
            const GradHess gp = norm.gradient_and_hessian(std::span<const double>(wp, static_cast<size_t>(d)));
            const GradHess gm = norm.gradient_and_hessian(std::span<const double>(wm, static_cast<size_t>(d)));
            for (int k = 0; k < d; ++k)
                hess_f.at(k, j) = (gp.grad[static_cast<size_t>(k)] - gm.grad[static_cast<size_t>(k)]) / (2.0 * h);
        }
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                const double s = 0.5 * (hess_f.at(a, b) + hess_f.at(b, a));
                hess_f.at(a, b) = hess_f.at(b, a) = s;
            }

        double res = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const double rhs = f * hess_f.at(a, b) + gh.grad[static_cast<size_t>(a)] * gh.grad[static_cast<size_t>(b)];
                res = std::max(res, std::abs(gh.half_hess_f2.at(a, b) - rhs));
            }
        rep.max_residual = std::max(rep.max_residual, res);
    }
    rep.pass = rep.max_residual < tol;
    return rep;
}

}  // namespace minkgeo
