#include "minkgeo/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "minkgeo/csv.hpp"
#include "minkgeo/rng.hpp"
#include "minkgeo/sampling.hpp"

namespace minkgeo {

namespace detail {

class NormImpl {
public:
    virtual ~NormImpl() = default;
    virtual int dim() const = 0;
    virtual double eval(const double* v) const = 0;
    virtual GradHess grad_hess(const double* v) const = 0;
    virtual double dual(const double* xi) const = 0;
    virtual bool axis_singular() const { return false; }
    std::string label;
};

namespace {

void require_nonzero(const double* v, int n) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
    if (m == 0.0) throw std::domain_error("derivative undefined at the origin");
}

/// Golden-section maximization of h on [lo,hi], assumed unimodal there.
double golden_max(const std::function<double(double)>& h, double lo, double hi,
                  double tol = 1e-12) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = h(c), fd = h(d);
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        if (fc < fd) {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = h(d);
        } else {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = h(c);
        }
    }
    if (hi - lo > 1e-9)
        throw std::runtime_error("dual norm maximizer did not converge (bracket " +
                                 std::to_string(hi - lo) + ")");
    return h(0.5 * (lo + hi));
}

/// sup over directions of |<xi,u>| / F(u) for a planar norm.
double dual_by_angle_scan(const NormImpl& norm, const double* xi) {
    auto h = [&](double th) {
        const double u[2] = {std::cos(th), std::sin(th)};
        return std::abs(xi[0] * u[0] + xi[1] * u[1]) / norm.eval(u);
    };
    const int grid = 512;
    int best = 0;
    double hbest = -1.0;
    for (int i = 0; i < grid; ++i) {
        const double v = h(M_PI * i / grid);
        if (v > hbest) {
            hbest = v;
            best = i;
        }
    }
    const double step = M_PI / grid;
    return golden_max(h, (best - 1) * step, (best + 1) * step);
}

double dual_by_sphere_scan(const NormImpl& norm, const double* xi) {
    auto h = [&](double th, double ph) {
        const double u[3] = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                             std::cos(th)};
        return std::abs(xi[0] * u[0] + xi[1] * u[1] + xi[2] * u[2]) / norm.eval(u);
    };
    const int nt = 96, np = 192;
    double bt = 0.0, bp = 0.0, hbest = -1.0;
    for (int i = 0; i < nt; ++i) {
        const double th = M_PI * (i + 0.5) / nt;
        for (int j = 0; j < np; ++j) {
            const double ph = 2.0 * M_PI * j / np;
            const double v = h(th, ph);
            if (v > hbest) {
                hbest = v;
                bt = th;
                bp = ph;
            }
        }
    }
    double wt = M_PI / nt, wp = 2.0 * M_PI / np;
    for (int round = 0; round < 8; ++round) {
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        {
            double lo = bt - wt, hi = bt + wt;
            while (hi - lo > 1e-13) {
                double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
                if (h(c, bp) < h(d, bp)) lo = c; else hi = d;
            }
            bt = 0.5 * (lo + hi);
        }
        {
            double lo = bp - wp, hi = bp + wp;
            while (hi - lo > 1e-13) {
                double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
                if (h(bt, c) < h(bt, d)) lo = c; else hi = d;
            }
            bp = 0.5 * (lo + hi);
        }
        wt *= 0.35;
        wp *= 0.35;
    }
    return h(bt, bp);
}

class PNormImpl final : public NormImpl {
public:
    PNormImpl(double p, int n) : p_(p), n_(n) {
        if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must be in (1,inf)");
        if (n != 2 && n != 3) throw std::invalid_argument("dimension must be 2 or 3");
        double ip;
        even_integer_ = std::modf(p / 2.0, &ip) == 0.0;
    }
    int dim() const override { return n_; }
    bool axis_singular() const override { return !even_integer_; }

    double eval(const double* v) const override {
        if (p_ == 2.0) {
            double s = 0.0;
            for (int i = 0; i < n_; ++i) s += v[i] * v[i];
            return std::sqrt(s);
        }
        double m = 0.0;
        for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(v[i]));
        if (m == 0.0) return 0.0;
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += std::pow(std::abs(v[i]) / m, p_);
        return m * std::pow(s, 1.0 / p_);
    }

    GradHess grad_hess(const double* v) const override {
        require_nonzero(v, n_);
        if (axis_singular()) {
            double m = 0.0;
            for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(v[i]));
            for (int i = 0; i < n_; ++i)
                if (std::abs(v[i]) < 1e-12 * m)
                    throw std::domain_error(
                        "p-norm derivatives are singular on coordinate axes for this exponent");
        }
        GradHess out;
        out.half_hess_f2 = SymMat::zero(n_);
        if (p_ == 2.0) {
            const double f = eval(v);
            for (int i = 0; i < n_; ++i) {
                out.grad[static_cast<size_t>(i)] = v[i] / f;
                out.half_hess_f2.at(i, i) = 1.0;
            }
            return out;
        }
        double s = 0.0;
        double ap[3], sg[3];
        for (int i = 0; i < n_; ++i) {
            ap[i] = std::abs(v[i]);
            sg[i] = v[i] >= 0.0 ? 1.0 : -1.0;
            s += std::pow(ap[i], p_);
        }
        const double s1 = std::pow(s, 1.0 / p_ - 1.0);        // S^{1/p-1}
        const double s2 = std::pow(s, 2.0 / p_ - 2.0);        // S^{2/p-2}
        const double s3 = std::pow(s, 2.0 / p_ - 1.0);        // S^{2/p-1}
        double g1[3];
        for (int i = 0; i < n_; ++i) {
            g1[i] = sg[i] * std::pow(ap[i], p_ - 1.0);
            out.grad[static_cast<size_t>(i)] = g1[i] * s1;
        }
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                double h = (2.0 - p_) * s2 * g1[i] * g1[j];
                if (i == j) h += (p_ - 1.0) * s3 * std::pow(ap[i], p_ - 2.0);
                out.half_hess_f2.at(i, j) = h;
            }
        }
        return out;
    }

    double dual(const double* xi) const override {
        const double q = p_ / (p_ - 1.0);
        double m = 0.0;
        for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(xi[i]));
        if (m == 0.0) return 0.0;
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += std::pow(std::abs(xi[i]) / m, q);
        return m * std::pow(s, 1.0 / q);
    }

    double p_;
    int n_;
    bool even_integer_;
};

class QuadImpl final : public NormImpl {
public:
    explicit QuadImpl(const SymMat& A) : A_(A), Ainv_(A) {
        const int n = A.n;
        if (n != 2 && n != 3) throw std::invalid_argument("dimension must be 2 or 3");
        auto ev = sym_eigenvalues(A);
        if (ev[0] <= 0.0)
            throw std::invalid_argument("quadratic norm matrix must be positive definite");
        invert();
    }
    int dim() const override { return A_.n; }

    double eval(const double* v) const override { return std::sqrt(quad(A_, v)); }

    GradHess grad_hess(const double* v) const override {
        require_nonzero(v, A_.n);
        GradHess out;
        out.half_hess_f2 = A_;
        const double f = eval(v);
        for (int i = 0; i < A_.n; ++i) {
            double av = 0.0;
            for (int j = 0; j < A_.n; ++j) av += A_.at(i, j) * v[j];
            out.grad[static_cast<size_t>(i)] = av / f;
        }
        return out;
    }

    double dual(const double* xi) const override { return std::sqrt(quad(Ainv_, xi)); }

private:
    static double quad(const SymMat& M, const double* v) {
        double s = 0.0;
        for (int i = 0; i < M.n; ++i)
            for (int j = 0; j < M.n; ++j) s += v[i] * M.at(i, j) * v[j];
        return s;
    }
    void invert() {
        const int n = A_.n;
        Ainv_ = SymMat::zero(n);
        if (n == 2) {
            const double det = A_.at(0, 0) * A_.at(1, 1) - A_.at(0, 1) * A_.at(1, 0);
            Ainv_.at(0, 0) = A_.at(1, 1) / det;
            Ainv_.at(1, 1) = A_.at(0, 0) / det;
            Ainv_.at(0, 1) = Ainv_.at(1, 0) = -A_.at(0, 1) / det;
        } else {
            const auto& a = A_;
            double det = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
                         a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
                         a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
            auto cof = [&](int i, int j) {
                const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                return a.at(r0, c0) * a.at(r1, c1) - a.at(r0, c1) * a.at(r1, c0);
            };
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) Ainv_.at(i, j) = cof(j, i) / det;
        }
    }

    SymMat A_;
    SymMat Ainv_;
};

class CustomS1Impl final : public NormImpl {
public:
    explicit CustomS1Impl(EvenFourierSeries rho) : rho_(std::move(rho)) {
        if (rho_.min_on_grid() <= 0.0)
            throw std::invalid_argument("custom norm restriction must be strictly positive");
    }
    int dim() const override { return 2; }

    double eval(const double* v) const override {
        const double r = std::hypot(v[0], v[1]);
        if (r == 0.0) return 0.0;
        return r * rho_(std::atan2(v[1], v[0]));
    }

    GradHess grad_hess(const double* v) const override {
        require_nonzero(v, 2);
        const double th = std::atan2(v[1], v[0]);
        const double c = std::cos(th), s = std::sin(th);
        const double rho = rho_(th), d1 = rho_.derivative(th), d2 = rho_.second_derivative(th);
        GradHess out;
        out.grad[0] = c * rho - s * d1;
        out.grad[1] = s * rho + c * d1;
        // (1/2)Hess(F^2) = F Hess(F) + grad grad^T; Hess(F) = (rho+rho'')/r * [[s^2,-sc],[-sc,c^2]]
        const double k = rho * (rho + d2);
        out.half_hess_f2 = SymMat::zero(2);
        out.half_hess_f2.at(0, 0) = k * s * s + out.grad[0] * out.grad[0];
        out.half_hess_f2.at(1, 1) = k * c * c + out.grad[1] * out.grad[1];
        out.half_hess_f2.at(0, 1) = out.half_hess_f2.at(1, 0) =
            -k * s * c + out.grad[0] * out.grad[1];
        return out;
    }

    double dual(const double* xi) const override { return dual_by_angle_scan(*this, xi); }

private:
    EvenFourierSeries rho_;
};

class CustomS2Impl final : public NormImpl {
public:
    explicit CustomS2Impl(EvenSphericalExpansion rho) : rho_(std::move(rho)) {
        if (rho_.min_on_grid() <= 0.0)
            throw std::invalid_argument("custom norm restriction must be strictly positive");
    }
    int dim() const override { return 3; }

    double eval(const double* v) const override {
        const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (r == 0.0) return 0.0;
        return r * rho_(Vec3{v[0] / r, v[1] / r, v[2] / r});
    }

    GradHess grad_hess(const double* v) const override {
        require_nonzero(v, 3);
        const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        GradHess out;
        out.half_hess_f2 = SymMat::zero(3);
        // 5-point differences for the gradient, 3-point for (1/2)Hess(F^2).
        const double hg = 1e-3 * r;
        for (int i = 0; i < 3; ++i) {
            double w[4][3];
            for (int k = 0; k < 4; ++k)
                for (int j = 0; j < 3; ++j) w[k][j] = v[j];
            w[0][i] += 2 * hg;
            w[1][i] += hg;
            w[2][i] -= hg;
            w[3][i] -= 2 * hg;
            out.grad[static_cast<size_t>(i)] =
                (-eval(w[0]) + 8.0 * eval(w[1]) - 8.0 * eval(w[2]) + eval(w[3])) / (12.0 * hg);
        }
        const double hh = 1e-4 * r;
        auto G = [&](const double* w) {
            const double f = eval(w);
            return 0.5 * f * f;
        };
        for (int i = 0; i < 3; ++i) {
            for (int j = i; j < 3; ++j) {
                double val;
                if (i == j) {
                    double wp[3], wm[3];
                    for (int k = 0; k < 3; ++k) wp[k] = wm[k] = v[k];
                    wp[i] += hh;
                    wm[i] -= hh;
                    val = (G(wp) - 2.0 * G(v) + G(wm)) / (hh * hh);
                } else {
                    double wpp[3], wpm[3], wmp[3], wmm[3];
                    for (int k = 0; k < 3; ++k) wpp[k] = wpm[k] = wmp[k] = wmm[k] = v[k];
                    wpp[i] += hh; wpp[j] += hh;
                    wpm[i] += hh; wpm[j] -= hh;
                    wmp[i] -= hh; wmp[j] += hh;
                    wmm[i] -= hh; wmm[j] -= hh;
                    val = (G(wpp) - G(wpm) - G(wmp) + G(wmm)) / (4.0 * hh * hh);
                }
                out.half_hess_f2.at(i, j) = out.half_hess_f2.at(j, i) = val;
            }
        }
        return out;
    }

    double dual(const double* xi) const override { return dual_by_sphere_scan(*this, xi); }

private:
    EvenSphericalExpansion rho_;
};

class RestrictedImpl final : public NormImpl {
public:
    RestrictedImpl(std::shared_ptr<const NormImpl> base, Vec3 e1, Vec3 e2)
        : base_(std::move(base)), e1_(e1), e2_(e2) {
        if (base_->dim() != 3)
            throw std::invalid_argument("restricted norm needs a 3D base norm");
        if (std::abs(e1.norm2() - 1.0) > 1e-9 || std::abs(e2.norm2() - 1.0) > 1e-9 ||
            std::abs(e1.dot(e2)) > 1e-9)
            throw std::invalid_argument("restricted norm frame must be orthonormal");
    }
    int dim() const override { return 2; }
    bool axis_singular() const override { return base_->axis_singular(); }

    double eval(const double* v) const override {
        const Vec3 w = v[0] * e1_ + v[1] * e2_;
        return base_->eval(&w.x);
    }

    GradHess grad_hess(const double* v) const override {
        const Vec3 w = v[0] * e1_ + v[1] * e2_;
        const GradHess g3 = base_->grad_hess(&w.x);
        GradHess out;
        out.grad[0] = g3.grad[0] * e1_.x + g3.grad[1] * e1_.y + g3.grad[2] * e1_.z;
        out.grad[1] = g3.grad[0] * e2_.x + g3.grad[1] * e2_.y + g3.grad[2] * e2_.z;
        out.half_hess_f2 = SymMat::zero(2);
        const double b[2][3] = {{e1_.x, e1_.y, e1_.z}, {e2_.x, e2_.y, e2_.z}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        s += b[i][k] * g3.half_hess_f2.at(k, l) * b[j][l];
                out.half_hess_f2.at(i, j) = s;
            }
        return out;
    }

    double dual(const double* xi) const override { return dual_by_angle_scan(*this, xi); }

private:
    std::shared_ptr<const NormImpl> base_;
    Vec3 e1_, e2_;
};

}  // namespace
}  // namespace detail

MinkowskiNorm::MinkowskiNorm(std::shared_ptr<const detail::NormImpl> impl)
    : impl_(std::move(impl)) {}

MinkowskiNorm MinkowskiNorm::p_norm(double p, int dim) {
    auto impl = std::make_shared<detail::PNormImpl>(p, dim);
    impl->label = "p:" + std::to_string(p);
    return MinkowskiNorm(impl);
}

MinkowskiNorm MinkowskiNorm::quadratic(const SymMat& A) {
    auto impl = std::make_shared<detail::QuadImpl>(A);
    impl->label = "quad";
    return MinkowskiNorm(impl);
}

MinkowskiNorm MinkowskiNorm::custom_s1(EvenFourierSeries rho) {
    auto impl = std::make_shared<detail::CustomS1Impl>(std::move(rho));
    impl->label = "custom-s1";
    return MinkowskiNorm(impl);
}

MinkowskiNorm MinkowskiNorm::custom_s2(EvenSphericalExpansion rho) {
    auto impl = std::make_shared<detail::CustomS2Impl>(std::move(rho));
    impl->label = "custom-s2";
    return MinkowskiNorm(impl);
}

MinkowskiNorm MinkowskiNorm::restricted(const MinkowskiNorm& base, Vec3 e1, Vec3 e2) {
    auto impl = std::make_shared<detail::RestrictedImpl>(base.impl_, e1, e2);
    impl->label = base.label() + "|plane";
    return MinkowskiNorm(impl);
}

int MinkowskiNorm::dim() const { return impl_->dim(); }
const std::string& MinkowskiNorm::label() const { return impl_->label; }
bool MinkowskiNorm::axis_singular() const { return impl_->axis_singular(); }

MinkowskiNorm MinkowskiNorm::with_label(std::string label) const {
    auto copy = impl_;
    // labels are cosmetic; clone the pointer holder to keep impls immutable
    struct Labeled : detail::NormImpl {
        std::shared_ptr<const detail::NormImpl> inner;
        int dim() const override { return inner->dim(); }
        double eval(const double* v) const override { return inner->eval(v); }
        GradHess grad_hess(const double* v) const override { return inner->grad_hess(v); }
        double dual(const double* xi) const override { return inner->dual(xi); }
        bool axis_singular() const override { return inner->axis_singular(); }
    };
    auto l = std::make_shared<Labeled>();
    l->inner = copy;
    l->label = std::move(label);
    return MinkowskiNorm(l);
}

double MinkowskiNorm::evaluate(std::span<const double> v) const {
    if (static_cast<int>(v.size()) != dim())
        throw std::invalid_argument("evaluate: vector has wrong dimension");
    return impl_->eval(v.data());
}

GradHess MinkowskiNorm::gradient_and_hessian(std::span<const double> v) const {
    if (static_cast<int>(v.size()) != dim())
        throw std::invalid_argument("gradient_and_hessian: vector has wrong dimension");
    return impl_->grad_hess(v.data());
}

double MinkowskiNorm::dual_evaluate(std::span<const double> xi) const {
    if (static_cast<int>(xi.size()) != dim())
        throw std::invalid_argument("dual_evaluate: covector has wrong dimension");
    return impl_->dual(xi.data());
}

AxiomReport MinkowskiNorm::check_axioms(int n_samples, uint64_t seed) const {
    if (n_samples < 1) throw std::invalid_argument("check_axioms: need n_samples >= 1");
    const int n = dim();
    CounterRng rng(seed, /*stream=*/0x6178696f6dULL);
    AxiomReport rep;
    rep.samples = n_samples;
    rep.min_hessian_eigenvalue = std::numeric_limits<double>::infinity();
    const double min_axis_angle = 1e-3;

    for (int i = 0; i < n_samples; ++i) {
        // off-axis direction: axes are measure zero in all downstream integrals
        double v[3];
        if (!sample_offaxis_direction(rng, static_cast<uint64_t>(i), 8, n, min_axis_angle, v))
            continue;
        const double scale = 0.5 + 1.5 * rng.uniform(static_cast<uint64_t>(i), 1);
        for (int k = 0; k < n; ++k) v[k] *= scale;
        double r2 = 0.0;
        for (int k = 0; k < n; ++k) r2 += v[k] * v[k];
        const double vnorm = std::sqrt(r2);

        const double f = impl_->eval(v);
        if (f <= 0.0)
            rep.max_positivity_violation =
                std::max(rep.max_positivity_violation, f < 0.0 ? -f / vnorm : 1.0);

        const double lambda = -3.0 + 6.0 * rng.uniform(static_cast<uint64_t>(i), 2);
        double lv[3];
        for (int k = 0; k < n; ++k) lv[k] = lambda * v[k];
        const double fl = impl_->eval(lv);
        rep.max_homogeneity_residual =
            std::max(rep.max_homogeneity_residual, std::abs(fl - std::abs(lambda) * f) / f);

        const GradHess gh = impl_->grad_hess(v);
        double euler = -f;
        for (int k = 0; k < n; ++k) euler += gh.grad[static_cast<size_t>(k)] * v[k];
        rep.max_euler_residual = std::max(rep.max_euler_residual, std::abs(euler) / f);
        const auto ev = sym_eigenvalues(gh.half_hess_f2);
        const double lmin = ev[0], lmax = ev[static_cast<size_t>(n - 1)];
        rep.min_hessian_eigenvalue = std::min(rep.min_hessian_eigenvalue, lmin);
        if (lmin <= 0.0)
            rep.max_hessian_violation =
                std::max(rep.max_hessian_violation, -lmin / std::max(std::abs(lmax), 1e-300));
    }
    rep.pass = rep.max_positivity_violation < 1e-8 && rep.max_homogeneity_residual < 1e-8 &&
               rep.max_euler_residual < 1e-8 && rep.max_hessian_violation < 1e-8;
    return rep;
}

namespace {

MinkowskiNorm custom_from_csv(const std::string& path) {
    auto rows = read_csv_rows(path);
    if (rows.empty()) throw std::invalid_argument("custom norm CSV is empty: " + path);
    const size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw std::invalid_argument("custom norm CSV has ragged rows: " + path);

    if (cols == 2) {
        // (angle, value) on the uniform grid 2*pi*j/n
        const size_t nrows = rows.size();
        std::vector<double> samples(nrows);
        for (size_t j = 0; j < nrows; ++j) {
            const double expect = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(nrows);
            if (std::abs(rows[j][0] - expect) > 1e-6)
                throw std::invalid_argument(
                    "custom S1 norm CSV must sample the uniform angle grid 2*pi*j/n");
            samples[j] = rows[j][1];
        }
        const int order = std::min<int>(128, static_cast<int>((nrows - 1) / 4));
        return MinkowskiNorm::custom_s1(EvenFourierSeries::fit(samples, order));
    }
    if (cols == 3) {
        // (theta, phi, value) on a regular grid: theta=(i+0.5)pi/nt, phi=2pi j/np
        size_t np = 1;
        while (np < rows.size() && rows[np][0] == rows[0][0]) ++np;
        const size_t nt = rows.size() / np;
        if (nt * np != rows.size())
            throw std::invalid_argument("custom S2 norm CSV must be a full theta x phi grid");
        std::vector<double> grid(rows.size());
        for (size_t i = 0; i < nt; ++i)
            for (size_t j = 0; j < np; ++j) {
                const auto& r = rows[i * np + j];
                const double et = M_PI * (static_cast<double>(i) + 0.5) / static_cast<double>(nt);
                const double ep = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(np);
                if (std::abs(r[0] - et) > 1e-6 || std::abs(r[1] - ep) > 1e-6)
                    throw std::invalid_argument(
                        "custom S2 norm CSV grid must be theta=(i+0.5)pi/nt, phi=2pi j/np in row-major order");
                grid[i * np + j] = r[2];
            }
        auto interp = [grid, nt, np](Vec3 u) {
            const double th = std::acos(std::clamp(u.z, -1.0, 1.0));
            double ph = std::atan2(u.y, u.x);
            if (ph < 0) ph += 2.0 * M_PI;
            double ti = th / M_PI * static_cast<double>(nt) - 0.5;
            double pj = ph / (2.0 * M_PI) * static_cast<double>(np);
            ti = std::clamp(ti, 0.0, static_cast<double>(nt - 1));
            const long i0 = std::min<long>(static_cast<long>(ti), static_cast<long>(nt) - 1);
            const long i1 = std::min<long>(i0 + 1, static_cast<long>(nt) - 1);
            const double ft = ti - static_cast<double>(i0);
            const long j0 = static_cast<long>(pj) % static_cast<long>(np);
            const long j1 = (j0 + 1) % static_cast<long>(np);
            const double fp = pj - std::floor(pj);
            const double v00 = grid[static_cast<size_t>(i0) * np + static_cast<size_t>(j0)];
            const double v01 = grid[static_cast<size_t>(i0) * np + static_cast<size_t>(j1)];
            const double v10 = grid[static_cast<size_t>(i1) * np + static_cast<size_t>(j0)];
            const double v11 = grid[static_cast<size_t>(i1) * np + static_cast<size_t>(j1)];
            return (1 - ft) * ((1 - fp) * v00 + fp * v01) + ft * ((1 - fp) * v10 + fp * v11);
        };
        // bilinear interpolation is only approximately even; allow for that
        return MinkowskiNorm::custom_s2(EvenSphericalExpansion::fit(interp, 16, 1e-3));
    }
    throw std::invalid_argument("custom norm CSV must have 2 or 3 columns");
}

}  // namespace

MinkowskiNorm parse_norm_spec(const std::string& spec, int dim_hint) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("malformed norm spec '" + spec +
                                    "' (expected p:<x>, quad:<...>, or custom:<path>)");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "p") {
        size_t used = 0;
        double p;
        try {
            p = std::stod(rest, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed norm spec: bad exponent '" + rest + "'");
        }
        if (used != rest.size() || !(p > 1.0) || !std::isfinite(p))
            throw std::invalid_argument("norm exponent must be a float in (1,inf): " + rest);
        return MinkowskiNorm::p_norm(p, dim_hint).with_label(spec);
    }
    if (kind == "quad") {
        std::vector<double> vals;
        std::stringstream ss(rest);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed quad norm spec: " + spec);
            }
        }
        SymMat A;
        if (vals.size() == 3) {
            A = SymMat::zero(2);
            A.at(0, 0) = vals[0];
            A.at(0, 1) = A.at(1, 0) = vals[1];
            A.at(1, 1) = vals[2];
        } else if (vals.size() == 6) {
            A = SymMat::zero(3);
            A.at(0, 0) = vals[0];
            A.at(0, 1) = A.at(1, 0) = vals[1];
            A.at(0, 2) = A.at(2, 0) = vals[2];
            A.at(1, 1) = vals[3];
            A.at(1, 2) = A.at(2, 1) = vals[4];
            A.at(2, 2) = vals[5];
        } else {
            throw std::invalid_argument(
                "quad norm spec needs 3 entries (2D: a11,a12,a22) or 6 (3D upper triangle)");
        }
        return MinkowskiNorm::quadratic(A).with_label(spec);
    }
    if (kind == "custom") return custom_from_csv(rest).with_label(spec);
    throw std::invalid_argument("unknown norm kind '" + kind + "' in spec " + spec);
}

}  // namespace minkgeo
