// Reference kernels. The SIMD variants must reproduce these bit-for-bit:
// keep the operation order fixed (two products, then one add per dot; no
// fused multiply-add -- this translation unit is built with contraction off).

#include <cmath>

#include "minkgeo/kernels.hpp"

namespace minkgeo::kernels {

void TriSoA::reserve(size_t n) {
    ax.reserve(n); ay.reserve(n); az.reserve(n);
    bx.reserve(n); by.reserve(n); bz.reserve(n);
    cx.reserve(n); cy.reserve(n); cz.reserve(n);
    tau_ab.reserve(n); tau_bc.reserve(n); tau_ca.reserve(n);
}

void TriSoA::push(const double a[3], const double b[3], const double c[3],
                  double tab, double tbc, double tca) {
    ax.push_back(a[0]); ay.push_back(a[1]); az.push_back(a[2]);
    bx.push_back(b[0]); by.push_back(b[1]); bz.push_back(b[2]);
    cx.push_back(c[0]); cy.push_back(c[1]); cz.push_back(c[2]);
    tau_ab.push_back(tab); tau_bc.push_back(tbc); tau_ca.push_back(tca);
}

namespace scalar {

void polyline_crossings(const double* ax, const double* ay, const double* bx,
                        const double* by, size_t nseg, const double* ct,
                        const double* st, const double* r, size_t nlines,
                        int32_t* counts) {
    for (size_t i = 0; i < nlines; ++i) {
        const double c = ct[i], s = st[i], ri = r[i];
        int32_t cnt = 0;
        for (size_t j = 0; j < nseg; ++j) {
            const double ta = ax[j] * c + ay[j] * s;
            const double tb = bx[j] * c + by[j] * s;
            const double lo = ta < tb ? ta : tb;
            const double hi = ta < tb ? tb : ta;
            cnt += (ri >= lo && ri < hi) ? 1 : 0;
        }
        counts[i] = cnt;
    }
}

void even_fourier_eval(const double* a, const double* b, size_t order,
                       const double* theta, size_t n, double* out) {
    for (size_t i = 0; i < n; ++i) {
        const double c1 = std::cos(2.0 * theta[i]);
        const double s1 = std::sin(2.0 * theta[i]);
        double acc = a[0];
        if (order >= 1) {
            const double twoc = c1 + c1;
            double ckm1 = 1.0, skm1 = 0.0;
            double ck = c1, sk = s1;
            acc = acc + (a[1] * ck + b[1] * sk);
            for (size_t k = 2; k <= order; ++k) {
                const double cn = twoc * ck - ckm1;
                const double sn = twoc * sk - skm1;
                ckm1 = ck; skm1 = sk;
                ck = cn; sk = sn;
                acc = acc + (a[k] * ck + b[k] * sk);
            }
        }
        out[i] = acc;
    }
}

void trimesh_crossings(const TriSoA& t, const double* px, const double* py,
                       const double* pz, const double* dx, const double* dy,
                       const double* dz, size_t nlines, int32_t* counts) {
    const size_t ntri = t.size();
    for (size_t i = 0; i < nlines; ++i) {
        const double ox = px[i], oy = py[i], oz = pz[i];
        const double ux = dx[i], uy = dy[i], uz = dz[i];
        int32_t cnt = 0;
        for (size_t j = 0; j < ntri; ++j) {
            const double vax = t.ax[j] - ox, vay = t.ay[j] - oy, vaz = t.az[j] - oz;
            const double vbx = t.bx[j] - ox, vby = t.by[j] - oy, vbz = t.bz[j] - oz;
            const double vcx = t.cx[j] - ox, vcy = t.cy[j] - oy, vcz = t.cz[j] - oz;
            // s_e = <d, e1 x e2>, exactly antisymmetric under edge reversal.
            const double abx = vay * vbz - vaz * vby;
            const double aby = vaz * vbx - vax * vbz;
            const double abz = vax * vby - vay * vbx;
            const double bcx = vby * vcz - vbz * vcy;
            const double bcy = vbz * vcx - vbx * vcz;
            const double bcz = vbx * vcy - vby * vcx;
            const double cax = vcy * vaz - vcz * vay;
            const double cay = vcz * vax - vcx * vaz;
            const double caz = vcx * vay - vcy * vax;
            double sab = (ux * abx + uy * aby) + uz * abz;
            double sbc = (ux * bcx + uy * bcy) + uz * bcz;
            double sca = (ux * cax + uy * cay) + uz * caz;
            if (sab == 0.0 && sbc == 0.0 && sca == 0.0) continue;  // coplanar line
            sab = (sab == 0.0) ? t.tau_ab[j] : sab;
            sbc = (sbc == 0.0) ? t.tau_bc[j] : sbc;
            sca = (sca == 0.0) ? t.tau_ca[j] : sca;
            const bool pos = sab > 0.0 && sbc > 0.0 && sca > 0.0;
            const bool neg = sab < 0.0 && sbc < 0.0 && sca < 0.0;
            cnt += (pos || neg) ? 1 : 0;
        }
        counts[i] = cnt;
    }
}

}  // namespace scalar

const KernelTable& kernels_scalar_table() {
    static const KernelTable table{scalar::polyline_crossings, scalar::even_fourier_eval,
                                   scalar::trimesh_crossings};
    return table;
}

}  // namespace minkgeo::kernels
