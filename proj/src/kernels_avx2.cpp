// AVX2 variants. Operation order mirrors kernels_scalar.cpp exactly (separate
// mul/add, no FMA), so integer crossing counts and Fourier values are
// bit-equal to the reference across ISAs. Built only on x86-64, with -mavx2.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "minkgeo/kernels.hpp"

namespace minkgeo::kernels {

const KernelTable& kernels_scalar_table();

namespace avx2 {

namespace {
inline __m256d dot2(__m256d x0, __m256d c, __m256d y0, __m256d s) {
    return _mm256_add_pd(_mm256_mul_pd(x0, c), _mm256_mul_pd(y0, s));
}
}  // namespace

void polyline_crossings(const double* ax, const double* ay, const double* bx,
                        const double* by, size_t nseg, const double* ct,
                        const double* st, const double* r, size_t nlines,
                        int32_t* counts) {
    const size_t main = nlines & ~size_t(3);
    for (size_t i = 0; i < main; i += 4) {
        const __m256d c = _mm256_loadu_pd(ct + i);
        const __m256d s = _mm256_loadu_pd(st + i);
        const __m256d ri = _mm256_loadu_pd(r + i);
        __m256i cnt = _mm256_setzero_si256();
        for (size_t j = 0; j < nseg; ++j) {
            const __m256d ta = dot2(_mm256_set1_pd(ax[j]), c, _mm256_set1_pd(ay[j]), s);
            const __m256d tb = dot2(_mm256_set1_pd(bx[j]), c, _mm256_set1_pd(by[j]), s);
            const __m256d lo = _mm256_min_pd(ta, tb);
            const __m256d hi = _mm256_max_pd(ta, tb);
            const __m256d m = _mm256_and_pd(_mm256_cmp_pd(ri, lo, _CMP_GE_OQ),
                                            _mm256_cmp_pd(ri, hi, _CMP_LT_OQ));
            cnt = _mm256_sub_epi64(cnt, _mm256_castpd_si256(m));
        }
        alignas(32) int64_t lane[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane), cnt);
        for (int k = 0; k < 4; ++k) counts[i + static_cast<size_t>(k)] = static_cast<int32_t>(lane[k]);
    }
    if (main < nlines) {
        kernels_scalar_table().polyline_crossings(ax, ay, bx, by, nseg, ct + main, st + main,
                                                  r + main, nlines - main, counts + main);
    }
}

void even_fourier_eval(const double* a, const double* b, size_t order,
                       const double* theta, size_t n, double* out) {
    const size_t main = n & ~size_t(3);
    for (size_t i = 0; i < main; i += 4) {
        alignas(32) double cb[4], sb[4];
        for (int k = 0; k < 4; ++k) {
            cb[k] = std::cos(2.0 * theta[i + static_cast<size_t>(k)]);
            sb[k] = std::sin(2.0 * theta[i + static_cast<size_t>(k)]);
        }
        const __m256d c1 = _mm256_load_pd(cb);
        const __m256d s1 = _mm256_load_pd(sb);
        __m256d acc = _mm256_set1_pd(a[0]);
        if (order >= 1) {
            const __m256d twoc = _mm256_add_pd(c1, c1);
            __m256d ckm1 = _mm256_set1_pd(1.0), skm1 = _mm256_setzero_pd();
            __m256d ck = c1, sk = s1;
            acc = _mm256_add_pd(acc, dot2(_mm256_set1_pd(a[1]), ck, _mm256_set1_pd(b[1]), sk));
            for (size_t k = 2; k <= order; ++k) {
                const __m256d cn = _mm256_sub_pd(_mm256_mul_pd(twoc, ck), ckm1);
                const __m256d sn = _mm256_sub_pd(_mm256_mul_pd(twoc, sk), skm1);
                ckm1 = ck; skm1 = sk;
                ck = cn; sk = sn;
                acc = _mm256_add_pd(acc, dot2(_mm256_set1_pd(a[k]), ck, _mm256_set1_pd(b[k]), sk));
            }
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (main < n) {
        kernels_scalar_table().even_fourier_eval(a, b, order, theta + main, n - main, out + main);
    }
}

void trimesh_crossings(const TriSoA& t, const double* px, const double* py,
                       const double* pz, const double* dx, const double* dy,
                       const double* dz, size_t nlines, int32_t* counts) {
    const size_t ntri = t.size();
    const size_t main = ntri & ~size_t(3);
    const __m256d zero = _mm256_setzero_pd();
    for (size_t i = 0; i < nlines; ++i) {
        const __m256d ox = _mm256_set1_pd(px[i]), oy = _mm256_set1_pd(py[i]),
                      oz = _mm256_set1_pd(pz[i]);
        const __m256d ux = _mm256_set1_pd(dx[i]), uy = _mm256_set1_pd(dy[i]),
                      uz = _mm256_set1_pd(dz[i]);
        __m256i cnt = _mm256_setzero_si256();
        for (size_t j = 0; j < main; j += 4) {
            const __m256d vax = _mm256_sub_pd(_mm256_loadu_pd(&t.ax[j]), ox);
            const __m256d vay = _mm256_sub_pd(_mm256_loadu_pd(&t.ay[j]), oy);
            const __m256d vaz = _mm256_sub_pd(_mm256_loadu_pd(&t.az[j]), oz);
            const __m256d vbx = _mm256_sub_pd(_mm256_loadu_pd(&t.bx[j]), ox);
            const __m256d vby = _mm256_sub_pd(_mm256_loadu_pd(&t.by[j]), oy);
            const __m256d vbz = _mm256_sub_pd(_mm256_loadu_pd(&t.bz[j]), oz);
            const __m256d vcx = _mm256_sub_pd(_mm256_loadu_pd(&t.cx[j]), ox);
            const __m256d vcy = _mm256_sub_pd(_mm256_loadu_pd(&t.cy[j]), oy);
            const __m256d vcz = _mm256_sub_pd(_mm256_loadu_pd(&t.cz[j]), oz);

            const __m256d abx = _mm256_sub_pd(_mm256_mul_pd(vay, vbz), _mm256_mul_pd(vaz, vby));
            const __m256d aby = _mm256_sub_pd(_mm256_mul_pd(vaz, vbx), _mm256_mul_pd(vax, vbz));
            const __m256d abz = _mm256_sub_pd(_mm256_mul_pd(vax, vby), _mm256_mul_pd(vay, vbx));
            const __m256d bcx = _mm256_sub_pd(_mm256_mul_pd(vby, vcz), _mm256_mul_pd(vbz, vcy));
            const __m256d bcy = _mm256_sub_pd(_mm256_mul_pd(vbz, vcx), _mm256_mul_pd(vbx, vcz));
            const __m256d bcz = _mm256_sub_pd(_mm256_mul_pd(vbx, vcy), _mm256_mul_pd(vby, vcx));
            const __m256d cax = _mm256_sub_pd(_mm256_mul_pd(vcy, vaz), _mm256_mul_pd(vcz, vay));
            const __m256d cay = _mm256_sub_pd(_mm256_mul_pd(vcz, vax), _mm256_mul_pd(vcx, vaz));
            const __m256d caz = _mm256_sub_pd(_mm256_mul_pd(vcx, vay), _mm256_mul_pd(vcy, vax));

            __m256d sab = _mm256_add_pd(dot2(ux, abx, uy, aby), _mm256_mul_pd(uz, abz));
            __m256d sbc = _mm256_add_pd(dot2(ux, bcx, uy, bcy), _mm256_mul_pd(uz, bcz));
            __m256d sca = _mm256_add_pd(dot2(ux, cax, uy, cay), _mm256_mul_pd(uz, caz));

            const __m256d zab = _mm256_cmp_pd(sab, zero, _CMP_EQ_OQ);
            const __m256d zbc = _mm256_cmp_pd(sbc, zero, _CMP_EQ_OQ);
            const __m256d zca = _mm256_cmp_pd(sca, zero, _CMP_EQ_OQ);
            const __m256d allz = _mm256_and_pd(_mm256_and_pd(zab, zbc), zca);

            sab = _mm256_blendv_pd(sab, _mm256_loadu_pd(&t.tau_ab[j]), zab);
            sbc = _mm256_blendv_pd(sbc, _mm256_loadu_pd(&t.tau_bc[j]), zbc);
            sca = _mm256_blendv_pd(sca, _mm256_loadu_pd(&t.tau_ca[j]), zca);

            const __m256d pos = _mm256_and_pd(_mm256_and_pd(_mm256_cmp_pd(sab, zero, _CMP_GT_OQ),
                                                            _mm256_cmp_pd(sbc, zero, _CMP_GT_OQ)),
                                              _mm256_cmp_pd(sca, zero, _CMP_GT_OQ));
            const __m256d neg = _mm256_and_pd(_mm256_and_pd(_mm256_cmp_pd(sab, zero, _CMP_LT_OQ),
                                                            _mm256_cmp_pd(sbc, zero, _CMP_LT_OQ)),
                                              _mm256_cmp_pd(sca, zero, _CMP_LT_OQ));
            const __m256d hit = _mm256_andnot_pd(allz, _mm256_or_pd(pos, neg));
            cnt = _mm256_sub_epi64(cnt, _mm256_castpd_si256(hit));
        }
        alignas(32) int64_t lane[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane), cnt);
        int32_t total = static_cast<int32_t>(lane[0] + lane[1] + lane[2] + lane[3]);
        if (main < ntri) {
            // scalar tail, evaluated exactly as the reference kernel
            const double ex = px[i], ey = py[i], ez = pz[i];
            const double wx = dx[i], wy = dy[i], wz = dz[i];
            for (size_t j = main; j < ntri; ++j) {
                const double vax = t.ax[j] - ex, vay = t.ay[j] - ey, vaz = t.az[j] - ez;
                const double vbx = t.bx[j] - ex, vby = t.by[j] - ey, vbz = t.bz[j] - ez;
                const double vcx = t.cx[j] - ex, vcy = t.cy[j] - ey, vcz = t.cz[j] - ez;
                const double abx = vay * vbz - vaz * vby;
                const double aby = vaz * vbx - vax * vbz;
                const double abz = vax * vby - vay * vbx;
                const double bcx = vby * vcz - vbz * vcy;
                const double bcy = vbz * vcx - vbx * vcz;
                const double bcz = vbx * vcy - vby * vcx;
                const double cax = vcy * vaz - vcz * vay;
                const double cay = vcz * vax - vcx * vaz;
                const double caz = vcx * vay - vcy * vax;
                double sab = (wx * abx + wy * aby) + wz * abz;
                double sbc = (wx * bcx + wy * bcy) + wz * bcz;
                double sca = (wx * cax + wy * cay) + wz * caz;
                if (sab == 0.0 && sbc == 0.0 && sca == 0.0) continue;
                sab = (sab == 0.0) ? t.tau_ab[j] : sab;
                sbc = (sbc == 0.0) ? t.tau_bc[j] : sbc;
                sca = (sca == 0.0) ? t.tau_ca[j] : sca;
                const bool p = sab > 0.0 && sbc > 0.0 && sca > 0.0;
                const bool q = sab < 0.0 && sbc < 0.0 && sca < 0.0;
                total += (p || q) ? 1 : 0;
            }
        }
        counts[i] = total;
    }
}

}  // namespace avx2

const KernelTable& kernels_avx2_table() {
    static const KernelTable table{avx2::polyline_crossings, avx2::even_fourier_eval,
                                   avx2::trimesh_crossings};
    return table;
}

}  // namespace minkgeo::kernels

#endif  // x86-64
