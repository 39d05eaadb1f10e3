#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace minkgeo::kernels {

enum class Isa { scalar = 0, avx2 = 1 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Active instruction set: AVX2 when the CPU supports it, unless overridden
/// with MINKGEO_KERNELS=scalar|avx2 in the environment.
Isa active_isa();

/// Triangle soup in structure-of-arrays form. tau_* are the +-1 ownership
/// signs used to break ties when a line passes exactly through an edge
/// shared by two triangles (each side sees the opposite sign).
struct TriSoA {
    std::vector<double> ax, ay, az;
    std::vector<double> bx, by, bz;
    std::vector<double> cx, cy, cz;
    std::vector<double> tau_ab, tau_bc, tau_ca;

    size_t size() const { return ax.size(); }
    void reserve(size_t n);
    void push(const double a[3], const double b[3], const double c[3],
              double tab, double tbc, double tca);
};

struct KernelTable {
    /// counts[i] = number of segments (a_j,b_j) whose projections onto the
    /// line normal (ct[i],st[i]) straddle r[i] under the half-open rule
    /// r in [min,max).
    void (*polyline_crossings)(const double* ax, const double* ay, const double* bx,
                               const double* by, size_t nseg, const double* ct,
                               const double* st, const double* r, size_t nlines,
                               int32_t* counts);

    /// out[i] = a[0] + sum_k a[k] cos(2k theta_i) + b[k] sin(2k theta_i),
    /// evaluated with the angle-doubling recurrence (identical operation
    /// order in every variant, so results are bit-equal across ISAs).
    void (*even_fourier_eval)(const double* a, const double* b, size_t order,
                              const double* theta, size_t n, double* out);

    /// counts[i] = triangles of `tris` crossed by line (p_i, d_i), using the
    /// signed edge-side predicates with tau tie-breaks.
    void (*trimesh_crossings)(const TriSoA& tris, const double* px, const double* py,
                              const double* pz, const double* dx, const double* dy,
                              const double* dz, size_t nlines, int32_t* counts);
};

const KernelTable& kernels_for(Isa isa);
const KernelTable& active_kernels();

}  // namespace minkgeo::kernels
