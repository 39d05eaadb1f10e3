#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "minkgeo/kernels.hpp"

namespace minkgeo::kernels {

const KernelTable& kernels_scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& kernels_avx2_table();
#endif

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "?";
}

bool isa_supported(Isa isa) {
    if (isa == Isa::scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
    if (isa == Isa::avx2) return __builtin_cpu_supports("avx2") != 0;
#endif
    return false;
}

namespace {
Isa detect_isa() {
    if (const char* env = std::getenv("MINKGEO_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!isa_supported(Isa::avx2))
                throw std::runtime_error("MINKGEO_KERNELS=avx2 but CPU lacks AVX2");
            return Isa::avx2;
        }
    }
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}
}  // namespace

Isa active_isa() {
    static const Isa isa = detect_isa();
    return isa;
}

const KernelTable& kernels_for(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
    if (isa == Isa::avx2) {
        if (!isa_supported(Isa::avx2)) throw std::runtime_error("AVX2 not supported on this CPU");
        return kernels_avx2_table();
    }
#endif
    return kernels_scalar_table();
}

const KernelTable& active_kernels() { return kernels_for(active_isa()); }

}  // namespace minkgeo::kernels
