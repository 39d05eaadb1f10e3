#include "minkgeo/sampling.hpp"

#include <cmath>
#include <limits>

namespace minkgeo {

bool sample_offaxis_direction(const CounterRng& rng, uint64_t idx, uint32_t slot_base, int dim,
                              double min_angle, double* out) {
    const double floor_ratio = std::sin(min_angle);
    for (uint32_t attempt = 0; attempt < 200; ++attempt) {
        double norm2 = 0.0, minabs = std::numeric_limits<double>::infinity();
        for (int k = 0; k < dim; ++k) {
            out[k] = 2.0 * rng.uniform(idx, slot_base + attempt * 4 + static_cast<uint32_t>(k)) - 1.0;
            norm2 += out[k] * out[k];
            minabs = std::min(minabs, std::abs(out[k]));
        }
        const double r = std::sqrt(norm2);
        if (r > 1e-3 && minabs / r > floor_ratio) return true;
    }
    return false;
}

}  // namespace minkgeo
