#pragma once

#include <cstdint>
#include <utility>

namespace minkgeo {

/// Counter-based random stream (Philox2x64-10). A draw is a pure function of
/// (seed, stream, counter), so Monte Carlo loops can be split across any
/// number of workers with no shared state and reproduce bit-identical output.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    /// Raw 128 bits for counter value `ctr`.
    std::pair<uint64_t, uint64_t> block(uint64_t ctr) const;

    /// Uniform double in [0,1) from slot `slot` of sample `idx`.
    /// Slots 2k and 2k+1 share one Philox block.
    double uniform(uint64_t idx, uint32_t slot) const;

    /// Uniform in [a,b).
    double uniform(uint64_t idx, uint32_t slot, double a, double b) const {
        return a + (b - a) * uniform(idx, slot);
    }

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }

private:
    uint64_t seed_;
    uint64_t stream_;
};

}  // namespace minkgeo
