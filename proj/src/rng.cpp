#include "minkgeo/rng.hpp"

namespace minkgeo {

namespace {

inline void mulhilo(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<uint64_t>(p >> 64);
    lo = static_cast<uint64_t>(p);
}

constexpr uint64_t kPhiloxM = 0xD2B74407B1CE6E93ULL;
constexpr uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::pair<uint64_t, uint64_t> CounterRng::block(uint64_t ctr) const {
    uint64_t x0 = ctr;
    uint64_t x1 = stream_;
    uint64_t key = seed_;
    for (int round = 0; round < 10; ++round) {
        uint64_t hi, lo;
        mulhilo(kPhiloxM, x0, hi, lo);
        x0 = hi ^ key ^ x1;
        x1 = lo;
        key += kWeyl;
    }
    return {x0, x1};
}

double CounterRng::uniform(uint64_t idx, uint32_t slot) const {
    // Two doubles per block; the counter packs (sample index, slot pair).
    uint64_t ctr = idx * 0x10000ULL + (slot >> 1);
    auto [r0, r1] = block(ctr);
    uint64_t bits = (slot & 1U) ? r1 : r0;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace minkgeo
