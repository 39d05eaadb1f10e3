#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace minkgeo {

struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    uint64_t n = 0;
    uint64_t seed = 0;
};

/// Runs a Monte Carlo sum split into fixed 65536-sample chunks. Workers pick
/// chunks off a shared counter, but partial sums are stored per chunk and
/// reduced in chunk order, so the estimate is bit-identical for any worker
/// count. chunk_fn(i0, i1, sum, sumsq) must accumulate sample values for
/// indices [i0, i1) in index order.
inline MCEstimate run_mc_chunked(
    uint64_t n, uint64_t seed, int workers,
    const std::function<void(uint64_t, uint64_t, double&, double&)>& chunk_fn) {
    constexpr uint64_t kChunk = 65536;
    const uint64_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> sums(nchunks, 0.0), sumsqs(nchunks, 0.0);

    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const uint64_t i0 = c * kChunk;
            const uint64_t i1 = std::min(n, i0 + kChunk);
            chunk_fn(i0, i1, sums[c], sumsqs[c]);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    double sum = 0.0, sumsq = 0.0;
    for (uint64_t c = 0; c < nchunks; ++c) {
        sum += sums[c];
        sumsq += sumsqs[c];
    }
    MCEstimate est;
    est.n = n;
    est.seed = seed;
    est.value = sum / static_cast<double>(n);
    const double var =
        n > 1 ? std::max(0.0, (sumsq - sum * sum / static_cast<double>(n)) / (static_cast<double>(n) - 1.0))
              : 0.0;
    est.std_error = std::sqrt(var / static_cast<double>(n));
    return est;
}

}  // namespace minkgeo
