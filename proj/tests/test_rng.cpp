#include <doctest.h>

#include <cmath>
#include <set>

#include "minkgeo/rng.hpp"

using minkgeo::CounterRng;

TEST_CASE("counter rng is a pure function of (seed, stream, index, slot)") {
    CounterRng a(42, 7), b(42, 7);
    for (uint64_t i = 0; i < 100; ++i)
        for (uint32_t s = 0; s < 6; ++s) CHECK(a.uniform(i, s) == b.uniform(i, s));
}

TEST_CASE("different seeds and streams decorrelate") {
    CounterRng a(1, 0), b(2, 0), c(1, 1);
    int same_ab = 0, same_ac = 0;
    for (uint64_t i = 0; i < 1000; ++i) {
        if (a.uniform(i, 0) == b.uniform(i, 0)) ++same_ab;
        if (a.uniform(i, 0) == c.uniform(i, 0)) ++same_ac;
    }
    CHECK(same_ab == 0);
    CHECK(same_ac == 0);
}

TEST_CASE("uniforms live in [0,1) with sensible moments") {
    CounterRng rng(2024, 0);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform(static_cast<uint64_t>(i), 0);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 0.005);        // ~8 sigma slack
    CHECK(std::abs(var - 1.0 / 12.0) < 0.005);
}

TEST_CASE("adjacent counters do not collide") {
    CounterRng rng(5, 5);
    std::set<uint64_t> seen;
    for (uint64_t i = 0; i < 4096; ++i) seen.insert(rng.block(i).first);
    CHECK(seen.size() == 4096);
}
