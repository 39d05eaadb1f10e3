#include <doctest.h>

#include <cmath>

#include "minkgeo/cosine.hpp"
#include "minkgeo/fourier.hpp"
#include "minkgeo/norms.hpp"
#include "minkgeo/quadrature.hpp"
#include "minkgeo/sphharm.hpp"

using namespace minkgeo;

TEST_CASE("fourier fit: constants and single modes") {
    const auto c = EvenFourierSeries::fit([](double) { return 1.0; }, 8);
    CHECK(c.cos_coeffs()[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(c.cos_coeffs()[static_cast<size_t>(k)]) < 1e-13);
        CHECK(std::abs(c.sin_coeffs()[static_cast<size_t>(k)]) < 1e-13);
    }

    const auto m = EvenFourierSeries::fit([](double th) { return std::cos(2.0 * th); }, 8);
    CHECK(m.cos_coeffs()[1] == doctest::Approx(1.0).epsilon(1e-13));
    for (int k = 2; k <= 8; ++k) CHECK(std::abs(m.cos_coeffs()[static_cast<size_t>(k)]) < 1e-12);
}

TEST_CASE("fourier fit reconstructs the 3-norm restriction at its nodes") {
    // on the minimal even grid n = 4K+2, an even function's sample spectrum
    // lives entirely in the retained modes, so the nodal reconstruction is
    // exact to round-off
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    auto f = [&](double th) { return p3.evaluate(Vec2{std::cos(th), std::sin(th)}); };
    const int K = 64, n = 4 * K + 2;
    std::vector<double> samples(n);
    for (int j = 0; j < n; ++j) samples[static_cast<size_t>(j)] = f(2.0 * M_PI * j / n);
    const auto fit = EvenFourierSeries::fit(samples, K);
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(fit(2.0 * M_PI * j / n) - samples[static_cast<size_t>(j)]));
    CHECK(worst < 1e-10);
}

TEST_CASE("fourier fit rejects non-even input") {
    CHECK_THROWS_AS((void)EvenFourierSeries::fit([](double th) { return 1.0 + 0.1 * std::cos(th); }, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)EvenFourierSeries::fit(std::vector<double>{1.0, 2.0}, 4),
                    std::invalid_argument);  // too few nodes
}

TEST_CASE("cosine multipliers on S1 match the closed form 4(-1)^{k+1}/(4k^2-1)") {
    CHECK(cosine_multiplier(Space::S1, 0) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(cosine_multiplier(Space::S1, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(cosine_multiplier(Space::S1, 4) == doctest::Approx(-4.0 / 15.0).epsilon(1e-12));
    for (int k = 1; k <= 64; ++k) {
        const double closed = 4.0 * ((k % 2 == 0) ? -1.0 : 1.0) / (4.0 * k * k - 1.0);
        CHECK(cosine_multiplier(Space::S1, 2 * k) == doctest::Approx(closed).epsilon(1e-11));
    }
    CHECK_THROWS_AS((void)cosine_multiplier(Space::S1, 3), std::invalid_argument);
}

TEST_CASE("cosine multipliers on S2: Funk-Hecke values") {
    CHECK(std::abs(cosine_multiplier(Space::S2, 0) - 2.0 * M_PI) < 1e-10);
    CHECK(std::abs(cosine_multiplier(Space::S2, 2) - M_PI / 2.0) < 1e-10);
    CHECK(std::abs(cosine_multiplier(Space::S2, 4) + M_PI / 12.0) < 1e-10);
}

TEST_CASE("multiplier magnitudes decrease with degree") {
    double prev = std::abs(cosine_multiplier(Space::S1, 0));
    for (int k = 1; k <= 32; ++k) {
        const double cur = std::abs(cosine_multiplier(Space::S1, 2 * k));
        CHECK(cur < prev);
        prev = cur;
    }
    prev = std::abs(cosine_multiplier(Space::S2, 0));
    for (int l = 2; l <= 16; l += 2) {
        const double cur = std::abs(cosine_multiplier(Space::S2, l));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("forward transform on S1: constants and single modes") {
    const auto one = EvenFourierSeries::fit([](double) { return 1.0; }, 4);
    const auto c1 = cosine_forward(one);
    CHECK(c1(0.7) == doctest::Approx(4.0).epsilon(1e-12));

    const auto mode = EvenFourierSeries::fit([](double th) { return std::cos(2 * th); }, 4);
    const auto c2 = cosine_forward(mode);
    CHECK(c2(0.3) == doctest::Approx(4.0 / 3.0 * std::cos(0.6)).epsilon(1e-11));
}

TEST_CASE("forward transform agrees with direct quadrature at 16 directions") {
    const auto p25 = MinkowskiNorm::p_norm(2.5, 2);
    const auto f = EvenFourierSeries::fit(
        [&](double th) { return p25.evaluate(Vec2{std::cos(th), std::sin(th)}); }, 48);
    const auto cf = cosine_forward(f);
    for (int i = 0; i < 16; ++i) {
        const double u = 2.0 * M_PI * i / 16.0 + 0.05;
        CHECK(std::abs(cf(u) - cosine_forward_direct(f, u)) < 1e-8);
    }
}

TEST_CASE("forward transform on S2: constant goes to 2 pi") {
    const auto one = EvenSphericalExpansion::fit([](Vec3) { return 1.0; }, 4);
    const auto c = cosine_forward(one);
    CHECK(c(Vec3{0, 0, 1}) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    CHECK(c(Vec3{1, 0, 0}) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("forward transform on S2 agrees with direct quadrature") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 3);
    const auto f = EvenSphericalExpansion::fit([&](Vec3 u) { return p3.evaluate(u); }, 8);
    const auto cf = cosine_forward(f);
    for (const Vec3 u : {Vec3{0, 0, 1}, Vec3{1, 1, 1}, Vec3{0.3, -0.8, 0.52}, Vec3{2, 0.5, -1}}) {
        const Vec3 w = u.normalized();
        CHECK(std::abs(cf(w) - cosine_forward_direct(f, w)) < 1e-8);
    }
}

TEST_CASE("inversion on S1: Euclidean gives the classic constant density") {
    InversionReport rep;
    const auto g = invert_cosine_s1([](double) { return 1.0; }, 16, &rep);
    for (int i = 0; i < 32; ++i)
        CHECK(std::abs(g(2.0 * M_PI * i / 32.0) - 1.0) < 1e-10);
    CHECK(rep.roundtrip_sup_error < 1e-12);
}

TEST_CASE("inversion round trip at K=64 for the p-norm family") {
    for (double p : {2.0, 2.5, 3.0, 4.0}) {
        const auto norm = MinkowskiNorm::p_norm(p, 2);
        InversionReport rep;
        (void)invert_cosine_s1(
            [&](double th) { return norm.evaluate(Vec2{std::cos(th), std::sin(th)}); }, 64, &rep);
        CHECK(rep.roundtrip_sup_error < 1e-8);
    }
}

TEST_CASE("inversion reports the truncation cost honestly") {
    const auto p25 = MinkowskiNorm::p_norm(2.5, 2);
    InversionReport rep;
    (void)invert_cosine_s1(
        [&](double th) { return p25.evaluate(Vec2{std::cos(th), std::sin(th)}); }, 64, &rep);
    // the degree-128 truncation of the 2.5-norm restriction really does miss
    // the function by ~1e-6; the report must say so
    CHECK(rep.representation_sup_error > 1e-7);
    CHECK(rep.representation_sup_error < 1e-5);
    // limited smoothness leaves visible tail energy at this order
    CHECK(rep.tail_warning);
}

TEST_CASE("inversion on S2: Euclidean gives f = 2/pi") {
    InversionReport rep;
    const auto f = invert_cosine_s2([](Vec3) { return 1.0; }, 8, &rep);
    CHECK(f(Vec3{0, 0, 1}) == doctest::Approx(2.0 / M_PI).epsilon(1e-10));
    CHECK(f(Vec3{0.6, -0.64, 0.48}.normalized()) == doctest::Approx(2.0 / M_PI).epsilon(1e-10));
    CHECK(rep.roundtrip_sup_error < 1e-10);
}

TEST_CASE("inversion rejects sign-violating input") {
    CHECK_THROWS_AS((void)invert_cosine_s1([](double th) { return std::cos(2 * th); }, 8, nullptr),
                    std::invalid_argument);
}

TEST_CASE("densities stay antipodally even by construction") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const auto g = invert_cosine_s1(
        [&](double th) { return p3.evaluate(Vec2{std::cos(th), std::sin(th)}); }, 32, nullptr);
    for (int i = 0; i < 64; ++i) {
        const double th = 2.0 * M_PI * i / 64.0;
        CHECK(g(th) == doctest::Approx(g(th + M_PI)).epsilon(1e-12));
    }
}

TEST_CASE("spherical harmonics are orthonormal under the fit quadrature") {
    // fit of Y_{l,m} must return a delta in coefficient space
    for (int l : {0, 2, 4}) {
        for (int m = -l; m <= l; m += std::max(1, l)) {
            auto ylm = [&](Vec3 u) {
                std::vector<double> y;
                RealSphericalHarmonics::evaluate(4, u, y);
                return y[RealSphericalHarmonics::index(l, m)];
            };
            const auto fit = EvenSphericalExpansion::fit(ylm, 4);
            for (int l2 = 0; l2 <= 4; l2 += 2)
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    const double want = (l2 == l && m2 == m) ? 1.0 : 0.0;
                    CHECK(fit.coeff(l2, m2) == doctest::Approx(want).epsilon(1e-11));
                }
        }
    }
}

TEST_CASE("JSON round trip is bit exact") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const auto g = invert_cosine_s1(
        [&](double th) { return p3.evaluate(Vec2{std::cos(th), std::sin(th)}); }, 24, nullptr);
    const auto back = EvenFourierSeries::from_json(g.to_json());
    REQUIRE(back.order() == g.order());
    for (int k = 0; k <= g.order(); ++k) {
        CHECK(back.cos_coeffs()[static_cast<size_t>(k)] == g.cos_coeffs()[static_cast<size_t>(k)]);
        CHECK(back.sin_coeffs()[static_cast<size_t>(k)] == g.sin_coeffs()[static_cast<size_t>(k)]);
    }

    const auto f = invert_cosine_s2([](Vec3) { return 1.0; }, 6, nullptr);
    const auto back2 = EvenSphericalExpansion::from_json(f.to_json());
    REQUIRE(back2.max_degree() == f.max_degree());
    for (size_t i = 0; i < f.raw().size(); ++i) CHECK(back2.raw()[i] == f.raw()[i]);
}

TEST_CASE("S2 fit rejects odd input") {
    CHECK_THROWS_AS((void)EvenSphericalExpansion::fit([](Vec3 u) { return 1.0 + 0.2 * u.z; }, 4),
                    std::invalid_argument);
}
