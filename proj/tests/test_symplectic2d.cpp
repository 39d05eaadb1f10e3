#include <doctest.h>

#include <cmath>
#include <random>

#include "minkgeo/crofton2d.hpp"
#include "minkgeo/symplectic2d.hpp"
#include "support.hpp"

using namespace minkgeo;

TEST_CASE("p=2 closed form: density is 1/Omega") {
    CHECK(psymp_density(2.0, std::pow(2.0, -0.5)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(psymp_density(2.0, 0.6) == doctest::Approx(1.25).epsilon(1e-14));
    for (int i = 1; i <= 1000; ++i) {
        const double th = 0.01 + 0.98 * i / 1000.0;
        const double omega = std::sqrt(1.0 - th * th);
        CHECK(std::abs(psymp_density(2.0, th) - 1.0 / omega) < 1e-12);
    }
}

TEST_CASE("p=3 value against the extended-precision evaluation") {
    // Theta = Omega = 2^{-1/3}; frozen from a 40-digit evaluation of the formula
    CHECK(psymp_density(3.0, std::pow(2.0, -1.0 / 3.0)) ==
          doctest::Approx(5.039684199579493).epsilon(1e-13));
}

TEST_CASE("chart boundary and validation errors") {
    CHECK_THROWS_AS((void)psymp_density(3.0, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)psymp_density(3.0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)psymp_density(0.5, 0.5), std::invalid_argument);
}

TEST_CASE("density is positive on the open chart") {
    for (double p : {1.5, 2.0, 2.5, 3.0, 4.0})
        for (int i = 1; i < 100; ++i) CHECK(psymp_density(p, i / 100.0) > 0.0);
}

TEST_CASE("pullback check: p=2 has closed forms on both sides") {
    const auto rep = pullback_check(2.0, 100, 11);
    CHECK(rep.pass);
    CHECK(rep.max_rel_error < 1e-6);
}

TEST_CASE("pullback check: p=3") {
    const auto rep = pullback_check(3.0, 100, 12);
    CHECK(rep.pass);
    CHECK(rep.max_rel_error < 1e-4);
}

TEST_CASE("pullback check: p=1.5 on the restricted chart") {
    const auto rep = pullback_check(1.5, 100, 13, 0.1, 0.9);
    CHECK(rep.pass);
    CHECK(rep.max_rel_error < 1e-4);
}

TEST_CASE("crofton via the symplectic density: axis segment at p=2") {
    CHECK(crofton_via_psymp(2.0, {0, 0}, {1, 0}) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("crofton via the symplectic density: p=3 chords") {
    // (1+1)^{1/3} and (1+8)^{1/3}
    CHECK(crofton_via_psymp(3.0, {0, 0}, {1, 1}) ==
          doctest::Approx(1.2599210498948732).epsilon(1e-5));
    CHECK(crofton_via_psymp(3.0, {0, 0}, {1, 2}) ==
          doctest::Approx(2.0800838230519041).epsilon(1e-5));
    CHECK_THROWS_AS((void)crofton_via_psymp(3.0, {1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("the two Crofton measures agree on 50 random segments") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (double p : {2.0, 2.5, 3.0}) {
        const auto norm = MinkowskiNorm::p_norm(p, 2);
        const auto measure = CroftonMeasure2D::from_norm(norm, 256);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const Vec2 a{u(gen), u(gen)};
            const Vec2 b{u(gen), u(gen)};
            if ((b - a).norm2() < 0.05) continue;
            const double via_density = crofton_length_segment(measure, a, b);
            const double via_psymp = crofton_via_psymp(p, a, b);
            worst = std::max(worst, std::abs(via_density - via_psymp));
        }
        CHECK(worst < 1e-5);
    }
}
