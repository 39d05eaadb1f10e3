#include <doctest.h>

#include <cmath>
#include <random>

#include "minkgeo/crofton2d.hpp"
#include "support.hpp"

using namespace minkgeo;
using namespace testsup;

namespace {
CroftonMeasure2D euclid_measure() {
    return CroftonMeasure2D::from_norm(MinkowskiNorm::euclidean(2), 16);
}
}  // namespace

TEST_CASE("Euclidean baseline: unit segment has Crofton length 1") {
    const auto m = euclid_measure();
    CHECK(crofton_length_segment(m, {0, 0}, {1, 0}) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(crofton_length_segment(m, {0, 0}, {0.6, 0.8}) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("p=3 segment equals the norm of the chord") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const auto m = CroftonMeasure2D::from_norm(p3, 256);
    // (1+1)^{1/3}
    CHECK(crofton_length_segment(m, {0, 0}, {1, 1}) ==
          doctest::Approx(1.2599210498948732).epsilon(1e-8));
}

TEST_CASE("homogeneity: scaling the segment scales the length") {
    const auto p25 = MinkowskiNorm::p_norm(2.5, 2);
    const auto m = CroftonMeasure2D::from_norm(p25, 128);
    const double l1 = crofton_length_segment(m, {0.1, -0.2}, {0.9, 0.5});
    const double l5 = crofton_length_segment(m, {0.5, -1.0}, {4.5, 2.5});
    CHECK(l5 == doctest::Approx(5.0 * l1).epsilon(1e-12));
}

TEST_CASE("translation invariance") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const auto m = CroftonMeasure2D::from_norm(p3, 64);
    const double a = crofton_length_segment(m, {0, 0}, {1, 2});
    const double b = crofton_length_segment(m, {10.5, -3.25}, {11.5, -1.25});
    CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("exactness on 100 random segments per norm") {
    std::mt19937_64 gen(2026);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double p : {2.0, 2.5, 3.0, 4.0}) {
        const auto norm = MinkowskiNorm::p_norm(p, 2);
        const auto m = CroftonMeasure2D::from_norm(norm, 256);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec2 a{u(gen), u(gen)};
            const Vec2 b{u(gen), u(gen)};
            if ((b - a).norm2() < 1e-3) continue;
            const double got = crofton_length_segment(m, a, b);
            const double want = norm.evaluate(b - a);
            worst = std::max(worst, std::abs(got - want));
        }
        CHECK(worst < 1e-7);
    }
}

TEST_CASE("degenerate segment rejected") {
    const auto m = euclid_measure();
    CHECK_THROWS_AS((void)crofton_length_segment(m, {1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("Monte Carlo on the unit segment converges with stated error") {
    const auto m = euclid_measure();
    Polyline seg;
    seg.vertices = {{0, 0}, {1, 0}};
    const auto est = crofton_length_mc(m, seg, 1000000, 42);
    CHECK(est.std_error < 3e-3);
    CHECK(std::abs(est.value - 1.0) < 3.0 * est.std_error);
}

TEST_CASE("Monte Carlo additivity on an L-shaped polyline") {
    const auto p25 = MinkowskiNorm::p_norm(2.5, 2);
    const auto m = CroftonMeasure2D::from_norm(p25, 128);
    Polyline poly;
    poly.vertices = {{0, 0}, {1, 0}, {1, 1}};
    const double want = p25.evaluate(Vec2{1, 0}) + p25.evaluate(Vec2{0, 1});
    const auto est = crofton_length_mc(m, poly, 1000000, 7);
    CHECK(std::abs(est.value - want) < 3.0 * est.std_error);
}

TEST_CASE("Monte Carlo degenerate and validation paths") {
    const auto m = euclid_measure();
    Polyline point;
    point.vertices = {{0.25, 0.5}};
    const auto est = crofton_length_mc(m, point, 2000, 1);
    CHECK(est.value == 0.0);
    Polyline empty;
    CHECK_THROWS_AS((void)crofton_length_mc(m, empty, 2000, 1), std::invalid_argument);
    Polyline seg;
    seg.vertices = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS((void)crofton_length_mc(m, seg, 10, 1), std::invalid_argument);
}

TEST_CASE("Monte Carlo error shrinks like sqrt(n)") {
    const auto m = euclid_measure();
    Polyline seg;
    seg.vertices = {{0, 0}, {0.8, 0.6}};
    double ratio_sum = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        const auto half = crofton_length_mc(m, seg, 20000, 100 + static_cast<uint64_t>(s));
        const auto full = crofton_length_mc(m, seg, 40000, 100 + static_cast<uint64_t>(s));
        ratio_sum += half.std_error / full.std_error;
    }
    CHECK(ratio_sum / seeds == doctest::Approx(std::sqrt(2.0)).epsilon(0.1));
}

TEST_CASE("Monte Carlo is worker-count independent") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const auto m = CroftonMeasure2D::from_norm(p3, 64);
    Polyline poly;
    poly.vertices = {{0, 0}, {1, 0}, {1, 1}, {0.2, 1.4}};
    const auto a = crofton_length_mc(m, poly, 200000, 99, 1);
    const auto b = crofton_length_mc(m, poly, 200000, 99, 8);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("Gelfand identity: Euclidean unit segment") {
    const auto m = euclid_measure();
    const auto rep = gelfand_identity_check(m, {0, 0}, {1, 0});
    CHECK(rep.pass);
    CHECK(rep.rel_diff < 1e-10);
    // both sides equal 4 * c_len * 2 * length: the oriented integral is 4L
    CHECK(rep.pushforward_side == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(rep.normalized_length == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Gelfand identity: p=3 segment recovers the 3-norm") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const auto m = CroftonMeasure2D::from_norm(p3, 256);
    const auto rep = gelfand_identity_check(m, {0, 0}, {1, 2});
    CHECK(rep.pass);
    // 9^{1/3}
    CHECK(rep.normalized_length == doctest::Approx(2.0800838230519041).epsilon(1e-7));
}

TEST_CASE("Gelfand identity rejects the zero-length segment") {
    const auto m = euclid_measure();
    CHECK_THROWS_AS((void)gelfand_identity_check(m, {2, 2}, {2, 2}), std::invalid_argument);
}
