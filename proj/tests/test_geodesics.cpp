#include <doctest.h>

#include <cmath>
#include <fstream>

#include "minkgeo/geodesics.hpp"
#include "support.hpp"

using namespace minkgeo;

namespace {
ParamPath semicircle(int samples) {
    ParamPath p;
    p.dim = 2;
    p.t0 = 0.0;
    p.t1 = M_PI;
    p.points.resize(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = M_PI * i / (samples - 1);
        p.points[static_cast<size_t>(i)] = {std::cos(t), std::sin(t), 0.0};
    }
    return p;
}
}  // namespace

TEST_CASE("path length: Euclidean semicircle") {
    const auto e2 = MinkowskiNorm::euclidean(2);
    CHECK(path_length(e2, semicircle(10000)) == doctest::Approx(M_PI).epsilon(1e-6 / M_PI));
}

TEST_CASE("path length: straight segment equals the norm of the difference") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const double a[2] = {0, 0}, b[2] = {1, 1};
    const auto path = ParamPath::straight(std::span<const double>(a, 2),
                                          std::span<const double>(b, 2), 501);
    // (1+1)^{1/3}
    CHECK(path_length(p3, path) == doctest::Approx(1.2599210498948732).epsilon(1e-8));
}

TEST_CASE("path length: degenerate repeated-point path is zero") {
    ParamPath p;
    p.dim = 2;
    p.points = {{2, 3, 0}, {2, 3, 0}, {2, 3, 0}};
    CHECK(path_length(MinkowskiNorm::euclidean(2), p) == 0.0);
    ParamPath q;
    q.dim = 2;
    q.points = {{2, 3, 0}};
    CHECK_THROWS_AS((void)path_length(MinkowskiNorm::euclidean(2), q), std::invalid_argument);
}

TEST_CASE("path length is stable under grid refinement") {
    const auto p25 = MinkowskiNorm::p_norm(2.5, 2);
    const double a[2] = {0.2, -0.1}, b[2] = {1.3, 0.8};
    const auto coarse = ParamPath::straight(std::span<const double>(a, 2),
                                            std::span<const double>(b, 2), 801);
    const auto fine = ParamPath::straight(std::span<const double>(a, 2),
                                          std::span<const double>(b, 2), 1601);
    CHECK(std::abs(path_length(p25, coarse) - path_length(p25, fine)) < 1e-9);
}

TEST_CASE("path length is translation invariant") {
    // translating the samples rounds them before the function ever runs, so
    // the bound is a few ulps of the translated coordinates, not bit equality
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    auto path = semicircle(2001);
    const double before = path_length(p3, path);
    for (auto& pt : path.points) {
        pt[0] += 17.25;
        pt[1] -= 4.5;
    }
    CHECK(std::abs(path_length(p3, path) - before) < 5e-12 * before);
}

TEST_CASE("chord minimality: single Euclidean sine bump") {
    const auto e2 = MinkowskiNorm::euclidean(2);
    const int m = 1001;
    ParamPath p;
    p.dim = 2;
    p.points.resize(m);
    for (int i = 0; i < m; ++i) {
        const double t = static_cast<double>(i) / (m - 1);
        p.points[static_cast<size_t>(i)] = {t, 0.1 * std::sin(M_PI * t), 0.0};
    }
    CHECK(path_length(e2, p) > 1.0);
}

TEST_CASE("chord minimality: random perturbations never win") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    const double x[2] = {0, 0}, y[2] = {2, 1};
    const auto rep = verify_shortest_path(p3, std::span<const double>(x, 2),
                                          std::span<const double>(y, 2), 100, 1234);
    CHECK(rep.pass);
    CHECK(rep.min_margin >= -1e-10);
    CHECK(rep.min_margin > 0.0);  // genuine bumps strictly lengthen the path
    CHECK(rep.chord_length ==
          doctest::Approx(MinkowskiNorm::p_norm(3.0, 2).evaluate(Vec2{2, 1})).epsilon(1e-10));
}

TEST_CASE("zero perturbation has margin exactly zero") {
    const auto e2 = MinkowskiNorm::euclidean(2);
    const double x[2] = {0, 0}, y[2] = {1, 0};
    const auto chord = ParamPath::straight(std::span<const double>(x, 2),
                                           std::span<const double>(y, 2), 1001);
    CHECK(path_length(e2, chord) - path_length(e2, chord) == 0.0);
}

TEST_CASE("verify_shortest_path rejects coincident endpoints") {
    const double x[2] = {1, 1};
    CHECK_THROWS_AS((void)verify_shortest_path(MinkowskiNorm::euclidean(2),
                                               std::span<const double>(x, 2),
                                               std::span<const double>(x, 2), 10, 1),
                    std::invalid_argument);
}

TEST_CASE("hessian identity residuals by smoothness class") {
    // p=2: both sides are the identity matrix up to round-off
    const auto r2 = hessian_identity_check(MinkowskiNorm::euclidean(2), 50, 2);
    CHECK(r2.max_residual < 1e-9);
    const auto r3 = hessian_identity_check(MinkowskiNorm::p_norm(3.0, 2), 100, 2);
    CHECK(r3.pass);
    CHECK(r3.max_residual < 1e-5);
    const auto r15 = hessian_identity_check(MinkowskiNorm::p_norm(1.5, 2), 100, 2, 1e-4);
    CHECK(r15.pass);
    CHECK(r15.max_residual < 1e-4);
}

TEST_CASE("path CSV round trip") {
    const char* path = "/tmp/minkgeo_test_path.csv";
    {
        std::ofstream out(path);
        out << "t,x,y\n";
        for (int i = 0; i <= 100; ++i) {
            const double t = static_cast<double>(i) / 100.0;
            out << t << "," << t << "," << t * t << "\n";
        }
    }
    const auto p = ParamPath::from_csv(path);
    CHECK(p.dim == 2);
    CHECK(p.size() == 101);
    CHECK(p.points[50][1] == doctest::Approx(0.25));
}
