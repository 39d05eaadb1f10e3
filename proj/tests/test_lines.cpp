#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "minkgeo/crofton3d.hpp"
#include "minkgeo/lines.hpp"
#include "support.hpp"

using namespace minkgeo;
using namespace testsup;

TEST_CASE("canonicalize") {
    const auto l1 = canonicalize({3.0 * M_PI / 2.0, 2.0});
    CHECK(l1.theta == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
    CHECK(l1.r == doctest::Approx(-2.0));

    const auto l2 = canonicalize({0.3, 1.0});
    CHECK(l2.theta == doctest::Approx(0.3));
    CHECK(l2.r == doctest::Approx(1.0));

    const auto l3 = canonicalize({M_PI, 0.0});
    CHECK(l3.theta == doctest::Approx(0.0));
    CHECK(l3.r == doctest::Approx(0.0));
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> uth(-10.0, 10.0), ur(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const Line2D l{uth(gen), ur(gen)};
        const Line2D c = canonicalize(l);
        const Line2D cc = canonicalize(c);
        CHECK(c.theta >= 0.0);
        CHECK(c.theta < M_PI);
        CHECK(cc.theta == c.theta);
        CHECK(cc.r == c.r);
    }
}

TEST_CASE("segment crossing predicate") {
    CHECK(segment_crossings({0, 0}, {1, 0}, {0.0, 0.5}) == 1);
    CHECK(segment_crossings({0, 0}, {1, 0}, {0.0, 1.5}) == 0);
    // parallel overlapping line: measure-zero configuration counts zero
    CHECK(segment_crossings({0, 0}, {1, 0}, {M_PI / 2.0, 0.0}) == 0);
}

TEST_CASE("crossing counts add over polyline segments in generic position") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vec2> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({u(gen), u(gen)});
        const Line2D line = canonicalize({u(gen) * 10.0, u(gen)});
        int per_segment = 0;
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            per_segment += segment_crossings(pts[i], pts[i + 1], line);
        CHECK(per_segment == polyline_crossings(pts, line));
    }
}

TEST_CASE("p-norm line chart: Euclidean closed form") {
    // line through (1,0) and (0,1)
    const Line2D l = canonicalize({M_PI / 4.0, std::sqrt(0.5)});
    const auto par = pnorm_param_from_line(2.0, l);
    CHECK(par.theta_coord == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));
    CHECK(par.omega() == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));
    CHECK(par.r == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));
    CHECK(par.quadrant == 1);
    CHECK(std::pow(par.theta_coord, 2.0) + std::pow(par.omega(), 2.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("p-norm line chart: tangency construction at p=3") {
    // tangent line to the p-ball of radius 2 at the (-Theta, Omega)-scaled
    // point has p-norm distance exactly 2
    const double p = 3.0;
    const auto p3 = MinkowskiNorm::p_norm(p, 2);
    const double Th = 0.62;
    const double Om = std::pow(1.0 - std::pow(Th, p), 1.0 / p);
    const Vec2 touch{-2.0 * Th, 2.0 * Om};
    const auto gh = p3.gradient_and_hessian(touch);
    const Vec2 n{gh.grad[0], gh.grad[1]};  // conormal of the tangent line
    const double offset = n.dot(touch);    // Euler: = F(touch) = 2
    const Line2D line = canonicalize({std::atan2(n.y, n.x), offset / n.norm2()});
    const auto par = pnorm_param_from_line(p, line);
    CHECK(par.r == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(par.theta_coord == doctest::Approx(Th).epsilon(1e-12));
    CHECK(par.quadrant == 2);
}

TEST_CASE("p-norm line chart round trip") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> uth(0.0, M_PI), ur(-3.0, 3.0);
    int tested = 0;
    while (tested < 200) {
        const Line2D l = canonicalize({uth(gen), ur(gen)});
        PNormLineParam par;
        try {
            par = pnorm_param_from_line(2.5, l);
        } catch (const std::domain_error&) {
            continue;  // axis-normal draw
        }
        ++tested;
        const Line2D back = line_from_pnorm_param(par);
        CHECK(std::abs(back.theta - l.theta) < 1e-10);
        CHECK(std::abs(back.r - l.r) < 1e-10);
        CHECK(std::abs(std::pow(par.theta_coord, 2.5) + std::pow(par.omega(), 2.5) - 1.0) < 1e-12);
        // the r=-Theta^{p-1}x + Omega^{p-1}y rule holds for points on the line
        const Vec2 pt = back.foot() + 1.7 * back.direction();
        const Vec2 n = par.conormal();
        CHECK(std::abs(pt.dot(n) - par.r) < 1e-9);
    }
    CHECK_THROWS_AS((void)pnorm_param_from_line(2.5, Line2D{0.0, 1.0}), std::domain_error);
}

TEST_CASE("psi map: Euclidean orthogonal projection") {
    const auto e2 = MinkowskiNorm::euclidean(2);
    const double x[2] = {2, 0}, xi[2] = {0, 1};
    const auto pt = psi_map(e2, std::span<const double>(x, 2), std::span<const double>(xi, 2));
    CHECK(pt.eta[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pt.eta[1] == doctest::Approx(0.0));
    CHECK(std::abs(pt.tangency_residual) < 1e-14);
}

TEST_CASE("psi map is independent of the base point along the line") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 2);
    std::mt19937_64 gen(11);
    for (int i = 0; i < 50; ++i) {
        Vec2 dir = random_offaxis_dir2(gen);
        dir = dir * (1.0 / p3.evaluate(dir));  // F-unit direction
        const Vec2 base = random_offaxis_dir2(gen);
        const Vec2 base2 = base + 2.7 * dir;
        const auto a = psi_map(p3, {&base.x, 2}, {&dir.x, 2});
        const auto b = psi_map(p3, {&base2.x, 2}, {&dir.x, 2});
        CHECK(std::abs(a.eta[0] - b.eta[0]) < 1e-10);
        CHECK(std::abs(a.eta[1] - b.eta[1]) < 1e-10);
    }
}

TEST_CASE("psi map tangency for 1000 random lines across norms") {
    std::mt19937_64 gen(13);
    for (double p : {2.0, 2.5, 3.0}) {
        const auto norm = MinkowskiNorm::p_norm(p, 2);
        for (int i = 0; i < 334; ++i) {
            Vec2 dir = random_offaxis_dir2(gen);
            dir = dir * (1.0 / norm.evaluate(dir));
            const Vec2 base = random_offaxis_dir2(gen) * 3.0;
            const auto pt = psi_map(norm, {&base.x, 2}, {&dir.x, 2});
            CHECK(std::abs(pt.tangency_residual) < 1e-10);
        }
    }
    const auto e2 = MinkowskiNorm::euclidean(2);
    const double x[2] = {1, 0}, bad[2] = {0, 2};
    CHECK_THROWS_AS((void)psi_map(e2, std::span<const double>(x, 2), std::span<const double>(bad, 2)),
                    std::invalid_argument);
}

TEST_CASE("plane intersection") {
    const Line3D xaxis = intersect_planes({Vec3{0, 0, 1}, 0.0}, {Vec3{0, 1, 0}, 0.0});
    CHECK(std::abs(xaxis.direction.y) < 1e-14);
    CHECK(std::abs(xaxis.direction.z) < 1e-14);
    CHECK(std::abs(std::abs(xaxis.direction.x) - 1.0) < 1e-14);
    CHECK(xaxis.point.norm2() < 1e-14);

    // x+y+z=1 and x-y=0
    const Line3D l = intersect_planes({Vec3{1, 1, 1}.normalized(), 1.0 / std::sqrt(3.0)},
                                      {Vec3{1, -1, 0}.normalized(), 0.0});
    const Vec3 want_dir = Vec3{1, 1, -2}.normalized();
    CHECK(std::abs(std::abs(l.direction.dot(want_dir)) - 1.0) < 1e-12);
    // (0.5, 0.5, 0) lies on the line
    const Vec3 d = l.point - Vec3{0.5, 0.5, 0.0};
    CHECK(d.cross(l.direction).norm2() < 1e-12);

    CHECK_THROWS_AS((void)intersect_planes({Vec3{0, 0, 1}, 0.0}, {Vec3{0, 0, 1}, 1.0}),
                    std::domain_error);
}

TEST_CASE("plane intersection residuals vanish along the line") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Plane3D h1{Vec3{u(gen), u(gen), u(gen)}.normalized(), u(gen)};
        const Plane3D h2{Vec3{u(gen), u(gen), u(gen)}.normalized(), u(gen)};
        if (h1.normal.cross(h2.normal).norm2() < 1e-3) continue;
        const Line3D l = intersect_planes(h1, h2);
        for (int k = 0; k < 10; ++k) {
            const Vec3 pt = l.point + (k - 5.0) * l.direction;
            CHECK(std::abs(pt.dot(h1.normal) - h1.r) < 1e-10);
            CHECK(std::abs(pt.dot(h2.normal) - h2.r) < 1e-10);
        }
    }
}

TEST_CASE("mesh crossings: sphere, flat patch, shared edge") {
    const TriMesh sphere = make_icosphere(3);
    const Line3D through{Vec3{0.013, -0.007, -2.0}, Vec3{0.0001, 0.0002, 1.0}.normalized()};
    CHECK(mesh_line_crossings(sphere, through) == 2);

    // flat square patch, line parallel to it and off-plane
    const TriMesh patch = make_rect_mesh({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, 1.0, 2, 2);
    CHECK(mesh_line_crossings(patch, {Vec3{0.5, -1.0, 0.5}, Vec3{0, 1, 0}}) == 0);

    // two triangles sharing an edge; a line through the open shared edge
    // counts exactly once
    TriMesh pair;
    pair.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    pair.triangles = {{0, 1, 2}, {1, 3, 2}};  // shared edge (1,2)
    pair.validate();
    const Line3D through_edge{Vec3{0.5, 0.5, -1.0}, Vec3{0, 0, 1}};  // hits the diagonal
    CHECK(mesh_line_crossings(pair, through_edge) == 1);
}

TEST_CASE("OFF and CSV file round trips") {
    const char* off_path = "/tmp/minkgeo_test_mesh.off";
    {
        std::ofstream out(off_path);
        out << "OFF\n4 2 0\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n3 0 1 2\n3 1 3 2\n";
    }
    const TriMesh mesh = TriMesh::from_off(off_path);
    CHECK(mesh.vertices.size() == 4);
    CHECK(mesh.triangles.size() == 2);
    CHECK(mesh.total_area() == doctest::Approx(1.0));

    const char* csv_path = "/tmp/minkgeo_test_poly.csv";
    {
        std::ofstream out(csv_path);
        out << "x,y\n0,0\n1,0\n1,1\n";
    }
    const Polyline poly = Polyline::from_csv(csv_path);
    CHECK(poly.vertices.size() == 3);
    CHECK(poly.max_vertex_norm() == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS((void)TriMesh::from_off("/nonexistent.off"), std::invalid_argument);

    const char* bad_off = "/tmp/minkgeo_test_quad.off";
    {
        std::ofstream out(bad_off);
        out << "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n";
    }
    CHECK_THROWS_AS((void)TriMesh::from_off(bad_off), std::invalid_argument);

    TriMesh degenerate;
    degenerate.vertices = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    degenerate.triangles = {{0, 1, 2}};
    CHECK_THROWS_AS(degenerate.validate(), std::invalid_argument);
}

TEST_CASE("psi map works in three dimensions") {
    const auto p3 = MinkowskiNorm::p_norm(3.0, 3);
    std::mt19937_64 gen(53);
    for (int i = 0; i < 20; ++i) {
        Vec3 dir = random_offaxis_dir3(gen);
        dir = dir * (1.0 / p3.evaluate(dir));
        const Vec3 base = random_offaxis_dir3(gen) * 2.0;
        const auto pt = psi_map(p3, {&base.x, 3}, {&dir.x, 3});
        CHECK(std::abs(pt.tangency_residual) < 1e-10);
        const Vec3 base2 = base + 1.3 * dir;
        const auto pt2 = psi_map(p3, {&base2.x, 3}, {&dir.x, 3});
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(pt.eta[static_cast<size_t>(k)] - pt2.eta[static_cast<size_t>(k)]) < 1e-10);
    }
}
