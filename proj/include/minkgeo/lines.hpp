#pragma once

#include <string>
#include <vector>

#include "minkgeo/kernels.hpp"
#include "minkgeo/norms.hpp"
#include "minkgeo/vec.hpp"

namespace minkgeo {

/// Affine line { z : <z, (cos theta, sin theta)> = r }. Canonical unoriented
/// form keeps theta in [0, pi).
struct Line2D {
    double theta = 0.0;
    double r = 0.0;

    /// Components within an ulp of an axis are snapped to exact 0/±1 so the
    /// parallel rule is exact at the four axis angles.
    Vec2 normal() const {
        double c = std::cos(theta), s = std::sin(theta);
        if (std::abs(c) < 1e-15) {
            c = 0.0;
            s = s < 0.0 ? -1.0 : 1.0;
        } else if (std::abs(s) < 1e-15) {
            s = 0.0;
            c = c < 0.0 ? -1.0 : 1.0;
        }
        return {c, s};
    }
    Vec2 direction() const {
        const Vec2 n = normal();
        return {-n.y, n.x};
    }
    Vec2 foot() const { return r * normal(); }
};

Line2D canonicalize(const Line2D& line);

/// 1 when the open segment projection interval [min,max) contains r
/// (half-open ties keep crossing counts additive), else 0.
int segment_crossings(Vec2 a, Vec2 b, const Line2D& line);

int polyline_crossings(const std::vector<Vec2>& vertices, const Line2D& line);

/// Line coordinates adapted to the p-norm: the line is tangent to the
/// Minkowski sphere of radius r at the point r*(sx*Theta, sy*Omega), where
/// (Theta, Omega) is unit in p-norm and (sx, sy) are the quadrant signs.
struct PNormLineParam {
    double p = 2.0;
    double theta_coord = 0.0;  // Theta in (0,1)
    int quadrant = 1;          // 1:(+,+) 2:(-,+) 3:(-,-) 4:(+,-) signs of the tangent point
    double r = 0.0;            // p-norm distance, >= 0

    double omega() const { return std::pow(1.0 - std::pow(theta_coord, p), 1.0 / p); }
    /// Covector n with <z,n> = r on the line; unit in the dual q-norm.
    Vec2 conormal() const;
};

PNormLineParam pnorm_param_from_line(double p, const Line2D& line);
Line2D line_from_pnorm_param(const PNormLineParam& param);

/// psi map: a line through x with F-unit direction xi corresponds to
/// (xi, eta) with eta = x - dF(xi)(x) * xi tangent to the unit sphere at xi.
struct PsiPoint {
    std::vector<double> xi;
    std::vector<double> eta;
    double tangency_residual = 0.0;  // dF(xi)(eta), zero in exact arithmetic
};
PsiPoint psi_map(const MinkowskiNorm& norm, std::span<const double> x,
                 std::span<const double> xi);

struct Plane3D {
    Vec3 normal;  // Euclidean unit
    double r = 0.0;

    Plane3D() = default;
    Plane3D(Vec3 n, double r_) : normal(n.normalized()), r(r_) {}
};

struct Line3D {
    Vec3 point;
    Vec3 direction;  // Euclidean unit

    Line3D() = default;
    Line3D(Vec3 p, Vec3 d) : point(p), direction(d.normalized()) {}
};

/// Intersection of two planes; throws on (near-)parallel normals, the
/// measure-zero degenerate set of the pushforward construction.
Line3D intersect_planes(const Plane3D& h1, const Plane3D& h2);

struct Polyline {
    std::vector<Vec2> vertices;

    static Polyline from_csv(const std::string& path);
    double max_vertex_norm() const;
};

struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;

    static TriMesh from_off(const std::string& path);
    void validate() const;  // finite coordinates, nondegenerate triangles
    double total_area() const;
    double bounding_radius() const;

    /// SoA triangle data for the crossing kernels, tie-break signs included.
    kernels::TriSoA to_soa() const;
};

/// Number of mesh triangles crossed by the line, with half-open ownership of
/// shared edges (a line through a shared edge counts once).
int mesh_line_crossings(const TriMesh& mesh, const Line3D& line);

}  // namespace minkgeo
