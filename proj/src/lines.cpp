#include "minkgeo/lines.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "minkgeo/csv.hpp"

namespace minkgeo {

Line2D canonicalize(const Line2D& line) {
    double th = std::fmod(line.theta, 2.0 * M_PI);
    if (th < 0.0) th += 2.0 * M_PI;
    double r = line.r;
    if (th >= M_PI) {
        th -= M_PI;
        r = -r;
    }
    return {th, r};
}

int segment_crossings(Vec2 a, Vec2 b, const Line2D& line) {
    const Vec2 n = line.normal();
    const double ta = a.dot(n), tb = b.dot(n);
    const double lo = std::min(ta, tb), hi = std::max(ta, tb);
    return (line.r >= lo && line.r < hi) ? 1 : 0;
}

int polyline_crossings(const std::vector<Vec2>& vertices, const Line2D& line) {
    int c = 0;
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        c += segment_crossings(vertices[i], vertices[i + 1], line);
    return c;
}

Vec2 PNormLineParam::conormal() const {
    const double sx = (quadrant == 1 || quadrant == 4) ? 1.0 : -1.0;
    const double sy = (quadrant == 1 || quadrant == 2) ? 1.0 : -1.0;
    return {sx * std::pow(theta_coord, p - 1.0), sy * std::pow(omega(), p - 1.0)};
}

PNormLineParam pnorm_param_from_line(double p, const Line2D& line) {
    if (!(p > 1.0)) throw std::invalid_argument("pnorm line chart needs p in (1,inf)");
    Line2D c = canonicalize(line);
    double th = c.theta, re = c.r;
    if (re < 0.0) {  // orient so the offset is nonnegative
        th += M_PI;
        re = -re;
    }
    const double nx = std::cos(th), ny = std::sin(th);
    const double q = p / (p - 1.0);
    const double nq = std::pow(std::pow(std::abs(nx), q) + std::pow(std::abs(ny), q), 1.0 / q);
    const double ux = nx / nq, uy = ny / nq;  // dual-unit conormal

    PNormLineParam out;
    out.p = p;
    out.theta_coord = std::pow(std::abs(ux), 1.0 / (p - 1.0));
    out.r = re / nq;
    const bool px = ux >= 0.0, py = uy >= 0.0;
    out.quadrant = px ? (py ? 1 : 4) : (py ? 2 : 3);

    const double omega = std::pow(std::abs(uy), 1.0 / (p - 1.0));
    if (out.theta_coord < 1e-10 || out.theta_coord > 1.0 - 1e-10 || omega < 1e-10 ||
        omega > 1.0 - 1e-10)
        throw std::domain_error("line is axis-normal: outside the (r,Theta) chart");
    return out;
}

Line2D line_from_pnorm_param(const PNormLineParam& param) {
    const Vec2 n = param.conormal();
    const double nn = n.norm2();
    return canonicalize({std::atan2(n.y, n.x), param.r / nn});
}

PsiPoint psi_map(const MinkowskiNorm& norm, std::span<const double> x,
                 std::span<const double> xi) {
    const int d = norm.dim();
    if (static_cast<int>(x.size()) != d || static_cast<int>(xi.size()) != d)
        throw std::invalid_argument("psi_map: dimension mismatch");
    const double f = norm.evaluate(xi);
    if (std::abs(f - 1.0) > 1e-10)
        throw std::invalid_argument("psi_map: direction must lie on the unit sphere of F");
    const GradHess gh = norm.gradient_and_hessian(xi);
    PsiPoint out;
    out.xi.assign(xi.begin(), xi.end());
    out.eta.resize(static_cast<size_t>(d));
    double dfx = 0.0;
    for (int k = 0; k < d; ++k) dfx += gh.grad[static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
    for (int k = 0; k < d; ++k)
        out.eta[static_cast<size_t>(k)] = x[static_cast<size_t>(k)] - dfx * xi[static_cast<size_t>(k)];
    for (int k = 0; k < d; ++k)
        out.tangency_residual += gh.grad[static_cast<size_t>(k)] * out.eta[static_cast<size_t>(k)];
    return out;
}

Line3D intersect_planes(const Plane3D& h1, const Plane3D& h2) {
    const Vec3 d = h1.normal.cross(h2.normal);
    const double dn = d.norm2();
    if (dn <= 1e-10)
        throw std::domain_error("planes are parallel or coincident: degenerate intersection");
    const double c = h1.normal.dot(h2.normal);
    const double denom = 1.0 - c * c;
    const double a = (h1.r - c * h2.r) / denom;
    const double b = (h2.r - c * h1.r) / denom;
    return Line3D(a * h1.normal + b * h2.normal, d * (1.0 / dn));
}

Polyline Polyline::from_csv(const std::string& path) {
    auto rows = read_csv_rows(path);
    Polyline poly;
    for (const auto& r : rows) {
        if (r.size() != 2) throw std::invalid_argument("polyline CSV rows must be x,y");
        poly.vertices.push_back({r[0], r[1]});
    }
    if (poly.vertices.empty()) throw std::invalid_argument("polyline CSV is empty");
    return poly;
}

double Polyline::max_vertex_norm() const {
    double m = 0.0;
    for (const auto& v : vertices) m = std::max(m, v.norm2());
    return m;
}

TriMesh TriMesh::from_off(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open mesh file: " + path);
    std::string tok;
    if (!(in >> tok) || tok != "OFF") throw std::invalid_argument("not an OFF file: " + path);
    size_t nv, nf, ne;
    if (!(in >> nv >> nf >> ne)) throw std::invalid_argument("bad OFF header in " + path);
    TriMesh mesh;
    mesh.vertices.resize(nv);
    for (size_t i = 0; i < nv; ++i)
        if (!(in >> mesh.vertices[i].x >> mesh.vertices[i].y >> mesh.vertices[i].z))
            throw std::invalid_argument("truncated OFF vertex list in " + path);
    mesh.triangles.resize(nf);
    for (size_t i = 0; i < nf; ++i) {
        int deg;
        if (!(in >> deg)) throw std::invalid_argument("truncated OFF face list in " + path);
        if (deg != 3) throw std::invalid_argument("OFF mesh must be triangles only: " + path);
        auto& t = mesh.triangles[i];
        if (!(in >> t[0] >> t[1] >> t[2]))
            throw std::invalid_argument("truncated OFF face list in " + path);
    }
    mesh.validate();
    return mesh;
}

void TriMesh::validate() const {
    for (const auto& v : vertices)
        if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
            throw std::invalid_argument("mesh has non-finite coordinates");
    const int nv = static_cast<int>(vertices.size());
    for (const auto& t : triangles) {
        for (int k = 0; k < 3; ++k)
            if (t[static_cast<size_t>(k)] < 0 || t[static_cast<size_t>(k)] >= nv)
                throw std::invalid_argument("mesh triangle index out of range");
        const Vec3 a = vertices[static_cast<size_t>(t[0])];
        const Vec3 b = vertices[static_cast<size_t>(t[1])];
        const Vec3 c = vertices[static_cast<size_t>(t[2])];
        if (0.5 * (b - a).cross(c - a).norm2() <= 1e-14)
            throw std::invalid_argument("mesh contains a degenerate triangle");
    }
}

double TriMesh::total_area() const {
    double s = 0.0;
    for (const auto& t : triangles) {
        const Vec3 a = vertices[static_cast<size_t>(t[0])];
        const Vec3 b = vertices[static_cast<size_t>(t[1])];
        const Vec3 c = vertices[static_cast<size_t>(t[2])];
        s += 0.5 * (b - a).cross(c - a).norm2();
    }
    return s;
}

double TriMesh::bounding_radius() const {
    double m = 0.0;
    for (const auto& v : vertices) m = std::max(m, v.norm2());
    return m;
}

kernels::TriSoA TriMesh::to_soa() const {
    kernels::TriSoA soa;
    soa.reserve(triangles.size());
    for (const auto& t : triangles) {
        const Vec3& a = vertices[static_cast<size_t>(t[0])];
        const Vec3& b = vertices[static_cast<size_t>(t[1])];
        const Vec3& c = vertices[static_cast<size_t>(t[2])];
        // edge ownership: the triangle listing the shared edge with ascending
        // vertex indices owns boundary hits on it
        const double tab = t[0] < t[1] ? 1.0 : -1.0;
        const double tbc = t[1] < t[2] ? 1.0 : -1.0;
        const double tca = t[2] < t[0] ? 1.0 : -1.0;
        soa.push(&a.x, &b.x, &c.x, tab, tbc, tca);
    }
    return soa;
}

int mesh_line_crossings(const TriMesh& mesh, const Line3D& line) {
    const kernels::TriSoA soa = mesh.to_soa();
    int32_t count = 0;
    kernels::active_kernels().trimesh_crossings(soa, &line.point.x, &line.point.y, &line.point.z,
                                                &line.direction.x, &line.direction.y,
                                                &line.direction.z, 1, &count);
    return count;
}

}  // namespace minkgeo
