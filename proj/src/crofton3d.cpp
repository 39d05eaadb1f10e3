#include "minkgeo/crofton3d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "minkgeo/cosine.hpp"
#include "minkgeo/kernels.hpp"
#include "minkgeo/rng.hpp"

namespace minkgeo {

SphereDensitySampler::SphereDensitySampler(const EvenSphericalExpansion& f, int n_polar,
                                           int n_azimuth)
    : nu_(n_polar), nphi_(n_azimuth) {
    const size_t cells = static_cast<size_t>(nu_) * static_cast<size_t>(nphi_);
    density_.resize(cells);
    cdf_.resize(cells);
    const double du = 2.0 / nu_, dphi = 2.0 * M_PI / nphi_;
    double maxabs = 0.0;
    std::vector<double> raw(cells);
    for (int i = 0; i < nu_; ++i) {
        const double u = -1.0 + (i + 0.5) * du;
        const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (int j = 0; j < nphi_; ++j) {
            const double ph = (j + 0.5) * dphi;
            const double val = std::abs(f(Vec3{st * std::cos(ph), st * std::sin(ph), u}));
            raw[static_cast<size_t>(i) * static_cast<size_t>(nphi_) + static_cast<size_t>(j)] = val;
            maxabs = std::max(maxabs, val);
        }
    }
    const double floor_mass = std::max(1e-3 * maxabs, 1e-12);
    double acc = 0.0;
    for (size_t c = 0; c < cells; ++c) {
        const double m = raw[c] + floor_mass;
        density_[c] = m;
        acc += m * du * dphi;
        cdf_[c] = acc;
    }
    for (auto& d : density_) d /= acc;
    for (auto& c : cdf_) c /= acc;
}

Vec3 SphereDensitySampler::sample(double u1, double u2, double* q_density) const {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u1);
    const size_t c = std::min(static_cast<size_t>(it - cdf_.begin()), cdf_.size() - 1);
    const double prev = c == 0 ? 0.0 : cdf_[c - 1];
    const double frac = std::clamp((u1 - prev) / std::max(cdf_[c] - prev, 1e-300), 0.0, 1.0);
    const int i = static_cast<int>(c) / nphi_;
    const int j = static_cast<int>(c) % nphi_;
    const double du = 2.0 / nu_, dphi = 2.0 * M_PI / nphi_;
    const double u = -1.0 + (static_cast<double>(i) + frac) * du;
    const double ph = (static_cast<double>(j) + u2) * dphi;
    if (q_density) *q_density = density_[c];
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    return {st * std::cos(ph), st * std::sin(ph), u};
}

MCEstimate surface_area_mc(const MinkowskiNorm& norm, const TriMesh& mesh, uint64_t n,
                           uint64_t seed, int workers, int order) {
    if (norm.dim() != 3) throw std::invalid_argument("surface_area_mc needs a 3D norm");
    const EvenSphericalExpansion f = invert_cosine_s2(
        [&](Vec3 u) { return norm.evaluate(u); }, order, nullptr);
    return surface_area_mc_with_density(f, mesh, n, seed, workers);
}

MCEstimate surface_area_mc_with_density(const EvenSphericalExpansion& f, const TriMesh& mesh,
                                        uint64_t n, uint64_t seed, int workers) {
    if (mesh.triangles.empty()) throw std::invalid_argument("surface_area_mc: empty mesh");
    if (n < 10000) throw std::invalid_argument("surface_area_mc: need n >= 10^4 plane pairs");
    if (f.max_abs_on_grid(32, 64) <= 0.0)
        throw std::invalid_argument("surface_area_mc: density is identically zero");

    const double R = mesh.bounding_radius() * (1.0 + 1e-6) + 1e-12;
    const kernels::TriSoA soa = mesh.to_soa();
    const auto& kt = kernels::active_kernels();
    SphereDensitySampler sampler(f);
    const double c3 = 1.0 / (8.0 * M_PI);
    CounterRng rng(seed, /*stream=*/0x73726633ULL);

    auto chunk_fn = [&](uint64_t i0, uint64_t i1, double& sum, double& sumsq) {
        const size_t m = static_cast<size_t>(i1 - i0);
        std::vector<double> px(m), py(m), pz(m), dx(m), dy(m), dz(m), wt(m);
        std::vector<int32_t> counts(m);
        for (size_t k = 0; k < m; ++k) {
            const uint64_t i = i0 + static_cast<uint64_t>(k);
            double q1, q2;
            const Vec3 xi1 = sampler.sample(rng.uniform(i, 0), rng.uniform(i, 1), &q1);
            const Vec3 xi2 = sampler.sample(rng.uniform(i, 2), rng.uniform(i, 3), &q2);
            const double r1 = R * (2.0 * rng.uniform(i, 4) - 1.0);
            const double r2 = R * (2.0 * rng.uniform(i, 5) - 1.0);
            const Vec3 cr = xi1.cross(xi2);
            const double cn = cr.norm2();
            if (cn <= 1e-10) {  // degenerate pair: measure-zero set
                px[k] = py[k] = pz[k] = 0.0;
                dx[k] = 1.0;
                dy[k] = dz[k] = 0.0;
                wt[k] = 0.0;
                continue;
            }
            const double c = xi1.dot(xi2);
            const double denom = 1.0 - c * c;
            const double a = (r1 - c * r2) / denom;
            const double b = (r2 - c * r1) / denom;
            const Vec3 base = a * xi1 + b * xi2;
            px[k] = base.x;
            py[k] = base.y;
            pz[k] = base.z;
            dx[k] = cr.x / cn;
            dy[k] = cr.y / cn;
            dz[k] = cr.z / cn;
            wt[k] = (f(xi1) / q1) * (f(xi2) / q2) * (2.0 * R) * (2.0 * R);
        }
        kt.trimesh_crossings(soa, px.data(), py.data(), pz.data(), dx.data(), dy.data(),
                             dz.data(), m, counts.data());
        for (size_t k = 0; k < m; ++k) {
            const double x = c3 * wt[k] * counts[k];
            sum += x;
            sumsq += x * x;
        }
    };
    return run_mc_chunked(n, seed, workers, chunk_fn);
}

double flat_patch_oracle(const MinkowskiNorm& norm, Vec3 e1, Vec3 e2,
                         const Polygon2D& region_inplane) {
    if (norm.dim() != 3) throw std::invalid_argument("flat_patch_oracle needs a 3D norm");
    if (!region_inplane.is_simple())
        throw std::invalid_argument("flat_patch_oracle: region must be a simple polygon");
    const MinkowskiNorm planar = MinkowskiNorm::restricted(norm, e1, e2);
    return region_inplane.shoelace_area() * dual_ball_area(planar) / M_PI;
}

double flat_patch_oracle(const MinkowskiNorm& norm, const Plane3D& plane,
                         const Polygon2D& region_inplane) {
    const Vec3 nu = plane.normal;
    Vec3 seed = std::abs(nu.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    const Vec3 e1 = seed.cross(nu).normalized();
    const Vec3 e2 = nu.cross(e1);
    return flat_patch_oracle(norm, e1, e2, region_inplane);
}

TriMesh make_disk_mesh(double radius, int segments) {
    if (segments < 3) throw std::invalid_argument("disk mesh needs >= 3 segments");
    TriMesh mesh;
    mesh.vertices.push_back({0, 0, 0});
    for (int i = 0; i < segments; ++i) {
        const double a = 2.0 * M_PI * i / segments;
        mesh.vertices.push_back({radius * std::cos(a), radius * std::sin(a), 0.0});
    }
    for (int i = 0; i < segments; ++i)
        mesh.triangles.push_back({0, 1 + i, 1 + (i + 1) % segments});
    mesh.validate();
    return mesh;
}

TriMesh make_icosphere(int subdivisions) {
    const double t = 0.5 * (1.0 + std::sqrt(5.0));
    std::vector<Vec3> verts = {{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0},
                               {0, -1, t}, {0, 1, t},  {0, -1, -t}, {0, 1, -t},
                               {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
    for (auto& v : verts) v = v.normalized();
    std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
        {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
        {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int i, int j) {
            const auto key = std::minmax(i, j);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const Vec3 m = (verts[static_cast<size_t>(i)] + verts[static_cast<size_t>(j)]).normalized();
            verts.push_back(m);
            const int idx = static_cast<int>(verts.size()) - 1;
            midpoint.emplace(key, idx);
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto& fface : faces) {
            const int a = fface[0], b = fface[1], c = fface[2];
            const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
            next.push_back({a, ab, ca});
            next.push_back({b, bc, ab});
            next.push_back({c, ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }
    TriMesh mesh;
    mesh.vertices = std::move(verts);
    mesh.triangles = std::move(faces);
    mesh.validate();
    return mesh;
}

TriMesh make_rect_mesh(Vec3 origin, Vec3 e1, Vec3 e2, double len1, double len2, int n1, int n2) {
    TriMesh mesh;
    for (int i = 0; i <= n1; ++i)
        for (int j = 0; j <= n2; ++j)
            mesh.vertices.push_back(origin + (len1 * i / n1) * e1 + (len2 * j / n2) * e2);
    auto vid = [&](int i, int j) { return i * (n2 + 1) + j; };
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    mesh.validate();
    return mesh;
}

}  // namespace minkgeo
