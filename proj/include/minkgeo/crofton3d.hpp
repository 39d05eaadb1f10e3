#pragma once

#include "minkgeo/htarea2d.hpp"
#include "minkgeo/lines.hpp"
#include "minkgeo/mc.hpp"
#include "minkgeo/norms.hpp"
#include "minkgeo/sphharm.hpp"

namespace minkgeo {

/// Inverse-CDF sampler on S^2 proportional to |f| over a (cos polar, azimuth)
/// cell grid, with a mass floor so sign-changing densities keep full support.
/// Reports the exact piecewise-constant proposal density with each draw.
class SphereDensitySampler {
public:
    explicit SphereDensitySampler(const EvenSphericalExpansion& f, int n_polar = 128,
                                  int n_azimuth = 256);
    /// (u1,u2) in [0,1)^2 -> unit vector; *q_density is w.r.t. the area form.
    Vec3 sample(double u1, double u2, double* q_density) const;

private:
    std::vector<double> cdf_;
    std::vector<double> density_;
    int nu_, nphi_;
};

/// Second Holmes-Thompson volume (surface area) of a triangle mesh by Monte
/// Carlo over hyperplane pairs pushed to lines: planes drawn with normals
/// from |f| (sign carried in the weight) and offsets uniform over a band
/// covering the mesh. The chart constant C3 = 1/(8 pi) is pinned by the
/// Euclidean flat-disk baseline.
MCEstimate surface_area_mc(const MinkowskiNorm& norm, const TriMesh& mesh, uint64_t n,
                           uint64_t seed, int workers = 1, int order = 16);

/// Same estimator with a prebuilt density (keeps the inversion out of timing
/// loops and lets tests drive the sampler directly).
MCEstimate surface_area_mc_with_density(const EvenSphericalExpansion& f, const TriMesh& mesh,
                                        uint64_t n, uint64_t seed, int workers = 1);

/// Exact HT area of a flat region: Euclidean area times the dual-ball area of
/// the norm restricted to the plane, over pi. Frame-independent.
double flat_patch_oracle(const MinkowskiNorm& norm, const Plane3D& plane,
                         const Polygon2D& region_inplane);
double flat_patch_oracle(const MinkowskiNorm& norm, Vec3 e1, Vec3 e2,
                         const Polygon2D& region_inplane);

/// Fan/strip meshes for the baselines: a unit disk in the z=0 plane and a
/// subdivided icosphere.
TriMesh make_disk_mesh(double radius, int segments);
TriMesh make_icosphere(int subdivisions);
TriMesh make_rect_mesh(Vec3 origin, Vec3 e1, Vec3 e2, double len1, double len2, int n1, int n2);

}  // namespace minkgeo
