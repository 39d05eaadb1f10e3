#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace minkgeo {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm2() const { return std::sqrt(x * x + y * y); }
};
inline Vec2 operator*(double s, Vec2 v) { return v * s; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(Vec3 o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 normalized() const {
        double n = norm2();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }
};
inline Vec3 operator*(double s, Vec3 v) { return v * s; }

/// Dense symmetric matrix of dimension 2 or 3, row-major storage.
struct SymMat {
    int n = 0;
    std::array<double, 9> a{};  // row-major n*n

    static SymMat zero(int n_) {
        SymMat m;
        m.n = n_;
        return m;
    }
    double& at(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }

    SymMat operator-(const SymMat& o) const {
        SymMat r = *this;
        for (int i = 0; i < n * n; ++i) r.a[static_cast<size_t>(i)] -= o.a[static_cast<size_t>(i)];
        return r;
    }
    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < n * n; ++i) m = std::max(m, std::abs(a[static_cast<size_t>(i)]));
        return m;
    }
};

/// Eigenvalues of a symmetric 2x2 or 3x3 matrix by cyclic Jacobi rotations,
/// returned in ascending order. Plenty for the positive-definiteness audits;
/// no external linear algebra needed at these sizes.
std::array<double, 3> sym_eigenvalues(const SymMat& m);

}  // namespace minkgeo
