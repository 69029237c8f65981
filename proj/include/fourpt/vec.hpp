#pragma once

#include <array>
#include <cmath>

namespace fourpt {

/// Ambient coordinate vector. Plane curves use z = 0; hyperboloid points use
/// (x0, x1, x2) with x0 the timelike coordinate.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double det(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

/// 2D cross product of the xy parts.
constexpr double cross2(const Vec3& a, const Vec3& b) { return a.x * b.y - a.y * b.x; }

// Minkowski space with signature (-,+,+).
constexpr double mdot(const Vec3& a, const Vec3& b) { return -a.x * b.x + a.y * b.y + a.z * b.z; }

/// Lorentz cross product: mdot(mcross(a, b), c) == det(a, b, c).
constexpr Vec3 mcross(const Vec3& a, const Vec3& b) {
    const Vec3 c = cross(a, b);
    return {-c.x, c.y, c.z};
}

} // namespace fourpt
