#pragma once

#include "feasikit/numerics/scalar.hpp"

namespace feasikit {

/// A point (x, z) of the plane.
struct Point2 {
    Scalar x;
    Scalar z;

    /// Euclidean radius R >= 0.
    [[nodiscard]] Scalar radius() const { return hypot(x, z); }
    /// Polar angle in [0, 2pi).
    [[nodiscard]] Scalar angle() const;

    static Point2 polar(const Scalar& radius, const Scalar& theta) { return {radius * cos(theta), radius * sin(theta)}; }

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.z + b.z}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.z - b.z}; }
    friend Point2 operator-(const Point2& a) { return {-a.x, -a.z}; }
    friend Point2 operator*(const Scalar& s, const Point2& p) { return {s * p.x, s * p.z}; }
    friend Point2 operator*(long k, const Point2& p) { return {k * p.x, k * p.z}; }
    friend Point2 operator/(const Point2& p, long k) { return {p.x / k, p.z / k}; }
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.z == b.z; }
};

inline Scalar inner(const Point2& a, const Point2& b) { return a.x * b.x + a.z * b.z; }
inline Scalar norm(const Point2& a) { return a.radius(); }
inline Scalar distance(const Point2& a, const Point2& b) { return norm(a - b); }

inline Scalar Point2::angle() const {
    Scalar t = atan2(z, x);
    if (t < 0) t += 2 * Scalar::pi(t.bits());
    return t;
}

}  // namespace feasikit
