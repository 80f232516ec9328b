// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pbrfit {

// Thrown when a numeric precondition is violated (degenerate halfway pair,
// out-of-domain cosine, roughness below the evaluation clamp, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a loss or gradient goes non-finite; names the parameter segment.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on file IO failures; message carries the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
    bool operator==(const Vec3& o) const = default;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double length_squared(const Vec3& v) { return dot(v, v); }
inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Unit-length direction. Construction asserts the invariant in debug builds;
// use Dir::normalize for vectors of arbitrary length.
class Dir {
  public:
    Dir() : v_{0.0, 0.0, 1.0} {}
    explicit Dir(const Vec3& unit) : v_(unit) {
        assert(std::abs(length_squared(unit) - 1.0) < 1e-6);
    }

    static Dir normalize(const Vec3& v) {
        double len = length(v);
        if (!(len > 1e-12) || !std::isfinite(len))
            throw DomainError("Dir::normalize: degenerate vector");
        return Dir(Vec3{v.x / len, v.y / len, v.z / len});
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    Dir operator-() const { return Dir(Vec3{-v_.x, -v_.y, -v_.z}); }

  private:
    Vec3 v_;
};

inline double dot(const Dir& a, const Dir& b) { return dot(a.vec(), b.vec()); }
inline double dot(const Dir& a, const Vec3& b) { return dot(a.vec(), b); }
inline double dot(const Vec3& a, const Dir& b) { return dot(a, b.vec()); }

// Linear radiance / reflectance triple.
struct RGB {
    double r = 0.0, g = 0.0, b = 0.0;

    RGB operator+(const RGB& o) const { return {r + o.r, g + o.g, b + o.b}; }
    RGB operator-(const RGB& o) const { return {r - o.r, g - o.g, b - o.b}; }
    RGB operator*(const RGB& o) const { return {r * o.r, g * o.g, b * o.b}; }
    RGB operator*(double s) const { return {r * s, g * s, b * s}; }
    RGB operator/(double s) const { return {r / s, g / s, b / s}; }
    RGB& operator+=(const RGB& o) {
        r += o.r; g += o.g; b += o.b;
        return *this;
    }
    bool operator==(const RGB& o) const = default;

    double mean() const { return (r + g + b) / 3.0; }
    double max_component() const { return std::max(r, std::max(g, b)); }
    double min_component() const { return std::min(r, std::min(g, b)); }
};

inline RGB operator*(double s, const RGB& c) { return c * s; }

inline bool is_finite(const RGB& c) {
    return std::isfinite(c.r) && std::isfinite(c.g) && std::isfinite(c.b);
}

// Rec. 709 luma of linear radiance.
inline double luminance(const RGB& c) { return 0.2126 * c.r + 0.7152 * c.g + 0.0722 * c.b; }

// Right-handed orthonormal frame {t, b, n}; n is the surface normal.
struct ShadingFrame {
    Dir t, b, n;

    Vec3 to_world(const Vec3& local) const {
        return t.vec() * local.x + b.vec() * local.y + n.vec() * local.z;
    }
    Vec3 to_local(const Vec3& world) const {
        return {dot(t.vec(), world), dot(b.vec(), world), dot(n.vec(), world)};
    }
};

// Deterministic tangent frame: Gram-Schmidt against the coordinate axis
// least aligned with n.
ShadingFrame build_frame(const Dir& n);

// Normalized sum of the outgoing and incident directions. Throws DomainError
// for near-antipodal pairs (|w_o + w_i| < 1e-9).
Dir halfway(const Dir& w_o, const Dir& w_i);

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace pbrfit
