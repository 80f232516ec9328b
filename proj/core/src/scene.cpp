// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbrfit/scene.hpp"

#include <algorithm>

namespace pbrfit {

namespace {

constexpr double kTMin = 1e-9;

inline double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

struct LocalHit {
    double t;
    Vec3 normal;  // geometric, unit
    double u, v;
};

std::optional<LocalHit> hit_sphere(const Sphere& s, const Ray& ray) {
    Vec3 oc = ray.origin - s.center;
    double b = dot(oc, ray.dir.vec());
    double c = length_squared(oc) - s.radius * s.radius;
    double disc = b * b - c;
    if (disc < 0.0)
        return std::nullopt;
    double sq = std::sqrt(disc);
    double t = -b - sq;
    if (t < kTMin)
        t = -b + sq;
    if (t < kTMin)
        return std::nullopt;
    Vec3 p = ray.origin + ray.dir.vec() * t;
    Vec3 n = (p - s.center) / s.radius;
    double nl = length(n);
    n = n / nl;  // renormalize against roundoff on grazing hits
    double phi = std::atan2(n.y, n.x);
    if (phi < 0.0)
        phi += kTwoPi;
    double theta = std::acos(std::clamp(n.z, -1.0, 1.0));
    return LocalHit{t, n, clamp01(phi / kTwoPi), clamp01(theta / kPi)};
}

std::optional<LocalHit> hit_plane(const Plane& pl, const Ray& ray) {
    double denom = dot(pl.normal.vec(), ray.dir.vec());
    if (std::abs(denom) < 1e-12)
        return std::nullopt;
    double t = dot(pl.point - ray.origin, pl.normal.vec()) / denom;
    if (t < kTMin)
        return std::nullopt;
    Vec3 p = ray.origin + ray.dir.vec() * t;
    ShadingFrame frame = build_frame(pl.normal);
    Vec3 rel = p - pl.point;
    double lx = dot(frame.t.vec(), rel);
    double ly = dot(frame.b.vec(), rel);
    if (std::abs(lx) > pl.extent || std::abs(ly) > pl.extent)
        return std::nullopt;
    return LocalHit{t, pl.normal.vec(),
                    clamp01(0.5 + lx / (2.0 * pl.extent)),
                    clamp01(0.5 + ly / (2.0 * pl.extent))};
}

std::optional<LocalHit> hit_primitive(const Primitive& prim, const Ray& ray) {
    if (const Sphere* s = std::get_if<Sphere>(&prim.shape))
        return hit_sphere(*s, ray);
    return hit_plane(std::get<Plane>(prim.shape), ray);
}

}  // namespace

std::optional<SurfaceHit> intersect(const Scene& scene, const Ray& ray) {
    std::optional<SurfaceHit> best;
    for (size_t i = 0; i < scene.primitives.size(); ++i) {
        auto lh = hit_primitive(scene.primitives[i], ray);
        if (!lh)
            continue;
        if (best && lh->t >= best->t_hit)
            continue;
        Vec3 n = lh->normal;
        if (dot(n, ray.dir.vec()) > 0.0)
            n = -n;
        best = SurfaceHit{ray.origin + ray.dir.vec() * lh->t, Dir(n), lh->u, lh->v,
                          static_cast<int>(i), lh->t};
    }
    return best;
}

bool segment_occluded(const Scene& scene, const Vec3& a, const Vec3& b) {
    Vec3 d = b - a;
    double dist = length(d);
    if (dist < 1e-9)
        return false;
    Ray ray{a, Dir(d / dist)};
    // offset both ends so a surface does not shadow itself
    const double eps = 1e-6 * std::max(1.0, dist);
    Ray offset{ray.origin + ray.dir.vec() * eps, ray.dir};
    auto hit = intersect(scene, offset);
    return hit && hit->t_hit < dist - 2.0 * eps;
}

}  // namespace pbrfit
