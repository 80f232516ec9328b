// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pbrfit/geom.hpp"

namespace pbrfit {

struct Ray {
    Vec3 origin;
    Dir dir;
};

struct SurfaceHit {
    Vec3 point;
    Dir normal;       // faces the ray origin
    double u = 0.0;   // in [0,1]
    double v = 0.0;   // in [0,1]
    int primitive_id = -1;
    double t_hit = 0.0;
};

struct Sphere {
    Vec3 center;
    double radius = 1.0;
};

// Finite square patch centered at `point`, half-width `extent`; UV is the
// affine coordinate over the patch in the normal's tangent frame.
struct Plane {
    Vec3 point;
    Dir normal;
    double extent = 1.0;
};

struct Primitive {
    std::variant<Sphere, Plane> shape;
    int material_id = 0;
};

struct Scene {
    std::vector<Primitive> primitives;
};

// Nearest positive-t intersection over all primitives; exact ties keep the
// lowest primitive id. Normals face the ray origin; UV is spherical for
// spheres and affine over the extent for planes.
std::optional<SurfaceHit> intersect(const Scene& scene, const Ray& ray);

// True when any primitive blocks the open segment (a, b).
bool segment_occluded(const Scene& scene, const Vec3& a, const Vec3& b);

}  // namespace pbrfit
