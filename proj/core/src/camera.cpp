// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbrfit/camera.hpp"

namespace pbrfit {

namespace {

struct CameraBasis {
    Vec3 forward, right, up;
    double tan_half, aspect;
};

CameraBasis basis_of(const Camera& cam) {
    if (cam.width < 1 || cam.height < 1)
        throw DomainError("camera: width and height must be >= 1");
    if (!(cam.vertical_fov > 0.0) || !(cam.vertical_fov < kPi))
        throw DomainError("camera: vertical_fov must be in (0, pi)");
    Vec3 forward = Dir::normalize(cam.look_at - cam.position).vec();
    Vec3 right = Dir::normalize(cross(forward, cam.up)).vec();
    Vec3 up = cross(right, forward);
    return {forward, right, up, std::tan(cam.vertical_fov / 2.0),
            static_cast<double>(cam.width) / cam.height};
}

Ray ray_through(const Camera& cam, const CameraBasis& b, int px, int py) {
    double sx = ((px + 0.5) / cam.width * 2.0 - 1.0) * b.tan_half * b.aspect;
    double sy = (1.0 - (py + 0.5) / cam.height * 2.0) * b.tan_half;
    Vec3 d = b.forward + b.right * sx + b.up * sy;
    return Ray{cam.position, Dir::normalize(d)};
}

}  // namespace

Ray camera_ray(const Camera& cam, int px, int py) {
    return ray_through(cam, basis_of(cam), px, py);
}

std::vector<Ray> camera_rays(const Camera& cam) {
    CameraBasis b = basis_of(cam);
    std::vector<Ray> rays;
    rays.reserve(static_cast<size_t>(cam.width) * cam.height);
    for (int py = 0; py < cam.height; ++py)
        for (int px = 0; px < cam.width; ++px)
            rays.push_back(ray_through(cam, b, px, py));
    return rays;
}

}  // namespace pbrfit
