// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "pbrfit/scene.hpp"

namespace pbrfit {

struct Camera {
    Vec3 position;
    Vec3 look_at;
    Vec3 up{0.0, 0.0, 1.0};
    double vertical_fov = 0.7853981633974483;  // radians
    int width = 1;
    int height = 1;
};

// Pinhole ray through the center of pixel (px, py); py indexes rows from the
// top of the image.
Ray camera_ray(const Camera& cam, int px, int py);

// One ray per pixel, row-major.
std::vector<Ray> camera_rays(const Camera& cam);

}  // namespace pbrfit
