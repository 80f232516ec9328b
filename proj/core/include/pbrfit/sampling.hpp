// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "pbrfit/geom.hpp"

namespace pbrfit {

// Fixed hemisphere quadrature set. Directions are unit vectors in world
// space, all on the positive side of the frame they were built in, and
// quad_weight = 2*pi / dirs.size() (steradians per sample).
struct DirectionSet {
    std::vector<Vec3> dirs;
    double quad_weight = 0.0;
};

// Golden-angle spiral over the local hemisphere: z_k = (k + 0.5) / n,
// phi_k = 2*pi * k * (golden ratio conjugate) + rotation. z is uniform in
// [0,1], so the plain 2*pi/n weight integrates solid angle exactly.
std::vector<Vec3> fibonacci_local(int n_samples, double rotation = 0.0);

// Local spiral rotated into a shading frame.
DirectionSet transform_to_frame(const std::vector<Vec3>& local, const ShadingFrame& frame);

DirectionSet fibonacci_hemisphere(int n_samples, const ShadingFrame& frame, double rotation = 0.0);

}  // namespace pbrfit
