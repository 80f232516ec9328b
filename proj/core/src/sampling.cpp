// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbrfit/sampling.hpp"

namespace pbrfit {

namespace {
// (sqrt(5) - 1) / 2
constexpr double kGoldenConjugate = 0.6180339887498948482;
}  // namespace

std::vector<Vec3> fibonacci_local(int n_samples, double rotation) {
    if (n_samples < 1)
        throw DomainError("fibonacci_local: n_samples must be >= 1");
    std::vector<Vec3> dirs;
    dirs.reserve(static_cast<size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        double z = (k + 0.5) / n_samples;
        double phi = kTwoPi * k * kGoldenConjugate + rotation;
        double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        dirs.push_back({s * std::cos(phi), s * std::sin(phi), z});
    }
    return dirs;
}

DirectionSet transform_to_frame(const std::vector<Vec3>& local, const ShadingFrame& frame) {
    DirectionSet set;
    set.dirs.reserve(local.size());
    for (const Vec3& d : local)
        set.dirs.push_back(frame.to_world(d));
    set.quad_weight = kTwoPi / static_cast<double>(local.size());
    return set;
}

DirectionSet fibonacci_hemisphere(int n_samples, const ShadingFrame& frame, double rotation) {
    return transform_to_frame(fibonacci_local(n_samples, rotation), frame);
}

}  // namespace pbrfit
