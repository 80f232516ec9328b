// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbrfit/geom.hpp"

namespace pbrfit {

ShadingFrame build_frame(const Dir& n) {
    const Vec3& nv = n.vec();
    double ax = std::abs(nv.x), ay = std::abs(nv.y), az = std::abs(nv.z);
    // least-aligned coordinate axis, ties broken in x, y, z order so the
    // frame is deterministic for a given n
    Vec3 axis{0.0, 0.0, 1.0};
    if (ax <= ay && ax <= az)
        axis = {1.0, 0.0, 0.0};
    else if (ay <= az)
        axis = {0.0, 1.0, 0.0};
    Vec3 t = axis - nv * dot(axis, nv);
    Dir tangent = Dir::normalize(t);
    Dir bitangent = Dir(cross(nv, tangent.vec()));
    return ShadingFrame{tangent, bitangent, n};
}

Dir halfway(const Dir& w_o, const Dir& w_i) {
    Vec3 sum = w_o.vec() + w_i.vec();
    double len = length(sum);
    if (len < 1e-9)
        throw DomainError("halfway: near-antipodal direction pair");
    return Dir(sum / len);
}

}  // namespace pbrfit
