// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbrfit/geom.hpp"

namespace pbrfit {

// Simplified Disney triple at one surface point: base color in [0,1]^3,
// metallic and roughness in [0,1].
struct BRDFParams {
    RGB albedo{0.5, 0.5, 0.5};
    double metallic = 0.0;
    double roughness = 1.0;
};

// The 1/r^4 sharpness of the spherical-Gaussian NDF is singular at r = 0;
// evaluation clamps roughness to this floor (the stored parameter stays in
// [0,1]). 0.04 matches the dielectric base-reflectance scale.
inline constexpr double kRoughnessMin = 0.04;

// Floor for the 4 (n.wi)(n.wo) specular denominator at grazing angles.
inline constexpr double kSpecularDenomMin = 1e-4;

inline double roughness_eff(double roughness) { return std::max(roughness, kRoughnessMin); }

enum class LobeMask : unsigned {
    Diffuse = 1u,
    Specular = 2u,
    All = 3u,
};

inline bool has_lobe(LobeMask mask, LobeMask lobe) {
    return (static_cast<unsigned>(mask) & static_cast<unsigned>(lobe)) != 0u;
}

// View-independent lobe: (1 - metallic) / pi * albedo.
RGB eval_diffuse(const BRDFParams& p);

// Spherical-Gaussian normal distribution, peaked at cos_h = 1:
// D = exp(2 (cos_h - 1) / r^4) / (pi r^4). Requires the clamped roughness.
double eval_ndf(double cos_h, double r_eff);

// Schlick approximation with base reflectance F0 = 0.04 (1 - m) + albedo * m.
RGB eval_fresnel(double cos_oh, const BRDFParams& p);

// Separable GGX-style masking-shadowing: G1(z) = 2 / ((2 - r^2) z + r^2),
// G = G1(cos_i) G1(cos_o). Both cosines must be positive.
double eval_geometry(double cos_i, double cos_o, double r_eff);

// Microfacet lobe D*F*G / max(4 cos_i cos_o, denom floor). Returns zero when
// either direction is below the horizon.
RGB eval_specular(const Dir& w_o, const Dir& w_i, const Dir& n, const BRDFParams& p);

RGB eval_brdf(const Dir& w_o, const Dir& w_i, const Dir& n, const BRDFParams& p,
              LobeMask lobes = LobeMask::All);

}  // namespace pbrfit
