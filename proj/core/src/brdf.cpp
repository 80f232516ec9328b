// Copyright 2026 The pbrfit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbrfit/brdf.hpp"

namespace pbrfit {

RGB eval_diffuse(const BRDFParams& p) {
    double scale = (1.0 - p.metallic) / kPi;
    return p.albedo * scale;
}

double eval_ndf(double cos_h, double r_eff) {
    if (r_eff < kRoughnessMin)
        throw DomainError("eval_ndf: roughness below evaluation clamp");
    double r4 = r_eff * r_eff * r_eff * r_eff;
    return std::exp(2.0 / r4 * (cos_h - 1.0)) / (kPi * r4);
}

RGB eval_fresnel(double cos_oh, const BRDFParams& p) {
    double w = 1.0 - cos_oh;
    double w2 = w * w;
    double s5 = w2 * w2 * w;
    auto schlick = [&](double f0) { return f0 + (1.0 - f0) * s5; };
    double m = p.metallic;
    return {schlick(0.04 * (1.0 - m) + p.albedo.r * m),
            schlick(0.04 * (1.0 - m) + p.albedo.g * m),
            schlick(0.04 * (1.0 - m) + p.albedo.b * m)};
}

double eval_geometry(double cos_i, double cos_o, double r_eff) {
    if (cos_i <= 0.0 || cos_o <= 0.0)
        throw DomainError("eval_geometry: cosines must be positive");
    double r2 = r_eff * r_eff;
    double g1i = 2.0 / ((2.0 - r2) * cos_i + r2);
    double g1o = 2.0 / ((2.0 - r2) * cos_o + r2);
    return g1i * g1o;
}

RGB eval_specular(const Dir& w_o, const Dir& w_i, const Dir& n, const BRDFParams& p) {
    double cos_i = dot(n, w_i);
    double cos_o = dot(n, w_o);
    if (cos_i <= 0.0 || cos_o <= 0.0)
        return RGB{};  // below-horizon samples contribute nothing
    Dir h = halfway(w_o, w_i);
    double r_e = roughness_eff(p.roughness);
    double d = eval_ndf(dot(h, n), r_e);
    RGB f = eval_fresnel(std::clamp(dot(w_o, h), 0.0, 1.0), p);
    double g = eval_geometry(cos_i, cos_o, r_e);
    double denom = std::max(4.0 * cos_i * cos_o, kSpecularDenomMin);
    return f * (d * g / denom);
}

RGB eval_brdf(const Dir& w_o, const Dir& w_i, const Dir& n, const BRDFParams& p, LobeMask lobes) {
    RGB out{};
    if (has_lobe(lobes, LobeMask::Diffuse))
        out += eval_diffuse(p);
    if (has_lobe(lobes, LobeMask::Specular))
        out += eval_specular(w_o, w_i, n, p);
    return out;
}

}  // namespace pbrfit
