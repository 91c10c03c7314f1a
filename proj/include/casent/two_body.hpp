// Copyright 2026 The casent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Two uniaxial nanoparticles with axes along the separation, dipole order.
// With u = m y / 2 and w = m y,
//
//   f_EE(gamma, y) = (y/23) [2 gamma G_t(y) + 4 G_l(y)],
//     G_t = sum'_m (1 + u + u^2)^2 e^{-w},   G_l = sum'_m (1 + u)^2 e^{-w},
//   s_EE = d f_EE / dy,
//   s_EM(y) = (1/7) d/dy [2 y G_c(y)],  G_c = sum'_m u^2 (1 + u)^2 e^{-w}.
//
// gamma in f_EE is the product of the two anisotropies. The EM kernel is
// normalized so that 2 y G_c -> 7 at zero temperature.

#pragma once

#include "casent/errors.hpp"
#include "casent/matsubara_kernels.hpp"
#include "casent/particle.hpp"

#include <array>
#include <cmath>
#include <optional>

namespace casent {

namespace two_body_detail {

// (1 + w/2 + w^2/4)^2 and (1 + w/2)^2 and (w/2)^2 (1 + w/2)^2 in powers of w = m y
inline constexpr std::array<double, 5> transverse_poly{1.0, 1.0, 0.75, 0.25, 0.0625};
inline constexpr std::array<double, 5> longitudinal_poly{1.0, 1.0, 0.25, 0.0, 0.0};
inline constexpr std::array<double, 5> cross_poly{0.0, 0.0, 0.25, 0.25, 0.0625};

inline KernelCombination ee_free_energy(double gamma)
{
    std::array<double, 5> poly{};
    for (std::size_t k = 0; k < poly.size(); ++k)
        poly[k] = 2.0 * gamma * transverse_poly[k] + 4.0 * longitudinal_poly[k];
    return mode_sum(poly, 1.0 / 23.0, 1);
}

inline KernelCombination em_free_energy() { return mode_sum(cross_poly, 2.0 / 7.0, 1); }

inline double evaluate(const KernelCombination& c, double y)
{
    return y == 0.0 ? c.limit_at_zero() : c(y);
}

inline void check_y(double y)
{
    detail::require(std::isfinite(y) && y >= 0.0, "two-body: y must be finite and nonnegative");
}

}  // namespace two_body_detail

struct EeReduced
{
    double f = 0.0;
    double s = 0.0;
};

/// Reduced EE (or MM) free energy and entropy; gamma = gamma_1 gamma_2.
inline EeReduced reduced_ee(double gamma, double y)
{
    detail::require(std::isfinite(gamma) && gamma >= 0.0, "two-body: anisotropy must be finite and nonnegative");
    two_body_detail::check_y(y);
    const auto f = two_body_detail::ee_free_energy(gamma);
    return {two_body_detail::evaluate(f, y), two_body_detail::evaluate(f.derivative(), y)};
}

/// Reduced EM cross entropy; the free-energy kernel 2 y G_c / 7 is also exposed.
inline double reduced_em(double y)
{
    two_body_detail::check_y(y);
    return two_body_detail::evaluate(two_body_detail::em_free_energy().derivative(), y);
}

inline double reduced_em_free_energy(double y)
{
    two_body_detail::check_y(y);
    return two_body_detail::evaluate(two_body_detail::em_free_energy(), y);
}

struct PairConfiguration
{
    Particle p1;
    Particle p2;
    ThermalGeometry geom;
};

struct TwoBodyChannels
{
    double S_EE = 0.0;
    double S_MM = 0.0;
    double S_EM = 0.0;
    double S_total = 0.0;
    double s_EE = 0.0;  // s_EE(gamma_alpha1 gamma_alpha2, y)
    double s_MM = 0.0;  // s_EE(gamma_beta1 gamma_beta2, y)
    double s_EM = 0.0;
    std::optional<double> reduced_total;  // S_total Z^6 / (alpha_z^1)^2
};

/// Channel entropies in units where S = [(alpha_z^1)^2 / Z^6] s; Z-independent.
struct ReducedPairChannels
{
    double ee = 0.0;
    double mm = 0.0;
    double em = 0.0;
    double total = 0.0;
};

namespace two_body_detail {

// Channel prefactors times Z^6.
struct Prefactors
{
    double ee, mm, em;
};

inline Prefactors prefactors(const Particle& p1, const Particle& p2)
{
    return {23.0 * p1.alpha_z * p2.alpha_z, 23.0 * p1.beta_z * p2.beta_z,
            -7.0 * (p1.alpha_perp() * p2.beta_perp() + p1.beta_perp() * p2.alpha_perp())};
}

}  // namespace two_body_detail

inline ReducedPairChannels reduced_pair_entropy(const Particle& p1, const Particle& p2, double y)
{
    p1.validate();
    p2.validate();
    two_body_detail::check_y(y);
    detail::require(p1.alpha_z > 0.0, "two-body: reduced normalization needs alpha_z^1 > 0");
    const auto pre = two_body_detail::prefactors(p1, p2);
    const double norm = p1.alpha_z * p1.alpha_z;
    ReducedPairChannels r;
    if (pre.ee != 0.0) r.ee = pre.ee / norm * reduced_ee(p1.gamma_alpha * p2.gamma_alpha, y).s;
    if (pre.mm != 0.0) r.mm = pre.mm / norm * reduced_ee(p1.gamma_beta * p2.gamma_beta, y).s;
    if (pre.em != 0.0) r.em = pre.em / norm * reduced_em(y);
    r.total = r.ee + r.mm + r.em;
    return r;
}

inline TwoBodyChannels entropy_two_body(const PairConfiguration& cfg)
{
    cfg.p1.validate();
    cfg.p2.validate();
    cfg.geom.validate();
    const double y = cfg.geom.y();
    const double z2 = cfg.geom.Z * cfg.geom.Z;
    const double z6 = z2 * z2 * z2;
    const auto pre = two_body_detail::prefactors(cfg.p1, cfg.p2);

    TwoBodyChannels c;
    c.s_EE = reduced_ee(cfg.p1.gamma_alpha * cfg.p2.gamma_alpha, y).s;
    c.s_MM = reduced_ee(cfg.p1.gamma_beta * cfg.p2.gamma_beta, y).s;
    c.s_EM = reduced_em(y);
    c.S_EE = pre.ee / z6 * c.s_EE;
    c.S_MM = pre.mm / z6 * c.s_MM;
    c.S_EM = pre.em / z6 * c.s_EM;
    c.S_total = c.S_EE + c.S_MM + c.S_EM;
    if (cfg.p1.alpha_z > 0.0) c.reduced_total = c.S_total * z6 / (cfg.p1.alpha_z * cfg.p1.alpha_z);
    return c;
}

}  // namespace casent
