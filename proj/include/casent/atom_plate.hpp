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

// Nanoparticle in front of a perfectly conducting plate, dipole and
// single-scattering order. With y = 4 pi Z T the electric free energy is
//
//   F = -(3 alpha_z / 8 pi Z^4) f(gamma, y),
//   f(gamma, y) = (y/6) sum'_m e^{-my} [(1+gamma)(1+my) + gamma (my)^2],
//
// and the entropy S = (3 alpha_z / 2 Z^3) s(gamma, y) with s = df/dy.
// The TE part of the plate response carries only the transverse polarizability:
//   f_TE = (y/6) sum'_m e^{-my} (gamma/2)(my)^2 = (gamma/12) y^3 g''(y),
// the TM part is the remainder. The magnetic polarizability enters through
// alpha -> -beta.

#pragma once

#include "casent/errors.hpp"
#include "casent/matsubara_kernels.hpp"
#include "casent/particle.hpp"

#include <array>
#include <cmath>
#include <string>
#include <string_view>

namespace casent {

namespace atom_plate_detail {

inline void check(double gamma, double y)
{
    detail::require(std::isfinite(gamma) && gamma >= 0.0, "atom-plate: anisotropy must be finite and nonnegative");
    detail::require(std::isfinite(y) && y >= 0.0, "atom-plate: y must be finite and nonnegative");
}

inline KernelCombination free_energy(double gamma, double transverse_weight)
{
    const std::array<double, 3> poly{1.0 + gamma, 1.0 + gamma, transverse_weight * gamma};
    return mode_sum(poly, 1.0 / 6.0, 1);
}

inline KernelCombination te_free_energy(double gamma)
{
    const std::array<double, 3> poly{0.0, 0.0, 0.5 * gamma};
    return mode_sum(poly, 1.0 / 6.0, 1);
}

inline double evaluate(const KernelCombination& c, double y)
{
    return y == 0.0 ? c.limit_at_zero() : c(y);
}

}  // namespace atom_plate_detail

/// Reduced free energy f(gamma, y), f(1, 0) = 1.
inline double reduced_f(double gamma, double y)
{
    atom_plate_detail::check(gamma, y);
    return atom_plate_detail::evaluate(atom_plate_detail::free_energy(gamma, 1.0), y);
}

/// Reduced entropy s(gamma, y) = df/dy.
inline double reduced_s(double gamma, double y)
{
    atom_plate_detail::check(gamma, y);
    return atom_plate_detail::evaluate(atom_plate_detail::free_energy(gamma, 1.0).derivative(), y);
}

/// Rescaled entropy y^-3 s(gamma, y); finite as y -> 0.
inline double reduced_s_tilde(double gamma, double y)
{
    atom_plate_detail::check(gamma, y);
    return atom_plate_detail::evaluate(atom_plate_detail::free_energy(gamma, 1.0).derivative().shifted(-3), y);
}

struct TeTmSplit
{
    double te = 0.0;
    double tm = 0.0;
};

/// Plate TE (E) and TM (H) contributions to s(gamma, y).
inline TeTmSplit te_tm_split(double gamma, double y)
{
    atom_plate_detail::check(gamma, y);
    const auto te = atom_plate_detail::te_free_energy(gamma).derivative();
    const auto tm = atom_plate_detail::free_energy(gamma, 0.5).derivative();
    return {atom_plate_detail::evaluate(te, y), atom_plate_detail::evaluate(tm, y)};
}

enum class AtomPlateChannel
{
    total,
    electric,
    magnetic,
    te,
    tm,
};

inline AtomPlateChannel atom_plate_channel_from_string(std::string_view name)
{
    if (name == "total") return AtomPlateChannel::total;
    if (name == "electric") return AtomPlateChannel::electric;
    if (name == "magnetic") return AtomPlateChannel::magnetic;
    if (name == "te" || name == "TE") return AtomPlateChannel::te;
    if (name == "tm" || name == "TM") return AtomPlateChannel::tm;
    throw DomainError("atom-plate: unknown channel '" + std::string(name) + "'");
}

/// Interaction entropy of particle p with the plate, natural units.
inline double entropy_atom_plate(const Particle& p, const ThermalGeometry& geom,
                                 AtomPlateChannel channel = AtomPlateChannel::total)
{
    p.validate();
    geom.validate();
    const double y = geom.y();
    const double z3 = geom.Z * geom.Z * geom.Z;
    const double electric_scale = 1.5 * p.alpha_z / z3;
    const double magnetic_scale = -1.5 * p.beta_z / z3;
    switch (channel) {
    case AtomPlateChannel::electric: return electric_scale * reduced_s(p.gamma_alpha, y);
    case AtomPlateChannel::magnetic:
        return p.beta_z == 0.0 ? 0.0 : magnetic_scale * reduced_s(p.gamma_beta, y);
    case AtomPlateChannel::total:
        return entropy_atom_plate(p, geom, AtomPlateChannel::electric) +
               entropy_atom_plate(p, geom, AtomPlateChannel::magnetic);
    case AtomPlateChannel::te:
    case AtomPlateChannel::tm: {
        const auto e = te_tm_split(p.gamma_alpha, y);
        double v = electric_scale * (channel == AtomPlateChannel::te ? e.te : e.tm);
        if (p.beta_z != 0.0) {
            const auto m = te_tm_split(p.gamma_beta, y);
            v += magnetic_scale * (channel == AtomPlateChannel::te ? m.te : m.tm);
        }
        return v;
    }
    }
    throw DomainError("atom-plate: unknown channel");
}

}  // namespace casent
