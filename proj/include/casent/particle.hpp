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

#pragma once

#include "casent/errors.hpp"

#include <cmath>
#include <numbers>

namespace casent {

/// Uniaxial static polarizabilities of a nanoparticle whose symmetry axis is
/// aligned with the separation direction. Natural units, length^3.
struct Particle
{
    double alpha_z = 0.0;
    double gamma_alpha = 1.0;  // alpha_perp / alpha_z
    double beta_z = 0.0;
    double gamma_beta = 1.0;   // beta_perp / beta_z

    [[nodiscard]] double alpha_perp() const { return gamma_alpha * alpha_z; }
    [[nodiscard]] double beta_perp() const { return gamma_beta * beta_z; }

    void validate() const
    {
        detail::require(std::isfinite(alpha_z) && std::isfinite(beta_z) && std::isfinite(gamma_alpha) &&
                            std::isfinite(gamma_beta),
                        "particle: non-finite polarizability");
        detail::require(alpha_z >= 0.0, "particle: alpha_z must be nonnegative");
        detail::require(gamma_alpha >= 0.0, "particle: gamma_alpha must be nonnegative");
        detail::require(gamma_beta >= 0.0, "particle: gamma_beta must be nonnegative");
    }

    /// Perfectly conducting sphere of radius a: alpha = -2 beta = a^3.
    static Particle pc_sphere(double a)
    {
        detail::require(std::isfinite(a) && a > 0.0, "particle: sphere radius must be positive");
        const double v = a * a * a;
        return {v, 1.0, -0.5 * v, 1.0};
    }

    /// Drude nanoparticle: electric response only.
    static Particle drude(double alpha_z, double gamma_alpha = 1.0)
    {
        Particle p{alpha_z, gamma_alpha, 0.0, 1.0};
        p.validate();
        return p;
    }

    friend bool operator==(const Particle&, const Particle&) = default;
};

/// Separation Z (length) and temperature T (inverse length).
struct ThermalGeometry
{
    double Z = 1.0;
    double T = 0.0;

    [[nodiscard]] double y() const { return 4.0 * std::numbers::pi * Z * T; }

    void validate() const
    {
        detail::require(std::isfinite(Z) && Z > 0.0, "geometry: separation must be positive");
        detail::require(std::isfinite(T) && T >= 0.0, "geometry: temperature must be nonnegative");
    }
};

}  // namespace casent
