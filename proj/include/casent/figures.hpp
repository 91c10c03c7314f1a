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

// Data recipes for the standard curve families. A recipe names its abscissa,
// the sweep, and the curves; each curve is evaluated at
// argument = abscissa * argument_scale and multiplied by value_scale.

#pragma once

#include "casent/analysis.hpp"
#include "casent/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace casent {

/// start:stop:count:log|lin
struct Sweep
{
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    bool log = false;

    void validate() const
    {
        detail::require(count >= 2, "sweep: count must be at least 2");
        detail::require(std::isfinite(start) && std::isfinite(stop) && start < stop, "sweep: start must be below stop");
        detail::require(!log || start > 0.0, "sweep: log sweeps need a positive start");
    }

    [[nodiscard]] std::vector<double> values() const
    {
        validate();
        std::vector<double> v(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const double t = static_cast<double>(i) / (count - 1);
            v[i] = log ? start * std::pow(stop / start, t) : start + (stop - start) * t;
        }
        v.front() = start;
        v.back() = stop;
        return v;
    }

    friend bool operator==(const Sweep&, const Sweep&) = default;
};

struct FigureCurve
{
    std::string label;
    CurveSpec curve;
    double argument_scale = 1.0;
    double value_scale = 1.0;
};

struct FigureRecipe
{
    std::string id;
    std::string description;
    std::string abscissa;
    std::string abscissa_meaning;
    Sweep sweep;
    std::string normalization;
    std::vector<FigureCurve> curves;
};

inline const std::vector<std::string>& figure_ids()
{
    static const std::vector<std::string> ids{"fig1", "fig1a", "fig2", "fig3", "fig4", "figiv",
                                              "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"};
    return ids;
}

namespace figure_detail {

inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline void add_plate_split(FigureRecipe& r, double g)
{
    const std::string tag = "[gamma=" + num(g) + "]";
    r.curves.push_back({"s" + tag, AtomPlateCurve{g, PlateSplitChannel::total}});
    r.curves.push_back({"s_TE" + tag, AtomPlateCurve{g, PlateSplitChannel::te}});
    r.curves.push_back({"s_TM" + tag, AtomPlateCurve{g, PlateSplitChannel::tm}});
}

inline std::string particle_tag(const Particle& p)
{
    return "alpha_z=" + num(p.alpha_z) + ";gamma_alpha=" + num(p.gamma_alpha) + ";beta_z=" + num(p.beta_z) +
           ";gamma_beta=" + num(p.gamma_beta);
}

}  // namespace figure_detail

/// Recipe for one figure id. product_anisotropy selects the reading of the
/// fig6 labels as gamma_1 gamma_2 instead of per-particle anisotropy.
inline FigureRecipe figure_recipe(std::string_view id, bool product_anisotropy = false)
{
    using figure_detail::num;
    constexpr double four_pi = 4.0 * std::numbers::pi;
    const Sweep y_plate{0.0, 10.0, 201, false};
    const Sweep y_pair{0.0, 20.0, 401, false};
    const std::string y_meaning = "y = 4 pi Z T";
    const std::string pair_norm = "S = [(alpha_z^1)^2 / Z^6] s";

    FigureRecipe r;
    r.id = std::string(id);
    if (id == "fig1") {
        r.description = "sphere-plate and sphere-sphere entropy, conducting spheres, normalized to high temperature";
        r.abscissa = "TZ";
        r.abscissa_meaning = "T Z";
        r.sweep = {0.002, 4.0, 600, true};
        r.normalization = "each curve divided by its high-temperature plateau (1/6 and 15/4)";
        const auto pc = Particle::pc_sphere(1.0);
        r.curves.push_back({"Sph-Pl", AtomPlateCurve{1.0, PlateSplitChannel::total}, four_pi, 6.0});
        r.curves.push_back({"Sph-Sph", PairCurve{pc, pc, PairChannel::total}, four_pi, 4.0 / 15.0});
    } else if (id == "fig1a") {
        r.description = "rescaled entropy y^-3 s for an isotropic electric particle and a conducting plate";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_plate;
        r.normalization = "S = (3 alpha_z / 2)(4 pi T)^3 s_tilde";
        r.curves.push_back({"s_tilde[gamma=1]", AtomPlateCurve{1.0, PlateSplitChannel::s_tilde}});
    } else if (id == "fig2") {
        r.description = "electric particle and conducting plate";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_plate;
        r.normalization = "S = (3 alpha_z / 2 Z^3) s";
        for (double g : {0.0, 0.5, 1.0, 2.0})
            r.curves.push_back({"s[gamma=" + num(g) + "]", AtomPlateCurve{g, PlateSplitChannel::total}});
    } else if (id == "fig3") {
        r.description = "electric particle and conducting plate, TE and TM plate channels";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_plate;
        r.normalization = "S = (3 alpha_z / 2 Z^3) s";
        for (double g : {0.0, 0.5, 1.0, 2.0}) figure_detail::add_plate_split(r, g);
    } else if (id == "fig4") {
        r.description = "strongly anisotropic electric particle and conducting plate, TE and TM channels";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_plate;
        r.normalization = "S = (3 alpha_z / 2 Z^3) s";
        for (double g : {1.0, 10.0}) figure_detail::add_plate_split(r, g);
    } else if (id == "figiv") {
        r.description = "two electric particles, product anisotropy gamma = gamma_1 gamma_2";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_pair;
        r.normalization = "S = (23 alpha_z^1 alpha_z^2 / Z^6) s_EE";
        for (double g : {0.0, 1.0, 2.0}) r.curves.push_back({"s_EE[gamma=" + num(g) + "]", EeCurve{g}});
    } else if (id == "fig5") {
        r.description = "identical isotropic particles, r = beta / alpha";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_pair;
        r.normalization = pair_norm;
        for (double ratio : {1.0, 0.0, -0.125, -0.5, -2.0}) {
            const Particle p{1.0, 1.0, ratio, 1.0};
            r.curves.push_back({"s[r=" + num(ratio) + "]", PairCurve{p, p, PairChannel::total}});
        }
    } else if (id == "fig6") {
        r.description = product_anisotropy
                            ? "identical particles, beta = alpha, labels read as product anisotropy gamma_1 gamma_2"
                            : "identical particles, beta = alpha, equal anisotropies gamma_alpha = gamma_beta per particle";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_pair;
        r.normalization = pair_norm;
        for (double g : {0.0, 1.0, 2.0, 4.0}) {
            const double per = product_anisotropy ? std::sqrt(g) : g;
            const Particle p{1.0, per, 1.0, per};
            r.curves.push_back({"s[gamma=" + num(g) + "]", PairCurve{p, p, PairChannel::total}});
        }
    } else if (id == "fig7") {
        r.description = "identical conducting particles, alpha_z = -2 beta_z, electrically isotropic";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_pair;
        r.normalization = pair_norm;
        for (double g : {0.0, 1.0, 2.0}) {
            const Particle p{1.0, 1.0, -0.5, g};
            r.curves.push_back({"s[gamma_beta=" + num(g) + "]", PairCurve{p, p, PairChannel::total}});
        }
    } else if (id == "fig8") {
        r.description = "identical conducting particles, beta_z = -alpha_z / 2, magnetically isotropic";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_pair;
        r.normalization = pair_norm;
        for (double g : {0.6, 0.743, 0.8, 1.0}) {
            const Particle p{1.0, g, -0.5, 1.0};
            r.curves.push_back({"s[gamma_alpha=" + num(g) + "]", PairCurve{p, p, PairChannel::total}});
        }
    } else if (id == "fig9") {
        r.description = "conducting particle (beta_1 = -alpha_1 / 2) and Drude particle (alpha_2 = alpha_1, beta_2 = 0)";
        r.abscissa = "y";
        r.abscissa_meaning = y_meaning;
        r.sweep = y_pair;
        r.normalization = pair_norm;
        for (double g : {0.5, 0.66, 0.8, 1.0, 1.1}) {
            const Particle pc{1.0, 1.0, -0.5, g};
            const Particle drude{1.0, 1.0, 0.0, 1.0};
            r.curves.push_back({"s[gamma_beta1=" + num(g) + "]", PairCurve{pc, drude, PairChannel::total}});
        }
    } else if (id == "fig10") {
        r.description = "delta-function plate self-entropy, plasma dispersion";
        r.abscissa = "x";
        r.abscissa_meaning = "x = lambda0 / (4 pi T)";
        r.sweep = {0.05, 20.0, 200, true};
        r.normalization = "S/A = (lambda0^2 / 16 pi) s";
        r.curves.push_back({"s_TE", SelfPlateCurve{PlateChannel::te}});
        r.curves.push_back({"s_TM", SelfPlateCurve{PlateChannel::tm}});
        r.curves.push_back({"s_total", SelfPlateCurve{PlateChannel::total}});
        r.curves.push_back({"asym_low_TE", PlateAsymptoteCurve{PlateChannel::te, AsymptoticRegime::low_temperature}});
        r.curves.push_back({"asym_low_TM", PlateAsymptoteCurve{PlateChannel::tm, AsymptoticRegime::low_temperature}});
        r.curves.push_back({"asym_high_TE", PlateAsymptoteCurve{PlateChannel::te, AsymptoticRegime::high_temperature}});
        r.curves.push_back({"asym_high_TM", PlateAsymptoteCurve{PlateChannel::tm, AsymptoticRegime::high_temperature}});
    } else {
        throw DomainError("figure: unknown figure id '" + std::string(id) + "'");
    }
    return r;
}

}  // namespace casent
