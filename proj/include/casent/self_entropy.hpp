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

// Self-entropies of a plasma-dispersive delta-function plate and of a
// polarizable nanoparticle.
//
// Plate. With a = lambda0/2, w = zeta_m / a = m / x and x = lambda0 / (4 pi T),
// the per-mode kappa integrals have the finite parts (cutoff-divergent
// polynomials removed; even powers of w dropped because their mode sums vanish)
//
//   R_TE(w) = -1/2 [(w^2 - 1) ln(1 + w) + w - w^2 ln w]
//   R_TM(w) = -1/2 (w^2 - w^4) ln(w (1 + w)) - w^3 / 2
//
// and F/A = (lambda0^3 / 32 pi^2 x) sum'_m R(m/x). The reduced entropy
// s = (16 pi / lambda0^2) S/A is
//
//   s(x) = -2 sum_{m>=1} h(m/x) + 2 r_1 x,    h(w) = d/dw [w R(w)],
//
// where the divergent sum is assigned its zeta value and r_1 is the 1/w
// coefficient of R at large w. That last term is the ln T left behind by the
// harmonic pole of the 1/w tail.
//
// Numerically: the large-w expansion h_as (powers w^4 ... w^0 with logs) is
// subtracted from every mode and added back as zeta constants; modes with
// w <= 4 are summed directly, the remainder through its 1/w series and
// Hurwitz zeta values.

#pragma once

#include "casent/atom_plate.hpp"
#include "casent/errors.hpp"
#include "casent/matsubara_kernels.hpp"
#include "casent/particle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ratio>
#include <string>
#include <string_view>
#include <vector>

namespace casent {

enum class PlateChannel
{
    te,
    tm,
    total,
};

inline PlateChannel plate_channel_from_string(std::string_view name)
{
    if (name == "te" || name == "TE") return PlateChannel::te;
    if (name == "tm" || name == "TM") return PlateChannel::tm;
    if (name == "total") return PlateChannel::total;
    throw DomainError("self-plate: unknown channel '" + std::string(name) + "'");
}

enum class AsymptoticRegime
{
    low_temperature,   // x >> 1
    high_temperature,  // x << 1
};

/// Plasma coupling lambda0 and temperature T.
struct PlasmaPlate
{
    double lambda0 = 1.0;
    double T = 1.0;

    [[nodiscard]] double x() const { return lambda0 / (4.0 * std::numbers::pi * T); }

    void validate() const
    {
        detail::require(std::isfinite(lambda0) && lambda0 > 0.0, "self-plate: lambda0 must be positive");
        detail::require(std::isfinite(T) && T > 0.0, "self-plate: temperature must be positive");
    }
};

inline constexpr double plate_x_min = 0.02;
inline constexpr double plate_x_max = 50.0;

/// Closed low- and high-temperature expansions of the reduced plate entropy.
inline double plate_self_entropy_asymptotic(double x, PlateChannel channel, AsymptoticRegime regime)
{
    detail::require(std::isfinite(x) && x > 0.0, "self-plate: x must be positive");
    using std::numbers::pi;
    const double z3 = std::riemann_zeta(3.0);
    const double z5 = std::riemann_zeta(5.0);
    const double pi2 = pi * pi;
    const double pi4 = pi2 * pi2;
    const double x2 = x * x;
    auto te = [&] {
        if (regime == AsymptoticRegime::low_temperature) return -3.0 * z3 / (4.0 * pi2 * x2);
        return -1.0 / (3.0 * x) + 0.75 - 0.5 * std::log(2.0 * pi * x);
    };
    auto tm = [&] {
        if (regime == AsymptoticRegime::low_temperature)
            return 3.0 * z3 / (4.0 * pi2 * x2) + 1.0 / (15.0 * x2 * x) + 15.0 * z5 / (4.0 * pi4 * x2 * x2);
        return 15.0 * z5 / (2.0 * pi4 * x2 * x2) + 3.0 * z3 / (2.0 * pi2 * x2);
    };
    switch (channel) {
    case PlateChannel::te: return te();
    case PlateChannel::tm: return tm();
    case PlateChannel::total: return te() + tm();
    }
    throw DomainError("self-plate: unknown channel");
}

/// Bookkeeping of one plate evaluation.
struct RegulatorState
{
    int direct_modes = 0;   // modes summed exactly, w = m/x <= split
    int tail_orders = 0;    // 1/w orders used for the remaining modes
    double split = 0.0;
    std::vector<ZetaTag> add_backs;  // zeta values applied to the subtracted expansion
};

struct PlateSelfEntropy
{
    double value = 0.0;
    double error_estimate = 0.0;
    RegulatorState regulator;
};

namespace self_detail {

using real = long double;

inline constexpr real w_split = 4.0L;
inline constexpr int tail_orders = 64;

inline real log_plus(real w) { return std::log1p(w); }

inline real r_te(real w)
{
    if (w == 0.0L) return 0.0L;
    return -0.5L * ((w * w - 1.0L) * log_plus(w) + w - w * w * std::log(w));
}

inline real h_te(real w)
{
    if (w == 0.0L) return 0.0L;
    return r_te(w) - w * w * log_plus(1.0L / w);
}

inline real r_tm(real w)
{
    if (w == 0.0L) return 0.0L;
    const real l = std::log(w) + log_plus(w);
    return -0.5L * (w * w - w * w * w * w) * l - 0.5L * w * w * w;
}

inline real h_tm(real w)
{
    if (w == 0.0L) return 0.0L;
    const real l = std::log(w) + log_plus(w);
    const real dr = -(w - 2.0L * w * w * w) * l - 0.5L * w - 2.0L * w * w + w * w * w;
    return r_tm(w) + w * dr;
}

// Large-w subtraction h_as; each term c w^p (ln w)^l.
struct AsymptoticTerm
{
    real coefficient;
    int power;
    bool log;
};

inline const std::vector<AsymptoticTerm>& asymptotic_terms(PlateChannel channel)
{
    static const std::vector<AsymptoticTerm> te{
        {-2.0L, 1, false}, {0.5L, 0, true}, {0.75L, 0, false}};
    static const std::vector<AsymptoticTerm> tm{
        {5.0L, 4, true}, {-3.0L, 2, true}, {1.0L, 4, false}, {-1.75L, 2, false},
        {-2.0L / 3.0L, 1, false}, {0.125L, 0, false}};
    return channel == PlateChannel::te ? te : tm;
}

inline real h_asymptotic(PlateChannel channel, real w)
{
    real v = 0.0L;
    const real lw = std::log(w);
    for (const auto& t : asymptotic_terms(channel))
        v += t.coefficient * std::pow(w, t.power) * (t.log ? lw : 1.0L);
    return v;
}

// Coefficient of w^j (j <= 1, non-log part) in R at large w.
inline real log_series(int n)
{
    if (n < 1) return 0.0L;
    return ((n % 2 == 1) ? 1.0L : -1.0L) / static_cast<real>(n);
}

inline real r_coefficient(PlateChannel channel, int j)
{
    if (channel == PlateChannel::te)
        return -0.5L * ((j == 1 ? 1.0L : 0.0L) + log_series(2 - j) - log_series(-j));
    return 0.5L * (log_series(4 - j) - log_series(2 - j)) - (j == 3 ? 0.5L : 0.0L);
}

// 1/w coefficient of R; its harmonic tail supplies 2 r_1 x.
inline real pole_coefficient(PlateChannel channel) { return r_coefficient(channel, -1); }

// Coefficient of w^{-k} (k >= 2) in h - h_as.
inline real h_tail_coefficient(PlateChannel channel, int k)
{
    return static_cast<real>(1 - k) * r_coefficient(channel, -k);
}

/// Hurwitz zeta sum_{n>=q} n^{-s}, integer s >= 2, q >= 1.
inline real hurwitz_zeta(int s, long q)
{
    static constexpr real bernoulli[] = {1.0L / 6.0L,   -1.0L / 30.0L,      1.0L / 42.0L, -1.0L / 30.0L,
                                         5.0L / 66.0L, -691.0L / 2730.0L, 7.0L / 6.0L,  -3617.0L / 510.0L};
    constexpr int direct = 16;
    real sum = 0.0L;
    for (long n = q; n < q + direct; ++n) sum += std::pow(static_cast<real>(n), -s);
    const real N = static_cast<real>(q + direct);
    sum += std::pow(N, 1 - s) / static_cast<real>(s - 1) + 0.5L * std::pow(N, -s);
    real rising = static_cast<real>(s);  // s (s+1) ... (s+2j-2)
    real factorial = 2.0L;                // (2j)!
    for (int j = 1; j <= 8; ++j) {
        sum += bernoulli[j - 1] / factorial * rising * std::pow(N, static_cast<real>(-s - 2 * j + 1));
        rising *= static_cast<real>(s + 2 * j - 1) * static_cast<real>(s + 2 * j);
        factorial *= static_cast<real>(2 * j + 1) * static_cast<real>(2 * j + 2);
    }
    return sum;
}

inline ZetaTag power_tag(int p)
{
    switch (p) {
    case 0: return ZetaTag::count;
    case 1: return ZetaTag::linear;
    case 2: return ZetaTag::square;
    case 4: return ZetaTag::quartic;
    default: throw DomainError("self-plate: no zeta value for this power");
    }
}

inline ZetaTag log_tag(int p)
{
    switch (p) {
    case 0: return ZetaTag::log;
    case 2: return ZetaTag::square_log;
    case 4: return ZetaTag::quartic_log;
    default: throw DomainError("self-plate: no zeta value for this power");
    }
}

// sum_{m>=1} h_as(m/x), zeta-regularized.
inline real asymptotic_add_back(PlateChannel channel, real x, std::vector<ZetaTag>& ledger)
{
    real v = 0.0L;
    const real lx = std::log(x);
    for (const auto& t : asymptotic_terms(channel)) {
        const real scale = std::pow(x, -t.power);
        const real plain = zeta_reg_constant(power_tag(t.power));
        ledger.push_back(power_tag(t.power));
        if (t.log) {
            ledger.push_back(log_tag(t.power));
            v += t.coefficient * scale * (static_cast<real>(zeta_reg_constant(log_tag(t.power))) - lx * plain);
        } else {
            v += t.coefficient * scale * plain;
        }
    }
    std::sort(ledger.begin(), ledger.end());
    ledger.erase(std::unique(ledger.begin(), ledger.end()), ledger.end());
    return v;
}

inline PlateSelfEntropy channel_entropy(PlateChannel channel, real x)
{
    PlateSelfEntropy out;
    auto& reg = out.regulator;
    reg.split = static_cast<double>(w_split);
    reg.tail_orders = tail_orders;

    const long modes = static_cast<long>(std::floor(w_split * x));
    reg.direct_modes = static_cast<int>(modes);
    real direct = 0.0L;
    real largest = 0.0L;
    for (long m = 1; m <= modes; ++m) {
        const real w = static_cast<real>(m) / x;
        const real h = channel == PlateChannel::te ? h_te(w) : h_tm(w);
        const real has = h_asymptotic(channel, w);
        largest = std::max({largest, std::abs(h), std::abs(has)});
        direct += h - has;
    }

    real tail = 0.0L;
    real last = 0.0L;
    for (int k = 2; k <= tail_orders; ++k) {
        const real c = h_tail_coefficient(channel, k);
        if (c == 0.0L) continue;
        last = c * std::pow(x, k) * hurwitz_zeta(k, modes + 1);
        tail += last;
    }

    const real add_back = asymptotic_add_back(channel, x, reg.add_backs);
    const real pole = 2.0L * pole_coefficient(channel) * x;
    const real s = -2.0L * (direct + tail + add_back) + pole;

    const real eps = std::numeric_limits<real>::epsilon();
    const real rounding = 2.0L * eps * (static_cast<real>(modes + 1) * largest + std::abs(add_back) + std::abs(pole));
    out.value = static_cast<double>(s);
    out.error_estimate = static_cast<double>(2.0L * std::abs(last) + rounding);
    return out;
}

}  // namespace self_detail

/// Reduced self-entropy s(x) of the plate; S/A = (lambda0^2 / 16 pi) s(x).
inline PlateSelfEntropy plate_self_entropy(double x, PlateChannel channel)
{
    if (!std::isfinite(x) || x < plate_x_min || x > plate_x_max)
        throw UnsupportedRange("self-plate: x outside the supported window [0.02, 50]");
    if (channel != PlateChannel::total) return self_detail::channel_entropy(channel, x);
    auto te = self_detail::channel_entropy(PlateChannel::te, x);
    const auto tm = self_detail::channel_entropy(PlateChannel::tm, x);
    te.value += tm.value;
    te.error_estimate += tm.error_estimate;
    te.regulator.direct_modes = std::max(te.regulator.direct_modes, tm.regulator.direct_modes);
    for (auto tag : tm.regulator.add_backs) te.regulator.add_backs.push_back(tag);
    std::sort(te.regulator.add_backs.begin(), te.regulator.add_backs.end());
    te.regulator.add_backs.erase(std::unique(te.regulator.add_backs.begin(), te.regulator.add_backs.end()),
                                 te.regulator.add_backs.end());
    return te;
}

/// Dimensional plate self-entropy per unit area.
inline double plate_entropy_per_area(const PlasmaPlate& plate, PlateChannel channel)
{
    plate.validate();
    const double s = plate_self_entropy(plate.x(), channel).value;
    return plate.lambda0 * plate.lambda0 / (16.0 * std::numbers::pi) * s;
}

/// Self-entropy of a particle with static polarizabilities alpha and beta.
/// The free energy is 2 alpha / (pi delta^4) - (2 alpha / 15) pi^3 T^4 plus
/// the same with beta; the cutoff term is T-independent and never enters.
inline double nanoparticle_self_entropy(double alpha, double beta, double T)
{
    detail::require(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(T),
                    "self-particle: non-finite input");
    detail::require(T >= 0.0, "self-particle: temperature must be nonnegative");
    using std::numbers::pi;
    return 8.0 * pi * pi * pi / 15.0 * (alpha + beta) * T * T * T;
}

/// Leading small-y coefficients of S / (pi a T)^3 for a conducting sphere.
namespace balance_coefficients {

// (8/15)(alpha + beta)/a^3 with beta = -alpha/2
using self = std::ratio_multiply<std::ratio<8, 15>, std::ratio_add<std::ratio<1>, std::ratio<-1, 2>>>;

// (3/2)[alpha (1 - 2 g_a) - beta (1 - 2 g_b)]/a^3 * (4^3 / 540), g_a = g_b = 1
using interaction = std::ratio_multiply<
    std::ratio_multiply<std::ratio<3, 2>, std::ratio_subtract<std::ratio<-1>, std::ratio<1, 2>>>,
    std::ratio<64, 540>>;

using sum = std::ratio_add<self, interaction>;

static_assert(std::ratio_equal_v<self, std::ratio<4, 15>>);
static_assert(std::ratio_equal_v<interaction, std::ratio<-4, 15>>);
static_assert(sum::num == 0);

}  // namespace balance_coefficients

struct EntropyBalance
{
    double S_self = 0.0;
    double S_interaction = 0.0;
    double S_total = 0.0;
    bool sphere_size_warning = false;  // a/Z > 0.1
};

inline constexpr double balance_warn_ratio = 0.1;
inline constexpr double balance_max_ratio = 0.2;

/// Self-entropy of a conducting sphere of radius a plus its interaction
/// entropy with a conducting plate at distance Z.
inline EntropyBalance total_entropy_balance(double a, double Z, double T)
{
    detail::require(std::isfinite(a) && a > 0.0, "balance: sphere radius must be positive");
    const ThermalGeometry geom{Z, T};
    geom.validate();
    detail::require(a < Z, "balance: sphere radius must be smaller than the separation");
    detail::require(a / Z <= balance_max_ratio, "balance: a/Z exceeds 0.2, dipole approximation not valid");
    const auto sphere = Particle::pc_sphere(a);
    EntropyBalance b;
    b.S_self = nanoparticle_self_entropy(sphere.alpha_z, sphere.beta_z, T);
    b.S_interaction = entropy_atom_plate(sphere, geom, AtomPlateChannel::total);
    b.S_total = b.S_self + b.S_interaction;
    b.sphere_size_warning = a / Z > balance_warn_ratio;
    return b;
}

}  // namespace casent
