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

// Root finding, minimization, anisotropy thresholds, specific heat and
// asymptote fits over reduced entropy curves.

#pragma once

#include "casent/atom_plate.hpp"
#include "casent/errors.hpp"
#include "casent/particle.hpp"
#include "casent/self_entropy.hpp"
#include "casent/two_body.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace casent {

// ---------------------------------------------------------------------------
// Curves

enum class PlateSplitChannel
{
    total,
    te,
    tm,
    s_tilde,
};

/// Reduced atom-plate entropy s(gamma, y) or one of its plate channels.
struct AtomPlateCurve
{
    double gamma = 1.0;
    PlateSplitChannel channel = PlateSplitChannel::total;
};

/// s_EE(gamma, y) for the product anisotropy gamma.
struct EeCurve
{
    double gamma = 1.0;
};

/// s_EM(y).
struct EmCurve
{
};

enum class PairChannel
{
    total,
    ee,
    mm,
    em,
};

/// Reduced pair entropy S Z^6 / (alpha_z^1)^2.
struct PairCurve
{
    Particle p1;
    Particle p2;
    PairChannel channel = PairChannel::total;
};

/// Reduced plate self-entropy s(x).
struct SelfPlateCurve
{
    PlateChannel channel = PlateChannel::total;
};

/// Closed plate expansion, for comparison columns.
struct PlateAsymptoteCurve
{
    PlateChannel channel = PlateChannel::total;
    AsymptoticRegime regime = AsymptoticRegime::low_temperature;
};

using CurveSpec = std::variant<AtomPlateCurve, EeCurve, EmCurve, PairCurve, SelfPlateCurve, PlateAsymptoteCurve>;

inline double evaluate(const CurveSpec& curve, double v)
{
    struct Visitor
    {
        double v;
        double operator()(const AtomPlateCurve& c) const
        {
            switch (c.channel) {
            case PlateSplitChannel::total: return reduced_s(c.gamma, v);
            case PlateSplitChannel::te: return te_tm_split(c.gamma, v).te;
            case PlateSplitChannel::tm: return te_tm_split(c.gamma, v).tm;
            case PlateSplitChannel::s_tilde: return reduced_s_tilde(c.gamma, v);
            }
            throw DomainError("curve: unknown atom-plate channel");
        }
        double operator()(const EeCurve& c) const { return reduced_ee(c.gamma, v).s; }
        double operator()(const EmCurve&) const { return reduced_em(v); }
        double operator()(const PairCurve& c) const
        {
            const auto r = reduced_pair_entropy(c.p1, c.p2, v);
            switch (c.channel) {
            case PairChannel::total: return r.total;
            case PairChannel::ee: return r.ee;
            case PairChannel::mm: return r.mm;
            case PairChannel::em: return r.em;
            }
            throw DomainError("curve: unknown pair channel");
        }
        double operator()(const SelfPlateCurve& c) const { return plate_self_entropy(v, c.channel).value; }
        double operator()(const PlateAsymptoteCurve& c) const
        {
            return plate_self_entropy_asymptotic(v, c.channel, c.regime);
        }
    };
    return std::visit(Visitor{v}, curve);
}

/// Makes any curve usable where a callable is expected.
struct CurveFunction
{
    CurveSpec curve;
    double operator()(double v) const { return evaluate(curve, v); }
};

template <class F>
concept RealFunction = std::regular_invocable<const F&, double> &&
                       std::convertible_to<std::invoke_result_t<const F&, double>, double>;

struct Interval
{
    double lo = 0.0;
    double hi = 0.0;

    void validate() const
    {
        if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
            throw DomainError("interval: empty or non-finite interval");
        if (lo < 0.0) throw DomainError("interval: lower end must be nonnegative");
    }
};

struct ScanOptions
{
    int points_per_decade = 400;
    int min_points = 400;
    double log_floor = 1e-6;  // used as the first log point when the interval starts at 0
};

/// Sample abscissae: log-spaced, with y = 0 prepended if the interval starts there.
inline std::vector<double> scan_grid(const Interval& iv, const ScanOptions& opt = {})
{
    iv.validate();
    std::vector<double> grid;
    double start = iv.lo;
    if (iv.lo == 0.0) {
        grid.push_back(0.0);
        start = std::min(opt.log_floor, iv.hi * 1e-3);
    }
    const double decades = std::log10(iv.hi / start);
    const int n = std::max(opt.min_points, static_cast<int>(std::ceil(decades * opt.points_per_decade)) + 1);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        grid.push_back(start * std::pow(iv.hi / start, t));
    }
    grid.back() = iv.hi;
    return grid;
}

// ---------------------------------------------------------------------------
// Roots

namespace analysis_detail {

inline int sign(double v) { return (v > 0.0) - (v < 0.0); }

/// Bracketed root by secant steps safeguarded with bisection; returns the
/// final bracket midpoint once the bracket is narrower than tol.
template <RealFunction F>
double refine_root(const F& f, double a, double fa, double b, double fb, double tol)
{
    for (int it = 0; it < 400 && (b - a) > tol; ++it) {
        double c = b - fb * (b - a) / (fb - fa);
        const double width = b - a;
        // fall back to bisection when the secant point hugs an end
        if (!(c > a + 0.05 * width && c < b - 0.05 * width) || it % 3 == 2) c = 0.5 * (a + b);
        const double fc = f(c);
        if (fc == 0.0) return c;
        if (sign(fc) == sign(fa)) {
            a = c;
            fa = fc;
        } else {
            b = c;
            fb = fc;
        }
    }
    if ((b - a) > tol) throw ConvergenceError("zero: root refinement did not converge");
    return 0.5 * (a + b);
}

}  // namespace analysis_detail

/// All sign changes of f on the interval, refined to |dy| < tol, sorted.
template <RealFunction F>
std::vector<double> find_zero_crossings(const F& f, const Interval& iv, double tol = 1e-6,
                                        const ScanOptions& opt = {})
{
    if (!(tol > 0.0)) throw DomainError("zero: tolerance must be positive");
    const auto grid = scan_grid(iv, opt);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);

    std::vector<double> roots;
    // y = 0 limits are exact zeros for entropy curves and do not count as crossings
    std::size_t i0 = (grid.front() == 0.0) ? 1 : 0;
    for (std::size_t i = i0; i + 1 < grid.size(); ++i) {
        const int s0 = analysis_detail::sign(values[i]);
        const int s1 = analysis_detail::sign(values[i + 1]);
        if (s0 == 0 && i > i0) continue;  // counted on the previous interval
        if (s0 != 0 && s1 != 0 && s0 != s1) {
            roots.push_back(analysis_detail::refine_root(f, grid[i], values[i], grid[i + 1], values[i + 1], tol));
        } else if (s1 == 0 && s0 != 0 && i + 2 < grid.size()) {
            const int s2 = analysis_detail::sign(values[i + 2]);
            if (s2 != 0 && s2 != s0) roots.push_back(grid[i + 1]);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline std::vector<double> find_zero_crossings(const CurveSpec& curve, const Interval& iv, double tol = 1e-6,
                                               const ScanOptions& opt = {})
{
    return find_zero_crossings(CurveFunction{curve}, iv, tol, opt);
}

// ---------------------------------------------------------------------------
// Minimum

struct Minimum
{
    double y = 0.0;
    double value = 0.0;
};

/// Global minimum: best scan point, then golden-section refinement to |dy| < tol.
template <RealFunction F>
Minimum min_entropy(const F& f, const Interval& iv, double tol = 1e-8, const ScanOptions& opt = {})
{
    const auto grid = scan_grid(iv, opt);
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = f(grid[i]);
        if (!std::isfinite(v)) throw ConvergenceError("min: non-finite curve value");
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    double a = grid[best == 0 ? 0 : best - 1];
    double b = grid[std::min(best + 1, grid.size() - 1)];
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    Minimum m{grid[best], best_value};
    for (double y : {a, b, 0.5 * (a + b)}) {
        const double v = f(y);
        if (v < m.value) m = {y, v};
    }
    return m;
}

inline Minimum min_entropy(const CurveSpec& curve, const Interval& iv, double tol = 1e-8,
                           const ScanOptions& opt = {})
{
    return min_entropy(CurveFunction{curve}, iv, tol, opt);
}

// ---------------------------------------------------------------------------
// Anisotropy thresholds

enum class ThresholdConfig
{
    ee,        // two electric particles, vary the product anisotropy
    plate,     // electric particle facing the plate
    tm_plate,  // TM channel of the same
    pc_pc,     // two identical conducting particles, beta_z = -alpha_z / 2
    pc_d,      // conducting particle with a Drude particle of equal alpha
};

enum class VaryParameter
{
    gamma_alpha,
    gamma_beta,
};

struct ThresholdProblem
{
    std::function<CurveSpec(double)> family;
    Interval gamma_range;
    Interval y_range{1e-3, 50.0};
    std::string description;
};

inline ThresholdConfig threshold_config_from_string(std::string_view name)
{
    if (name == "ee" || name == "e-e") return ThresholdConfig::ee;
    if (name == "plate" || name == "e-plate") return ThresholdConfig::plate;
    if (name == "tm-plate" || name == "e-tm-plate") return ThresholdConfig::tm_plate;
    if (name == "pc-pc") return ThresholdConfig::pc_pc;
    if (name == "pc-d") return ThresholdConfig::pc_d;
    throw DomainError("threshold: unknown configuration '" + std::string(name) + "'");
}

inline VaryParameter vary_parameter_from_string(std::string_view name)
{
    if (name == "gamma-alpha" || name == "gamma_alpha") return VaryParameter::gamma_alpha;
    if (name == "gamma-beta" || name == "gamma_beta") return VaryParameter::gamma_beta;
    throw DomainError("threshold: unknown anisotropy '" + std::string(name) + "'");
}

/// Families with every anisotropy other than the varied one held at 1.
inline ThresholdProblem make_threshold_problem(ThresholdConfig config, VaryParameter vary)
{
    const bool alpha = vary == VaryParameter::gamma_alpha;
    switch (config) {
    case ThresholdConfig::ee:
        if (!alpha) throw DomainError("threshold: the ee configuration has no magnetic anisotropy");
        return {[](double g) -> CurveSpec { return EeCurve{g}; }, {0.5, 1.5}, {1e-3, 50.0},
                "E/E pair, product anisotropy"};
    case ThresholdConfig::plate:
        if (!alpha) throw DomainError("threshold: the plate configuration has no magnetic anisotropy");
        return {[](double g) -> CurveSpec { return AtomPlateCurve{g, PlateSplitChannel::total}; },
                {0.2, 0.8}, {1e-3, 50.0}, "E particle / conducting plate"};
    case ThresholdConfig::tm_plate:
        if (!alpha) throw DomainError("threshold: the tm-plate configuration has no magnetic anisotropy");
        return {[](double g) -> CurveSpec { return AtomPlateCurve{g, PlateSplitChannel::tm}; },
                {1.5, 2.5}, {1e-3, 50.0}, "E particle / TM plate channel"};
    case ThresholdConfig::pc_pc:
        if (alpha)
            return {[](double g) -> CurveSpec {
                        const Particle p{1.0, g, -0.5, 1.0};
                        return PairCurve{p, p, PairChannel::total};
                    },
                    {0.6, 0.9}, {1e-3, 50.0}, "PC/PC pair, common gamma_alpha"};
        return {[](double g) -> CurveSpec {
                    const Particle p{1.0, 1.0, -0.5, g};
                    return PairCurve{p, p, PairChannel::total};
                },
                {0.4, 0.7}, {1e-3, 50.0}, "PC/PC pair, common gamma_beta"};
    case ThresholdConfig::pc_d:
        if (alpha)
            return {[](double g) -> CurveSpec {
                        return PairCurve{Particle{1.0, g, -0.5, 1.0}, Particle{1.0, g, 0.0, 1.0}, PairChannel::total};
                    },
                    {0.8, 1.0}, {1e-3, 50.0}, "PC/D pair, common gamma_alpha"};
        return {[](double g) -> CurveSpec {
                    return PairCurve{Particle{1.0, 1.0, -0.5, g}, Particle{1.0, 1.0, 0.0, 1.0}, PairChannel::total};
                },
                {0.5, 0.8}, {1e-3, 50.0}, "PC/D pair, gamma_beta of the conducting particle"};
    }
    throw DomainError("threshold: unknown configuration");
}

struct ThresholdResult
{
    double gamma_star = 0.0;
    double min_below = 0.0;  // min_y S just below gamma_star
    double min_above = 0.0;
    std::vector<double> monotonicity_grid;
    std::vector<double> monotonicity_minima;
};

/// Anisotropy at which min_y S changes sign, by bisection to |dgamma| < tol.
inline ThresholdResult anisotropy_threshold(const ThresholdProblem& problem, double tol = 1e-3,
                                            const ScanOptions& opt = {})
{
    if (!(tol > 0.0)) throw DomainError("threshold: tolerance must be positive");
    problem.gamma_range.validate();
    auto min_at = [&](double g) { return min_entropy(problem.family(g), problem.y_range, 1e-8, opt).value; };

    ThresholdResult r;
    constexpr int grid_points = 20;
    for (int i = 0; i < grid_points; ++i) {
        const double g = problem.gamma_range.lo +
                         (problem.gamma_range.hi - problem.gamma_range.lo) * i / (grid_points - 1);
        r.monotonicity_grid.push_back(g);
        r.monotonicity_minima.push_back(min_at(g));
    }
    const auto& mins = r.monotonicity_minima;
    const double scale = std::max(std::abs(mins.front()), std::abs(mins.back()));
    const double slack = 1e-12 * scale;
    const bool decreasing = mins.back() < mins.front();
    for (int i = 0; i + 1 < grid_points; ++i) {
        const double step = mins[i + 1] - mins[i];
        if ((decreasing && step > slack) || (!decreasing && step < -slack)) {
            std::ostringstream os;
            os << "threshold: min entropy not monotone in the varied anisotropy near gamma = "
               << r.monotonicity_grid[i] << " (" << problem.description << ")";
            throw ConvergenceError(os.str());
        }
    }

    double a = problem.gamma_range.lo;
    double b = problem.gamma_range.hi;
    double fa = mins.front();
    double fb = mins.back();
    if ((fa < 0.0) == (fb < 0.0))
        throw ConvergenceError("threshold: min entropy has the same sign at both ends (" + problem.description + ")");
    while (b - a > tol) {
        const double c = 0.5 * (a + b);
        const double fc = min_at(c);
        if ((fc < 0.0) == (fa < 0.0)) {
            a = c;
            fa = fc;
        } else {
            b = c;
            fb = fc;
        }
    }
    r.gamma_star = 0.5 * (a + b);
    r.min_below = decreasing ? fa : fb;
    r.min_above = decreasing ? fb : fa;
    return r;
}

// ---------------------------------------------------------------------------
// Specific heat

struct SpecificHeat
{
    double value = 0.0;
    double error_estimate = 0.0;
};

/// C_v = T dS/dT by Richardson-improved central differences.
template <RealFunction F>
SpecificHeat specific_heat(const F& entropy_of_T, double T)
{
    detail::require(std::isfinite(T) && T > 0.0, "cv: temperature must be positive");
    const double h = std::max(1e-6 * T, 1e-9);
    if (T - h <= 0.0) throw DomainError("cv: temperature too close to the domain boundary");
    auto central = [&](double step) { return (entropy_of_T(T + step) - entropy_of_T(T - step)) / (2.0 * step); };
    const double coarse = central(h);
    const double fine = central(0.5 * h);
    const double improved = (4.0 * fine - coarse) / 3.0;
    return {T * improved, T * std::abs(improved - fine)};
}

/// Reduced specific heat: y ds/dy for interaction curves (T dS/dT at fixed
/// separation), -x ds/dx for plate curves, whose abscissa scales as 1/T.
inline SpecificHeat specific_heat(const CurveSpec& curve, double v)
{
    const bool inverse_temperature =
        std::holds_alternative<SelfPlateCurve>(curve) || std::holds_alternative<PlateAsymptoteCurve>(curve);
    auto c = specific_heat(CurveFunction{curve}, v);
    if (inverse_temperature) c.value = -c.value;
    return c;
}

// ---------------------------------------------------------------------------
// Asymptote validation

enum class AsymptoteTag
{
    atom_plate_cubic,  // (1 - 2 gamma) / 540
    tm_cubic,          // (1 - gamma/2) / 540
    te_cubic,          // -gamma / 360
    ee_cubic,          // (1 - gamma) / 2070
    em_quintic,        // -1 / 7056
};

inline AsymptoteTag asymptote_tag_from_string(std::string_view name)
{
    if (name == "atom-plate-cubic") return AsymptoteTag::atom_plate_cubic;
    if (name == "tm-cubic") return AsymptoteTag::tm_cubic;
    if (name == "te-cubic") return AsymptoteTag::te_cubic;
    if (name == "ee-cubic") return AsymptoteTag::ee_cubic;
    if (name == "em-quintic") return AsymptoteTag::em_quintic;
    throw DomainError("validate: unknown asymptote '" + std::string(name) + "'");
}

struct AsymptoteSpec
{
    CurveSpec curve;
    int power = 3;
    double reference = 0.0;
    Interval default_window;
};

inline AsymptoteSpec asymptote_spec(AsymptoteTag tag, double gamma)
{
    switch (tag) {
    case AsymptoteTag::atom_plate_cubic:
        return {AtomPlateCurve{gamma, PlateSplitChannel::total}, 3, (1.0 - 2.0 * gamma) / 540.0, {1e-3, 1e-2}};
    case AsymptoteTag::tm_cubic:
        return {AtomPlateCurve{gamma, PlateSplitChannel::tm}, 3, (1.0 - 0.5 * gamma) / 540.0, {1e-3, 1e-2}};
    case AsymptoteTag::te_cubic:
        return {AtomPlateCurve{gamma, PlateSplitChannel::te}, 3, -gamma / 360.0, {1e-3, 1e-2}};
    case AsymptoteTag::ee_cubic: return {EeCurve{gamma}, 3, (1.0 - gamma) / 2070.0, {1e-3, 1e-2}};
    case AsymptoteTag::em_quintic: return {EmCurve{}, 5, -1.0 / 7056.0, {1e-2, 1e-1}};
    }
    throw DomainError("validate: unknown asymptote");
}

struct AsymptoteFit
{
    double fitted = 0.0;
    double reference = 0.0;
    double relative_deviation = 0.0;
};

/// Least-squares fit of curve(y) / y^power = c + d y^2 over the window;
/// compares c with the reference coefficient.
inline AsymptoteFit validate_asymptote(const AsymptoteSpec& spec, const Interval& window, int samples = 64)
{
    window.validate();
    if (window.lo <= 0.0) throw DomainError("validate: fit window must exclude y = 0");
    if (spec.reference == 0.0)
        throw DomainError("validate: reference coefficient vanishes, relative deviation undefined");
    double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
    for (int i = 0; i < samples; ++i) {
        const double y = window.lo * std::pow(window.hi / window.lo, static_cast<double>(i) / (samples - 1));
        const double u = y * y;
        const double v = evaluate(spec.curve, y) / std::pow(y, spec.power);
        s0 += 1;
        s1 += u;
        s2 += u * u;
        t0 += v;
        t1 += u * v;
    }
    const double det = s0 * s2 - s1 * s1;
    if (!(std::abs(det) > 1e-14 * s0 * s2))
        throw ConvergenceError("validate: ill-conditioned fit window");
    const double c = (t0 * s2 - t1 * s1) / det;
    return {c, spec.reference, std::abs(c / spec.reference - 1.0)};
}

inline AsymptoteFit validate_asymptote(AsymptoteTag tag, double gamma)
{
    const auto spec = asymptote_spec(tag, gamma);
    return validate_asymptote(spec, spec.default_window);
}

}  // namespace casent
