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

// Half-weighted exponential kernel g(y) = 1/2 coth(y/2) = sum'_{m>=0} exp(-m y),
// its derivatives, and primed Matsubara sums of polynomial x exponential terms.
//
// Three evaluation routes are used for g^(k):
//   y < 0.5        Laurent series 1/y + sum_n B_2n/(2n)! y^(2n-1)
//   0.5 <= y <= 30 closed form in the Bose function n = 1/(e^y - 1)
//   y > 30         40-term exponential sum
// Linear combinations c * y^p * g^(k)(y) are evaluated on the Laurent route
// with their exponents merged first, so that the large cancellations present in
// entropy kernels at small y happen between exact series coefficients instead
// of between rounded function values.

#pragma once

#include "casent/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace casent {

namespace kernel_detail {

/// Highest derivative order used internally. Entropy kernels differentiate
/// free-energy kernels that already carry g'''' so one order above the public
/// cap is required.
inline constexpr int max_order = 6;

inline constexpr double series_upper = 0.5;
inline constexpr double closed_upper = 30.0;
inline constexpr int exp_sum_terms = 40;
inline constexpr int laurent_terms = 24;

/// b_n = B_{2n} / (2n)!  for n = 1..laurent_terms, stored at index n-1.
inline const std::array<double, laurent_terms>& laurent_coefficients()
{
    static const std::array<double, laurent_terms> table = [] {
        std::array<double, laurent_terms> b{};
        const double two_pi = 2.0 * std::numbers::pi;
        for (int n = 1; n <= laurent_terms; ++n) {
            const double sign = (n % 2 == 1) ? 1.0 : -1.0;
            b[n - 1] = sign * 2.0 * std::riemann_zeta(2.0 * n) / std::pow(two_pi, 2.0 * n);
        }
        return b;
    }();
    return table;
}

/// Falling factorial m (m-1) ... (m-k+1).
constexpr double falling_factorial(int m, int k)
{
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= static_cast<double>(m - i);
    return r;
}

constexpr double factorial(int k) { return falling_factorial(k, k); }

/// Coefficients of the polynomials P_k with n^(k)(y) = P_k(n(y)) for the Bose
/// function n = 1/(e^y - 1); from n' = -n - n^2.
using BosePolynomial = std::array<double, max_order + 2>;

constexpr std::array<BosePolynomial, max_order + 1> make_bose_polynomials()
{
    std::array<BosePolynomial, max_order + 1> p{};
    p[0][1] = 1.0;
    for (int k = 0; k < max_order; ++k) {
        // P_{k+1}(n) = P_k'(n) * (-n - n^2)
        for (int j = 1; j <= max_order + 1; ++j) {
            const double dj = j * p[k][j];
            if (dj == 0.0) continue;
            p[k + 1][j] -= dj;
            if (j + 1 <= max_order + 1) p[k + 1][j + 1] -= dj;
        }
    }
    return p;
}

inline constexpr auto bose_polynomials = make_bose_polynomials();

inline double series_derivative(double y, int order)
{
    const auto& b = laurent_coefficients();
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    double value = sign * factorial(order) / std::pow(y, order + 1);
    for (int n = 1; n <= laurent_terms; ++n) {
        const int m = 2 * n - 1;
        if (m < order) continue;
        value += b[n - 1] * falling_factorial(m, order) * std::pow(y, m - order);
    }
    return value;
}

inline double closed_derivative(double y, int order)
{
    const double n = 1.0 / std::expm1(y);
    const auto& p = bose_polynomials[order];
    double acc = 0.0;
    for (int j = max_order + 1; j >= 1; --j) acc = (acc + p[j]) * n;
    return order == 0 ? 0.5 + acc : acc;
}

inline double exp_sum_derivative(double y, int order)
{
    double value = order == 0 ? 0.5 : 0.0;
    for (int m = exp_sum_terms; m >= 1; --m) {
        const double weight = std::pow(-static_cast<double>(m), order);
        value += weight * std::exp(-m * y);
    }
    return value;
}

inline void check_argument(double y, int order, int cap)
{
    if (!std::isfinite(y) || y <= 0.0)
        throw DomainError("half_coth_kernel: argument must be finite and positive");
    if (order < 0 || order > cap)
        throw DomainError("half_coth_kernel: derivative order out of range");
}

/// g^(order)(y) for 0 <= order <= max_order; routes by regime.
inline double derivative(double y, int order)
{
    check_argument(y, order, max_order);
    if (y < series_upper) return series_derivative(y, order);
    if (y <= closed_upper) return closed_derivative(y, order);
    return exp_sum_derivative(y, order);
}

}  // namespace kernel_detail

/// g^(order)(y) with g(y) = 1/2 coth(y/2), order 0..4.
inline double half_coth_kernel(double y, int order)
{
    kernel_detail::check_argument(y, order, 4);
    return kernel_detail::derivative(y, order);
}

/// One term c * y^power * g^(order)(y).
struct KernelTerm
{
    double coefficient = 0.0;
    int power = 0;
    int order = 0;
};

/// Linear combination of KernelTerms, closed under d/dy.
class KernelCombination
{
public:
    KernelCombination() = default;

    KernelCombination& add(double coefficient, int power, int order)
    {
        if (order < 0 || order > kernel_detail::max_order)
            throw DomainError("KernelCombination: derivative order out of range");
        if (coefficient != 0.0) terms_.push_back({coefficient, power, order});
        return *this;
    }

    KernelCombination& operator+=(const KernelCombination& other)
    {
        terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
        return *this;
    }

    friend KernelCombination operator+(KernelCombination a, const KernelCombination& b)
    {
        a += b;
        return a;
    }

    friend KernelCombination operator*(double s, KernelCombination a)
    {
        for (auto& t : a.terms_) t.coefficient *= s;
        return a;
    }

    /// Multiplies every term by y^shift.
    [[nodiscard]] KernelCombination shifted(int shift) const
    {
        KernelCombination r = *this;
        for (auto& t : r.terms_) t.power += shift;
        return r;
    }

    [[nodiscard]] KernelCombination derivative() const
    {
        KernelCombination r;
        for (const auto& t : terms_) {
            if (t.power != 0) r.add(t.coefficient * t.power, t.power - 1, t.order);
            r.add(t.coefficient, t.power, t.order + 1);
        }
        return r;
    }

    [[nodiscard]] std::span<const KernelTerm> terms() const { return terms_; }

    /// Value at y > 0.
    [[nodiscard]] double operator()(double y) const
    {
        if (!std::isfinite(y) || y <= 0.0)
            throw DomainError("KernelCombination: argument must be finite and positive");
        if (y < kernel_detail::series_upper) return laurent(y, false);
        double value = 0.0;
        for (const auto& t : terms_)
            value += t.coefficient * std::pow(y, t.power) * kernel_detail::derivative(y, t.order);
        return value;
    }

    /// Limit y -> 0+; throws if a singular exponent survives cancellation.
    [[nodiscard]] double limit_at_zero() const { return laurent(0.0, true); }

private:
    double laurent(double y, bool limit_only) const
    {
        using namespace kernel_detail;
        // exponents range over [min_exp, max_exp]; offset keeps indices positive
        constexpr int offset = 3 * max_order + 8;
        constexpr int span = offset + 2 * laurent_terms + 3 * max_order + 8;
        std::array<double, span> sum{};
        std::array<double, span> magnitude{};
        const auto& b = laurent_coefficients();
        auto deposit = [&](int exponent, double c) {
            const int idx = exponent + offset;
            if (idx < 0 || idx >= span) throw DomainError("KernelCombination: exponent out of range");
            sum[idx] += c;
            magnitude[idx] += std::abs(c);
        };
        for (const auto& t : terms_) {
            const double sign = (t.order % 2 == 0) ? 1.0 : -1.0;
            deposit(t.power - t.order - 1, t.coefficient * sign * factorial(t.order));
            for (int n = 1; n <= laurent_terms; ++n) {
                const int m = 2 * n - 1;
                if (m < t.order) continue;
                deposit(t.power + m - t.order, t.coefficient * b[n - 1] * falling_factorial(m, t.order));
            }
        }
        double value = 0.0;
        for (int idx = 0; idx < span; ++idx) {
            if (std::abs(sum[idx]) <= 64.0 * std::numeric_limits<double>::epsilon() * magnitude[idx])
                continue;
            const int exponent = idx - offset;
            if (limit_only) {
                if (exponent < 0)
                    throw DomainError("KernelCombination: combination is singular at y = 0");
                if (exponent == 0) value += sum[idx];
                continue;
            }
            value += sum[idx] * std::pow(y, exponent);
        }
        return value;
    }

    std::vector<KernelTerm> terms_;
};

/// scale * y^extra_power * sum'_{m>=0} P(m y) e^{-m y}, P(u) = sum_k poly[k] u^k.
/// Uses sum' (m y)^k e^{-m y} = (-1)^k y^k g^(k)(y).
inline KernelCombination mode_sum(std::span<const double> poly, double scale = 1.0, int extra_power = 0)
{
    if (poly.size() > static_cast<std::size_t>(kernel_detail::max_order))
        throw DomainError("mode_sum: polynomial degree too high");
    KernelCombination c;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        c.add(scale * sign * poly[k], static_cast<int>(k) + extra_power, static_cast<int>(k));
    }
    return c;
}

/// Polynomial coefficients in u = m y (degree <= 4) and the argument y.
struct PrimedSumSpec
{
    std::array<double, 5> coefficients{};
    double y = 0.0;
};

/// sum'_{m>=0} P(m y) e^{-m y} with the m = 0 term half-weighted.
inline double primed_poly_sum(const PrimedSumSpec& spec)
{
    if (!std::isfinite(spec.y) || spec.y <= 0.0)
        throw DomainError("primed_poly_sum: argument must be finite and positive");
    return mode_sum(spec.coefficients)(spec.y);
}

/// Closed-form values assigned to divergent mode sums.
enum class ZetaTag
{
    primed_count,        // sum'_{m>=0} 1            = 1/2 + zeta(0)
    count,               // sum_{m>=1} 1             = zeta(0)
    linear,              // sum_{m>=1} m             = zeta(-1)
    square,              // sum_{m>=1} m^2           = zeta(-2)
    quartic,             // sum_{m>=1} m^4           = zeta(-4)
    log,                 // sum_{m>=1} ln m          = -zeta'(0)
    square_log,          // sum_{m>=1} m^2 ln m      = -zeta'(-2)
    quartic_log,         // sum_{m>=1} m^4 ln m      = -zeta'(-4)
};

inline double zeta_reg_constant(ZetaTag tag)
{
    using std::numbers::pi;
    switch (tag) {
    case ZetaTag::primed_count: return 0.0;
    case ZetaTag::count: return -0.5;
    case ZetaTag::linear: return -1.0 / 12.0;
    case ZetaTag::square: return 0.0;
    case ZetaTag::quartic: return 0.0;
    case ZetaTag::log: return 0.5 * std::log(2.0 * pi);
    case ZetaTag::square_log: return std::riemann_zeta(3.0) / (4.0 * pi * pi);
    case ZetaTag::quartic_log: return -3.0 * std::riemann_zeta(5.0) / (4.0 * pi * pi * pi * pi);
    }
    throw DomainError("zeta_reg_constant: unknown tag");
}

inline ZetaTag zeta_tag_from_string(std::string_view name)
{
    if (name == "primed_count") return ZetaTag::primed_count;
    if (name == "count") return ZetaTag::count;
    if (name == "linear") return ZetaTag::linear;
    if (name == "square") return ZetaTag::square;
    if (name == "quartic") return ZetaTag::quartic;
    if (name == "log") return ZetaTag::log;
    if (name == "square_log") return ZetaTag::square_log;
    if (name == "quartic_log") return ZetaTag::quartic_log;
    throw DomainError("zeta_reg_constant: unknown tag '" + std::string(name) + "'");
}

}  // namespace casent
