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

#include "casent/matsubara_kernels.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace {

using casent::half_coth_kernel;

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return v;
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(HalfCothKernel, LargeArgumentTendsToOneHalf)
{
    EXPECT_NEAR(half_coth_kernel(700.0, 0), 0.5, 1e-16);
    EXPECT_NEAR(half_coth_kernel(40.0, 0), 0.5 + std::exp(-40.0), 1e-16);
    EXPECT_NEAR(half_coth_kernel(100.0, 2), 0.0, 1e-40);
}

TEST(HalfCothKernel, SmallArgumentFollowsBernoulliExpansion)
{
    for (double y : {1e-4, 1e-3, 1e-2}) {
        const double expansion = 1.0 / y + y / 12.0 - y * y * y / 720.0;
        EXPECT_LT(relative(half_coth_kernel(y, 0), expansion), 1e-14) << y;
    }
    // direct summation, 1e5 modes
    const double y = 1e-3;
    EXPECT_LT(relative(half_coth_kernel(y, 0), static_cast<double>(oracle::kernel(y, 0, 100000))), 1e-14);
}

TEST(HalfCothKernel, SecondDerivativeAtOne)
{
    const double v = half_coth_kernel(1.0, 2);
    EXPECT_LT(relative(v, static_cast<double>(oracle::kernel_second_closed(1.0L))), 1e-14);
    EXPECT_NEAR(v, 1.992295, 1e-6);
}

TEST(HalfCothKernel, MatchesDirectSummationForAllOrders)
{
    for (double y : log_grid(0.05, 40.0, 37))
        for (int k = 0; k <= 4; ++k)
            EXPECT_LT(relative(half_coth_kernel(y, k), static_cast<double>(oracle::kernel(y, k))), 1e-13)
                << "y=" << y << " k=" << k;
}

TEST(HalfCothKernel, SeriesAndClosedFormAgreeOnOverlap)
{
    for (double y : log_grid(0.3, 1.0, 200))
        for (int k = 0; k <= 4; ++k) {
            const double series = casent::kernel_detail::series_derivative(y, k);
            const double closed = casent::kernel_detail::closed_derivative(y, k);
            EXPECT_LT(relative(series, closed), 1e-12) << "y=" << y << " k=" << k;
        }
}

TEST(HalfCothKernel, ClosedFormAndExponentialSumAgreeAboveSwitch)
{
    for (double y : log_grid(25.0, 40.0, 20))
        for (int k = 0; k <= 4; ++k) {
            const double closed = casent::kernel_detail::closed_derivative(y, k);
            const double sum = casent::kernel_detail::exp_sum_derivative(y, k);
            EXPECT_LT(relative(sum, closed), 1e-13) << "y=" << y << " k=" << k;
        }
}

TEST(HalfCothKernel, AlternatingSignPattern)
{
    for (double y : log_grid(1e-4, 700.0, 300))
        for (int k = 0; k <= 4; ++k) {
            const double v = half_coth_kernel(y, k);
            EXPECT_GT(k % 2 == 0 ? v : -v, 0.0) << "y=" << y << " k=" << k;
        }
}

TEST(HalfCothKernel, RejectsInvalidArguments)
{
    EXPECT_THROW((void)half_coth_kernel(0.0, 0), casent::DomainError);
    EXPECT_THROW((void)half_coth_kernel(-1.0, 0), casent::DomainError);
    EXPECT_THROW((void)half_coth_kernel(std::numeric_limits<double>::quiet_NaN(), 0), casent::DomainError);
    EXPECT_THROW((void)half_coth_kernel(std::numeric_limits<double>::infinity(), 0), casent::DomainError);
    EXPECT_THROW((void)half_coth_kernel(1.0, 5), casent::DomainError);
    EXPECT_THROW((void)half_coth_kernel(1.0, -1), casent::DomainError);
}

TEST(PrimedPolySum, ConstantPolynomialIsTheKernel)
{
    for (double y : {0.1, 1.0, 7.0})
        EXPECT_DOUBLE_EQ(casent::primed_poly_sum({{1, 0, 0, 0, 0}, y}), half_coth_kernel(y, 0));
}

TEST(PrimedPolySum, SquareIsSecondDerivative)
{
    for (double y : {0.1, 1.0, 7.0})
        EXPECT_NEAR(casent::primed_poly_sum({{0, 0, 1, 0, 0}, y}), y * y * half_coth_kernel(y, 2),
                    1e-14 * y * y * half_coth_kernel(y, 2));
}

TEST(PrimedPolySum, MatchesTwoHundredTermSum)
{
    const double y = 2.0;
    long double direct = 0.5L;
    for (int m = 1; m < 200; ++m) {
        const long double u = m * y;
        direct += (1 + 2 * u + u * u) * std::exp(-u);
    }
    EXPECT_LT(relative(casent::primed_poly_sum({{1, 2, 1, 0, 0}, y}), static_cast<double>(direct)), 1e-14);
}

TEST(PrimedPolySum, RandomPolynomialsMatchDirectSummation)
{
    std::mt19937_64 rng(20261014);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    std::uniform_real_distribution<double> logy(std::log(0.05), std::log(20.0));
    for (int trial = 0; trial < 100; ++trial) {
        casent::PrimedSumSpec spec;
        const int degree = trial % 5;
        for (int k = 0; k <= degree; ++k) spec.coefficients[k] = coef(rng);
        spec.y = std::exp(logy(rng));
        const auto poly = spec.coefficients;
        const auto direct = oracle::primed_sum(spec.y, [&](long double u) {
            long double p = 0.0L;
            for (int k = 4; k >= 0; --k) p = p * u + poly[k];
            return p * std::exp(-u);
        });
        EXPECT_LT(relative(casent::primed_poly_sum(spec), static_cast<double>(direct)), 1e-12)
            << "trial " << trial << " y=" << spec.y;
    }
}

TEST(PrimedPolySum, RejectsNonPositiveArgument)
{
    EXPECT_THROW((void)casent::primed_poly_sum({{1, 0, 0, 0, 0}, 0.0}), casent::DomainError);
    EXPECT_THROW((void)casent::primed_poly_sum({{1, 0, 0, 0, 0}, -2.0}), casent::DomainError);
}

TEST(KernelCombination, DerivativeMatchesFiniteDifference)
{
    auto c = casent::mode_sum(std::array<double, 3>{1.0, 2.0, 0.5}, 0.3, 1);
    const auto d = c.derivative();
    for (double y : {0.2, 0.7, 3.0, 12.0}) {
        const auto fd = oracle::derivative([&](long double t) { return static_cast<long double>(c(double(t))); }, y,
                                           std::min(1e-3, y / 8));
        EXPECT_NEAR(d(y), static_cast<double>(fd), 1e-9 * std::max(1.0, std::abs(d(y))));
    }
}

TEST(KernelCombination, LimitAtZeroOfScaledKernel)
{
    // y g(y) -> 1
    casent::KernelCombination c;
    c.add(1.0, 1, 0);
    EXPECT_NEAR(c.limit_at_zero(), 1.0, 1e-15);
    EXPECT_NEAR(c(1e-6), 1.0, 1e-11);
}

TEST(KernelCombination, CancellingCombinationStaysAccurateNearZero)
{
    // g + y g' = (y g)' = y/6 - y^3/180 + y^5/5040 - ...
    casent::KernelCombination c;
    c.add(1.0, 0, 0);
    c.add(1.0, 1, 1);
    for (double y : {1e-4, 1e-2, 0.1}) {
        const double expected = y / 6.0 - std::pow(y, 3) / 180.0 + std::pow(y, 5) / 5040.0;
        EXPECT_LT(relative(c(y), expected), 1e-10) << y;
    }
}

TEST(ZetaRegConstant, TableValues)
{
    using casent::ZetaTag;
    using casent::zeta_reg_constant;
    EXPECT_EQ(zeta_reg_constant(ZetaTag::primed_count), 0.0);
    EXPECT_EQ(zeta_reg_constant(ZetaTag::square), 0.0);
    EXPECT_NEAR(zeta_reg_constant(ZetaTag::log), 0.5 * std::log(2.0 * std::numbers::pi), 1e-15);

    // zeta(3) by summation with an integral tail, then -zeta'(-2) = zeta(3)/(4 pi^2)
    long double z3 = 0.0L;
    const long n = 100000;
    for (long k = n; k >= 1; --k) z3 += 1.0L / (static_cast<long double>(k) * k * k);
    z3 += 1.0L / (2.0L * n * n) - 1.0L / (2.0L * n * n * n);
    const auto pi = std::numbers::pi_v<long double>;
    const double expected = static_cast<double>(z3 / (4.0L * pi * pi));
    EXPECT_NEAR(zeta_reg_constant(ZetaTag::square_log), expected, 1e-14);
    EXPECT_NEAR(zeta_reg_constant(ZetaTag::square_log), 0.0304484, 1e-7);
}

TEST(ZetaRegConstant, UnknownTagIsRejected)
{
    EXPECT_THROW((void)casent::zeta_tag_from_string("cube"), casent::DomainError);
    EXPECT_EQ(casent::zeta_tag_from_string("square_log"), casent::ZetaTag::square_log);
}

}  // namespace
