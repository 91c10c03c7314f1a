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

#include "casent/self_entropy.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ratio>
#include <vector>

namespace {

using namespace casent;

constexpr double pi = std::numbers::pi;
constexpr double zeta3 = 1.2020569031595942854;
constexpr double zeta5 = 1.0369277551433699263;

// Closed expansions, written out independently of the library.
double te_low(double x) { return -3.0 * zeta3 / (4.0 * pi * pi * x * x); }
double te_high(double x) { return -1.0 / (3.0 * x) + 0.75 - 0.5 * std::log(2.0 * pi * x); }
double tm_low(double x)
{
    return 3.0 * zeta3 / (4.0 * pi * pi * x * x) + 1.0 / (15.0 * x * x * x) + 15.0 * zeta5 / (4.0 * std::pow(pi, 4) * std::pow(x, 4));
}
double tm_high(double x) { return 15.0 * zeta5 / (2.0 * std::pow(pi, 4) * std::pow(x, 4)) + 3.0 * zeta3 / (2.0 * pi * pi * x * x); }

double te(double x) { return plate_self_entropy(x, PlateChannel::te).value; }
double tm(double x) { return plate_self_entropy(x, PlateChannel::tm).value; }

std::vector<double> supported_samples()
{
    std::vector<double> xs;
    for (int i = 0; i < 80; ++i) xs.push_back(plate_x_min * std::pow(plate_x_max / plate_x_min, i / 79.0));
    return xs;
}

TEST(PlateSelfEntropy, LowTemperatureExpansions)
{
    for (double x : {10.0, 20.0}) {
        EXPECT_LT(std::abs(te(x) / te_low(x) - 1.0), 0.05) << x;
        EXPECT_LT(std::abs(tm(x) / tm_low(x) - 1.0), 0.05) << x;
    }
}

TEST(PlateSelfEntropy, HighTemperatureExpansions)
{
    EXPECT_LT(std::abs(te(0.05) / te_high(0.05) - 1.0), 0.05);
    EXPECT_LT(std::abs(tm(0.05) / tm_high(0.05) - 1.0), 0.05);
}

TEST(PlateSelfEntropy, TmLowTemperatureSeriesIsSharp)
{
    // all three expansion terms: the residual falls off faster than x^-4
    for (double x : {20.0, 50.0}) EXPECT_LT(std::abs(tm(x) - tm_low(x)) * std::pow(x, 4), 0.05) << x;
}

TEST(PlateSelfEntropy, LibraryExpansionsMatchClosedForms)
{
    for (double x : {0.05, 1.0, 20.0}) {
        using R = AsymptoticRegime;
        EXPECT_NEAR(plate_self_entropy_asymptotic(x, PlateChannel::te, R::low_temperature), te_low(x), 1e-14);
        EXPECT_NEAR(plate_self_entropy_asymptotic(x, PlateChannel::te, R::high_temperature), te_high(x), 1e-13);
        EXPECT_NEAR(plate_self_entropy_asymptotic(x, PlateChannel::tm, R::low_temperature), tm_low(x), 1e-13 * tm_low(x));
        EXPECT_NEAR(plate_self_entropy_asymptotic(x, PlateChannel::tm, R::high_temperature), tm_high(x),
                    1e-12 * tm_high(x));
    }
}

TEST(PlateSelfEntropy, SignPatternOnSupportedWindow)
{
    for (double x : supported_samples()) {
        EXPECT_LT(te(x), 0.0) << x;
        EXPECT_GT(tm(x), 0.0) << x;
        EXPECT_GT(plate_self_entropy(x, PlateChannel::total).value, 0.0) << x;
    }
}

TEST(PlateSelfEntropy, TotalIsSumOfChannels)
{
    for (double x : {0.03, 0.7, 6.0, 45.0})
        EXPECT_NEAR(plate_self_entropy(x, PlateChannel::total).value, te(x) + tm(x), 1e-15 * (std::abs(te(x)) + tm(x)));
}

TEST(PlateSelfEntropy, AgreesWithTimeSplitRegulator)
{
    for (double x : {0.5, 2.0, 10.0}) {
        const double ref = static_cast<double>(oracle::plate_entropy_extrapolated(oracle::plate_te, x, 0.04L));
        EXPECT_LT(std::abs(te(x) / ref - 1.0), 1e-5) << x;
    }
    for (double x : {0.5, 1.0, 5.0, 10.0}) {
        const double ref = static_cast<double>(oracle::plate_entropy_extrapolated(oracle::plate_tm, x, 0.04L));
        EXPECT_LT(std::abs(tm(x) / ref - 1.0), 1e-4) << x;
    }
}

TEST(PlateSelfEntropy, ModeFunctionsMatchOracleForms)
{
    for (long double w : {0.01L, 0.3L, 1.0L, 2.5L, 17.0L}) {
        const auto te_mode = oracle::plate_te(w);
        const auto tm_mode = oracle::plate_tm(w);
        EXPECT_NEAR(static_cast<double>(self_detail::r_te(w)), static_cast<double>(te_mode.r), 1e-15 * (1 + w * w));
        EXPECT_NEAR(static_cast<double>(self_detail::r_tm(w)), static_cast<double>(tm_mode.r), 1e-14 * (1 + w * w * w * w));
        EXPECT_NEAR(static_cast<double>(self_detail::h_te(w)), static_cast<double>(te_mode.r + w * te_mode.dr),
                    1e-14 * (1 + w * w));
        EXPECT_NEAR(static_cast<double>(self_detail::h_tm(w)), static_cast<double>(tm_mode.r + w * tm_mode.dr),
                    1e-13 * (1 + w * w * w * w));
    }
}

TEST(PlateSelfEntropy, LargeModeSubtractionLeavesDecayingRemainder)
{
    for (auto ch : {PlateChannel::te, PlateChannel::tm}) {
        auto rest = [ch](long double w) {
            const long double h = ch == PlateChannel::te ? self_detail::h_te(w) : self_detail::h_tm(w);
            return static_cast<double>(h - self_detail::h_asymptotic(ch, w));
        };
        // h - h_as ~ c / w^2
        const double a = rest(100.0L) * 1e4;
        const double b = rest(200.0L) * 4e4;
        EXPECT_NEAR(a, b, 0.02 * std::abs(a));
        EXPECT_NEAR(a, static_cast<double>(self_detail::h_tail_coefficient(ch, 2)), 0.02 * std::abs(a));
    }
}

TEST(PlateSelfEntropy, ErrorEstimateIsSmall)
{
    for (double x : supported_samples()) {
        const auto r = plate_self_entropy(x, PlateChannel::total);
        EXPECT_LT(r.error_estimate, 1e-9 * std::max(1.0, std::abs(r.value))) << x;
        EXPECT_FALSE(r.regulator.add_backs.empty());
    }
}

TEST(PlateSelfEntropy, RecordsZetaAddBacks)
{
    const auto r = plate_self_entropy(1.0, PlateChannel::tm);
    const auto& tags = r.regulator.add_backs;
    EXPECT_NE(std::find(tags.begin(), tags.end(), ZetaTag::square_log), tags.end());
    EXPECT_NE(std::find(tags.begin(), tags.end(), ZetaTag::quartic_log), tags.end());
    EXPECT_EQ(r.regulator.tail_orders, 64);
}

TEST(PlateSelfEntropy, UniversalInCouplingOverTemperature)
{
    for (double l0 : {0.3, 2.0, 9.0}) {
        const PlasmaPlate a{l0, 0.05};
        const PlasmaPlate b{2.0 * l0, 0.1};
        const auto sa = plate_self_entropy(a.x(), PlateChannel::total).value;
        const auto sb = plate_self_entropy(b.x(), PlateChannel::total).value;
        EXPECT_NEAR(sa, sb, 1e-8 * std::abs(sa));
        EXPECT_NEAR(plate_entropy_per_area(b, PlateChannel::total), 4.0 * plate_entropy_per_area(a, PlateChannel::total),
                    1e-12 * std::abs(plate_entropy_per_area(b, PlateChannel::total)));
    }
}

TEST(PlateSelfEntropy, LowTemperatureTotalApproachesResidualCubic)
{
    // TM supplies 1/(15 x^3); TE keeps its own 1/(45 x^3)
    const double c20 = plate_self_entropy(20.0, PlateChannel::total).value * std::pow(20.0, 3);
    const double c50 = plate_self_entropy(50.0, PlateChannel::total).value * std::pow(50.0, 3);
    EXPECT_NEAR(c50, 4.0 / 45.0, 0.01);
    EXPECT_LT(std::abs(c50 - 4.0 / 45.0), std::abs(c20 - 4.0 / 45.0));
    EXPECT_NEAR((te(50.0) - te_low(50.0)) * std::pow(50.0, 3), 1.0 / 45.0, 2e-3);
}

TEST(PlateSelfEntropy, RejectsUnsupportedWindow)
{
    EXPECT_THROW((void)plate_self_entropy(0.01, PlateChannel::te), UnsupportedRange);
    EXPECT_THROW((void)plate_self_entropy(60.0, PlateChannel::tm), UnsupportedRange);
    EXPECT_THROW((void)plate_self_entropy(std::nan(""), PlateChannel::total), UnsupportedRange);
    EXPECT_THROW((void)plate_channel_from_string("xy"), DomainError);
}

TEST(NanoparticleSelfEntropy, IsTemperatureDerivativeOfFiniteFreeEnergy)
{
    const double alpha = 0.7, beta = -0.2, T = 0.3;
    auto F = [&](long double t) { return -(2.0L * (alpha + beta) / 15.0L) * std::pow(std::numbers::pi_v<long double>, 3) * t * t * t * t; };
    const double S = -static_cast<double>(oracle::derivative(F, T, 1e-3L));
    EXPECT_NEAR(nanoparticle_self_entropy(alpha, beta, T), S, 1e-12);
    const double a = 0.1;
    EXPECT_NEAR(nanoparticle_self_entropy(a * a * a, -0.5 * a * a * a, T), 4.0 / 15.0 * std::pow(pi * a * T, 3), 1e-16);
    EXPECT_THROW((void)nanoparticle_self_entropy(1.0, 0.0, -1.0), DomainError);
}

TEST(EntropyBalance, LeadingCoefficientsCancelExactly)
{
    static_assert(std::ratio_equal_v<balance_coefficients::self, std::ratio<4, 15>>);
    static_assert(std::ratio_equal_v<balance_coefficients::interaction, std::ratio<-4, 15>>);
    static_assert(balance_coefficients::sum::num == 0);
    // and the numerical values follow them at small y
    const double a = 0.05, Z = 1.0, T = 1e-4;
    const auto b = total_entropy_balance(a, Z, T);
    const double unit = std::pow(pi * a * T, 3);
    EXPECT_NEAR(b.S_self / unit, 4.0 / 15.0, 1e-12);
    EXPECT_NEAR(b.S_interaction / unit, -4.0 / 15.0, 1e-4);
}

TEST(EntropyBalance, TotalIsNonnegativeOnGrid)
{
    for (double ratio : {0.01, 0.05, 0.1})
        for (int i = 0; i <= 30; ++i) {
            const double y = 1e-3 * std::pow(1e3, i / 30.0);
            const double Z = 1.0;
            const auto b = total_entropy_balance(ratio * Z, Z, y / (4.0 * pi * Z));
            EXPECT_GE(b.S_total, 0.0) << ratio << " " << y;
            EXPECT_DOUBLE_EQ(b.S_total, b.S_self + b.S_interaction);
        }
}

TEST(EntropyBalance, VanishesWithSphereRadius)
{
    const auto b = total_entropy_balance(1e-6, 1.0, 0.2);
    EXPECT_LT(std::abs(b.S_self), 1e-17);
    EXPECT_LT(std::abs(b.S_interaction), 1e-17);
    EXPECT_LT(std::abs(b.S_total), 1e-17);
}

TEST(EntropyBalance, SphereSizeGuards)
{
    EXPECT_FALSE(total_entropy_balance(0.05, 1.0, 0.1).sphere_size_warning);
    EXPECT_TRUE(total_entropy_balance(0.15, 1.0, 0.1).sphere_size_warning);
    EXPECT_THROW((void)total_entropy_balance(0.3, 1.0, 0.1), DomainError);
    EXPECT_THROW((void)total_entropy_balance(-0.1, 1.0, 0.1), DomainError);
}

}  // namespace
