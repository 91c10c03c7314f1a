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

#include "casent/two_body.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace {

using namespace casent;
using oracle::ld;

TEST(TwoBody, EeHighTemperaturePlateau)
{
    for (double g : {0.0, 1.0, 2.0}) EXPECT_NEAR(reduced_ee(g, 50.0).s, (2.0 + g) / 23.0, 1e-10) << g;
}

TEST(TwoBody, EeNormalizationAtZeroTemperature)
{
    // f_EE(gamma, 0) = (1/23)[2 gamma (1 + 1 + 1.5 + 1.5 + 1.5) + 4 (1 + 1 + 0.5)] = (13 gamma + 10) / 23
    for (double g : {0.0, 1.0, 2.0}) EXPECT_NEAR(reduced_ee(g, 0.0).f, (13.0 * g + 10.0) / 23.0, 1e-14);
    EXPECT_NEAR(reduced_ee(1.0, 0.0).f, 1.0, 1e-14);
}

TEST(TwoBody, EmNormalizationAtZeroTemperature) { EXPECT_NEAR(reduced_em_free_energy(0.0), 1.0, 1e-14); }

TEST(TwoBody, SmallYCoefficients)
{
    const double y = 1e-3;
    for (double g : {0.0, 0.5, 2.0}) EXPECT_NEAR(reduced_ee(g, y).s / (y * y * y), (1.0 - g) / 2070.0, 1e-9) << g;
    const double y2 = 1e-2;
    EXPECT_LT(std::abs(reduced_em(y2) / std::pow(y2, 5) * -7056.0 - 1.0), 1e-3);
}

TEST(TwoBody, MatchesDirectSummationOracle)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> gamma(0.0, 3.0);
    std::uniform_real_distribution<double> logy(std::log(0.05), std::log(20.0));
    for (int i = 0; i < 50; ++i) {
        const double g = gamma(rng);
        const double y = std::exp(logy(rng));
        const auto f = [g](ld t) { return oracle::ee_f(g, t); };
        const auto r = reduced_ee(g, y);
        EXPECT_NEAR(r.f, static_cast<double>(f(y)), 1e-8) << g << " " << y;
        EXPECT_NEAR(r.s, static_cast<double>(oracle::entropy(f, y)), 1e-8) << g << " " << y;
        EXPECT_NEAR(reduced_em_free_energy(y), static_cast<double>(oracle::em_f(y)), 1e-8) << y;
        EXPECT_NEAR(reduced_em(y), static_cast<double>(oracle::entropy(oracle::em_f, y)), 1e-8) << y;
    }
}

TEST(TwoBody, ChannelsSumToTotal)
{
    const Particle p1{1.0, 0.8, -0.5, 1.2};
    const Particle p2{0.6, 1.1, 0.2, 0.9};
    for (double y : {0.0, 0.3, 2.0, 9.0}) {
        const auto r = reduced_pair_entropy(p1, p2, y);
        EXPECT_DOUBLE_EQ(r.ee + r.mm + r.em, r.total);
    }
    const auto c = entropy_two_body({p1, p2, {2.0, 0.3}});
    EXPECT_DOUBLE_EQ(c.S_EE + c.S_MM + c.S_EM, c.S_total);
    ASSERT_TRUE(c.reduced_total.has_value());
    EXPECT_NEAR(*c.reduced_total, reduced_pair_entropy(p1, p2, 4.0 * std::numbers::pi * 0.6).total, 1e-14);
}

TEST(TwoBody, PrefactorsAndSymmetry)
{
    const Particle p1{1.0, 0.8, -0.5, 1.2};
    const Particle p2{0.6, 1.1, 0.2, 0.9};
    const ThermalGeometry geom{1.3, 0.25};
    const auto a = entropy_two_body({p1, p2, geom});
    const auto b = entropy_two_body({p2, p1, geom});
    EXPECT_DOUBLE_EQ(a.S_total, b.S_total);
    const double z6 = std::pow(geom.Z, 6);
    EXPECT_NEAR(a.S_EE, 23.0 * p1.alpha_z * p2.alpha_z / z6 * reduced_ee(0.8 * 1.1, geom.y()).s, 1e-15);
    EXPECT_NEAR(a.S_MM, 23.0 * p1.beta_z * p2.beta_z / z6 * reduced_ee(1.2 * 0.9, geom.y()).s, 1e-15);
    const double cross = p1.alpha_perp() * p2.beta_perp() + p1.beta_perp() * p2.alpha_perp();
    EXPECT_NEAR(a.S_EM, -7.0 * cross / z6 * reduced_em(geom.y()), 1e-15);
}

TEST(TwoBody, CrossTermSignFollowsPolarizabilityProducts)
{
    // s_EM < 0 at small y; a positive alpha beta product gives S_EM > 0 there.
    const Particle p{1.0, 1.0, 1.0, 1.0};
    EXPECT_LT(reduced_em(0.5), 0.0);
    EXPECT_GT(entropy_two_body({p, p, {1.0, 0.5 / (4.0 * std::numbers::pi)}}).S_EM, 0.0);
}

TEST(TwoBody, DrudePairHasOnlyElectricChannel)
{
    const auto p = Particle::drude(1.0);
    for (double y : {0.5, 3.0}) {
        const auto r = reduced_pair_entropy(p, p, y);
        EXPECT_EQ(r.mm, 0.0);
        EXPECT_EQ(r.em, 0.0);
        EXPECT_NEAR(r.ee, 23.0 * reduced_ee(1.0, y).s, 1e-15);
    }
}

TEST(TwoBody, ConductingSpherePairPlateau)
{
    // 23 (1 + 1/4) (3/23) - 7 (-1/2 - 1/2)(0) ... -> high-T value 15/4 at unit radius
    const auto pc = Particle::pc_sphere(1.0);
    EXPECT_NEAR(reduced_pair_entropy(pc, pc, 60.0).total, 15.0 / 4.0, 1e-9);
}

TEST(TwoBody, RejectsInvalidInput)
{
    EXPECT_THROW((void)reduced_ee(-1.0, 1.0), DomainError);
    EXPECT_THROW((void)reduced_em(-1.0), DomainError);
    EXPECT_THROW((void)reduced_pair_entropy(Particle{0.0}, Particle::drude(1.0), 1.0), DomainError);
    EXPECT_THROW((void)entropy_two_body({Particle::drude(1.0), Particle::drude(1.0), {-1.0, 0.1}}), DomainError);
}

}  // namespace
