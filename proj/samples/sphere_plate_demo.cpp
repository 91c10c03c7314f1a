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

// Walks through the conducting-sphere / conducting-plate system: the
// negative-entropy window of the interaction, and its balance against the
// sphere's own self-entropy.

#include "casent/analysis.hpp"
#include "casent/self_entropy.hpp"

#include <cstdio>

int main()
{
    using namespace casent;

    const auto roots = find_zero_crossings(CurveSpec{AtomPlateCurve{1.0, PlateSplitChannel::total}}, {0.1, 50.0});
    std::printf("isotropic particle near a plate: s(y) changes sign at y = %.6f\n", roots.front());

    const auto m = min_entropy(CurveSpec{AtomPlateCurve{1.0, PlateSplitChannel::total}}, {0.0, 3.0});
    std::printf("deepest point: s = %.6e at y = %.6f\n", m.value, m.y);

    const double a = 0.05, Z = 1.0;
    std::printf("\nconducting sphere a = %.2f at Z = %.1f\n", a, Z);
    std::printf("%10s %14s %14s %14s\n", "T", "S_self", "S_int", "S_total");
    for (double T : {0.001, 0.01, 0.05, 0.1, 0.5}) {
        const auto b = total_entropy_balance(a, Z, T);
        std::printf("%10.3g %14.6e %14.6e %14.6e\n", T, b.S_self, b.S_interaction, b.S_total);
    }

    const auto pc = Particle::pc_sphere(1.0);
    const auto window = find_zero_crossings(CurveSpec{PairCurve{pc, pc, PairChannel::total}}, {0.01, 50.0});
    std::printf("\ntwo conducting spheres: negative entropy for %.5f < y < %.5f\n", window.at(0), window.at(1));
    return 0;
}
