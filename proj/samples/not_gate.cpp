// Copyright 2026 The Holonomic Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builds a NOT gate out of four holonomic gates, checks the first pulse
// against brute-force propagation, then searches for a fresh sequence.

#include <cstdio>

#include "holonomic/holonomic.hpp"

int main() {
    using namespace holonomic;

    const PulseSequence published{{0.423, 0.680, 0.236, 0.222}};
    const TargetGate target = targets::not_gate();
    const FidelityReport f = fidelity(compose(published), target.matrix);
    std::printf("published sequence: fidelity %.11f\n", f.magnitude);

    const DriveParams first = params_from_beta({published.betas.front(), 1.0});
    const Unitary2 numeric = propagate(first, first.period(), kDefaultStepsPerPeriod);
    std::printf("first pulse, |propagated - analytic|_max = %.2e\n",
                max_abs_diff(numeric, analytic_gate(published.betas.front())));

    const SynthesisResult fresh = synthesize(target, 4, SynthesisConfig{}, 7);
    std::printf("fresh search (seed 7): converged=%d infidelity=%.3e betas:", fresh.converged, fresh.infidelity);
    for (double b : fresh.sequence.betas) std::printf(" %.6f", b);
    std::printf("\n");
    return fresh.converged ? 0 : 1;
}
