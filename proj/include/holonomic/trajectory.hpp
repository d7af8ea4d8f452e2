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

#pragma once

// Bloch-sphere data for U_beta acting on |0> and |1>: time-resolved along
// one period of the drive, or endpoint maps across a sweep of beta.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "holonomic/evolution.hpp"
#include "holonomic/model.hpp"
#include "holonomic/su2.hpp"

namespace holonomic {

struct TrajectoryRecord {
    double beta = 0.0;
    double t = 0.0;
    int branch = 0;  // initial state |0> or |1>
    BlochPoint point;
};

inline constexpr Spinor kKet0{1.0, 0.0};
inline constexpr Spinor kKet1{0.0, 1.0};

namespace detail {

inline void push_pair(std::vector<TrajectoryRecord> &out, double beta, double t, const Unitary2 &u) {
    out.push_back({beta, t, 0, bloch_of(u * kKet0)});
    out.push_back({beta, t, 1, bloch_of(u * kKet1)});
}

}  // namespace detail

/// Bloch vectors of U(t)|0> and U(t)|1> at `samples` uniform times in
/// [0, T] for the holonomic drive of `beta`, built from partial products of
/// the midpoint propagator.
inline std::vector<TrajectoryRecord> time_resolved_trajectory(double beta, int samples,
                                                              std::int64_t steps_per_period = kDefaultStepsPerPeriod) {
    if (samples < 2) {
        throw DomainError("trajectory: samples must be >= 2");
    }
    if (steps_per_period < 1) {
        throw DomainError("trajectory: steps must be >= 1");
    }
    const DriveParams p = params_from_beta({beta, 1.0});
    const double period = p.period();
    const auto intervals = static_cast<std::int64_t>(samples - 1);
    const std::int64_t sub_steps = std::max<std::int64_t>(1, (steps_per_period + intervals - 1) / intervals);

    std::vector<TrajectoryRecord> out;
    out.reserve(2 * static_cast<std::size_t>(samples));
    Unitary2 u = Unitary2::identity();
    double t_prev = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = period * static_cast<double>(i) / static_cast<double>(intervals);
        if (i > 0) {
            u = propagate_segment(p, t_prev, t, sub_steps) * u;
        }
        detail::push_pair(out, beta, t, u);
        t_prev = t;
    }
    return out;
}

/// Endpoint maps U_beta|0>, U_beta|1> for each listed beta (t = T).
inline std::vector<TrajectoryRecord> endpoint_trajectory(const std::vector<double> &betas) {
    std::vector<TrajectoryRecord> out;
    out.reserve(2 * betas.size());
    for (double beta : betas) {
        const HolonomicGate g{beta, 1.0};
        detail::push_pair(out, beta, 2.0 * kPi / g.omega_drive, analytic_gate(g));
    }
    return out;
}

/// `samples` uniformly spaced beta values covering [0, pi/2].
inline std::vector<double> beta_sweep(int samples) {
    if (samples < 2) {
        throw DomainError("beta sweep: samples must be >= 2");
    }
    std::vector<double> betas(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        betas[static_cast<std::size_t>(i)] = kBetaMax * static_cast<double>(i) / static_cast<double>(samples - 1);
    }
    betas.back() = kBetaMax;
    return betas;
}

}  // namespace holonomic
