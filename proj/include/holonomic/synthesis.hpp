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

// Composition of holonomic gates into arbitrary one-qubit unitaries and
// multi-start search for pulse sequences {beta_i} that reach a target.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "holonomic/model.hpp"
#include "holonomic/nelder_mead.hpp"
#include "holonomic/su2.hpp"

namespace holonomic {

/// Ordered gate list; betas.front() acts first.
struct PulseSequence {
    std::vector<double> betas;
    double omega_drive = 1.0;

    std::size_t size() const { return betas.size(); }

    void validate() const {
        for (double b : betas) check_beta(b);
        if (!(omega_drive > 0.0) || !std::isfinite(omega_drive)) {
            throw DomainError("PulseSequence: omega_drive must be positive and finite");
        }
    }
};

/// U_{beta_N} ... U_{beta_1}.
inline Unitary2 compose(const PulseSequence &seq) {
    seq.validate();
    Unitary2 u = Unitary2::identity();
    for (double b : seq.betas) {
        u = analytic_gate(HolonomicGate{b, seq.omega_drive}) * u;
    }
    return u;
}

inline Unitary2 compose(std::span<const double> betas) {
    Unitary2 u = Unitary2::identity();
    for (double b : betas) {
        u = analytic_gate(b) * u;
    }
    return u;
}

struct TargetGate {
    std::string name = "custom";
    Unitary2 matrix = Unitary2::identity();

    void validate() const {
        if (!is_unitary(matrix)) {
            throw DomainError("target gate '" + name + "' is not unitary (defect " +
                              std::to_string(unitarity_defect(matrix)) + ")");
        }
    }
};

namespace targets {

inline TargetGate not_gate() { return {"NOT", kI * pauli(Axis::x)}; }

inline TargetGate hadamard() {
    const complex a = kI / std::sqrt(2.0);
    return {"Hadamard", {a, a, a, -a}};
}

inline TargetGate phase() { return {"Phase", std::polar(1.0, -kPi / 4.0) * Unitary2{1.0, 0.0, 0.0, kI}}; }

inline TargetGate pi_over_8() {
    return {"T", std::polar(1.0, -kPi / 8.0) * Unitary2{1.0, 0.0, 0.0, std::polar(1.0, kPi / 4.0)}};
}

/// Looks up a named target (case-insensitive; accepts common aliases).
inline std::optional<TargetGate> by_name(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    if (key == "not" || key == "x") return not_gate();
    if (key == "hadamard" || key == "h") return hadamard();
    if (key == "phase" || key == "s") return phase();
    if (key == "t" || key == "pi8" || key == "pi/8") return pi_over_8();
    return std::nullopt;
}

}  // namespace targets

struct CatalogEntry {
    TargetGate target;
    PulseSequence sequence;
    double claimed_fidelity = 0.0;
};

/// The four published sequences with their quoted fidelities.
inline std::vector<CatalogEntry> catalog() {
    return {
        {targets::not_gate(), {{0.423, 0.680, 0.236, 0.222}}, 0.99999999990},
        {targets::hadamard(), {{0.331, 0.783, 0.300, 0.926, 0.174, 0.851, 0.347}}, 0.99999999791},
        {targets::phase(), {{0.827, 0.102, 0.287, 0.777}}, 0.99999999993},
        {targets::pi_over_8(), {{0.788, 0.514, 0.788}}, 0.99999999996},
    };
}

enum class FidelityMode { magnitude, phase_sensitive };

inline double infidelity(const FidelityReport &f, FidelityMode mode) {
    return 1.0 - (mode == FidelityMode::magnitude ? f.magnitude : f.phase_sensitive);
}

struct SynthesisConfig {
    int restarts = 100;
    NelderMeadOptions local{};
    double tolerance = 1e-9;  // converged iff best infidelity <= tolerance
    FidelityMode mode = FidelityMode::magnitude;
    int workers = 1;
    // Coordinates this close to 0 or pi/2 are tried exactly on the bound.
    double snap_distance = 1e-6;
};

struct SynthesisResult {
    PulseSequence sequence;
    FidelityReport fidelity;
    double infidelity = 1.0;  // objective value under the configured mode
    std::int64_t evaluations = 0;
    int restarts_used = 0;
    bool converged = false;
};

namespace detail {

inline constexpr Interval kBetaBox{0.0, kBetaMax};

struct LocalRun {
    std::vector<double> betas;
    double value = 1.0;
    std::int64_t evaluations = 0;
};

inline LocalRun local_search(const Unitary2 &target, std::span<const double> start, const SynthesisConfig &config,
                             const NelderMeadOptions &options) {
    auto objective = [&](std::span<const double> betas) {
        return infidelity(fidelity(compose(betas), target), config.mode);
    };
    NelderMeadResult nm = nelder_mead(objective, start, kBetaBox, options);
    LocalRun run{nm.x, nm.value, nm.evaluations};

    for (auto &b : run.betas) {
        for (double bound : {kBetaBox.lower, kBetaBox.upper}) {
            if (b != bound && std::abs(b - bound) <= config.snap_distance) {
                const double saved = b;
                b = bound;
                const double value = objective(run.betas);
                ++run.evaluations;
                if (value <= run.value) {
                    run.value = value;
                } else {
                    b = saved;
                }
            }
        }
    }
    return run;
}

inline std::vector<double> random_start(std::uint64_t seed, int restart, std::size_t length) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 gen(seq);
    std::uniform_real_distribution<double> dist(kBetaBox.lower, kBetaBox.upper);
    std::vector<double> x(length);
    for (auto &v : x) v = dist(gen);
    return x;
}

inline SynthesisResult finish(const Unitary2 &target, std::vector<double> betas, double value,
                              std::int64_t evaluations, int restarts_used, const SynthesisConfig &config) {
    SynthesisResult r;
    r.sequence.betas = std::move(betas);
    r.fidelity = fidelity(compose(std::span<const double>(r.sequence.betas)), target);
    r.infidelity = value;
    r.evaluations = evaluations;
    r.restarts_used = restarts_used;
    r.converged = value <= config.tolerance;
    return r;
}

}  // namespace detail

/// Multi-start Nelder-Mead over [0, pi/2]^length. Restarts are consumed in
/// index order and the search stops at the first restart that converges;
/// the best restart (lowest index on ties) is returned. The result depends
/// only on (target, length, config, rng_seed), not on config.workers.
inline SynthesisResult synthesize(const TargetGate &target, int length, const SynthesisConfig &config,
                                  std::uint64_t rng_seed) {
    if (length < 1) {
        throw DomainError("synthesize: length must be >= 1");
    }
    if (config.restarts < 1) {
        throw DomainError("synthesize: restarts must be >= 1");
    }
    target.validate();
    const auto n = static_cast<std::size_t>(length);
    const int workers = std::max(1, config.workers);

    std::vector<detail::LocalRun> runs(static_cast<std::size_t>(config.restarts));
    auto run_one = [&](int i) {
        const std::vector<double> start = detail::random_start(rng_seed, i, n);
        runs[static_cast<std::size_t>(i)] = detail::local_search(target.matrix, start, config, config.local);
    };

    int best = -1;
    int used = 0;
    std::int64_t evaluations = 0;
    for (int batch = 0; batch < config.restarts && !(best >= 0 && runs[best].value <= config.tolerance);
         batch += workers) {
        const int end = std::min(config.restarts, batch + workers);
        if (workers == 1) {
            run_one(batch);
        } else {
            std::vector<std::jthread> pool;
            for (int i = batch; i < end; ++i) pool.emplace_back(run_one, i);
        }
        for (int i = batch; i < end; ++i) {
            const auto &run = runs[static_cast<std::size_t>(i)];
            ++used;
            evaluations += run.evaluations;
            if (best < 0 || run.value < runs[static_cast<std::size_t>(best)].value) best = i;
            if (run.value <= config.tolerance) break;
        }
    }
    const auto &winner = runs[static_cast<std::size_t>(best)];
    return detail::finish(target.matrix, winner.betas, winner.value, evaluations, used, config);
}

/// Single local search seeded at an existing sequence.
inline SynthesisResult refine(const TargetGate &target, const PulseSequence &seed, const SynthesisConfig &config,
                              double initial_step = 1e-3) {
    target.validate();
    seed.validate();
    if (seed.betas.empty()) {
        throw DomainError("refine: seed sequence is empty");
    }
    NelderMeadOptions options = config.local;
    options.initial_step = initial_step;
    const detail::LocalRun run = detail::local_search(target.matrix, seed.betas, config, options);
    return detail::finish(target.matrix, run.betas, run.value, run.evaluations, 1, config);
}

/// Tries lengths 1..max_length and returns the shortest converged result,
/// or the best result at max_length when none converges.
inline SynthesisResult synthesize_shortest(const TargetGate &target, int max_length, const SynthesisConfig &config,
                                           std::uint64_t rng_seed) {
    if (max_length < 1) {
        throw DomainError("synthesize_shortest: max_length must be >= 1");
    }
    SynthesisResult result;
    for (int length = 1; length <= max_length; ++length) {
        result = synthesize(target, length, config, rng_seed);
        if (result.converged) break;
    }
    return result;
}

/// max-norm of [U_b1, U_b2].
inline double noncommutativity_witness(double b1, double b2) {
    return commutator(analytic_gate(b1), analytic_gate(b2)).max_abs();
}

}  // namespace holonomic
