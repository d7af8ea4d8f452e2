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

// Brute-force time-ordered propagation and numerical phase bookkeeping.
//
// The propagator is the ordered product of exp(-i H(t_mid) dt) over a
// uniform grid (second-order, commutator-free). Every factor is an exact
// SU(2) element, so no renormalization is ever applied.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "holonomic/model.hpp"
#include "holonomic/su2.hpp"

namespace holonomic {

inline constexpr std::int64_t kDefaultStepsPerPeriod = 10000;
inline constexpr std::int64_t kMinReportSteps = 16;
inline constexpr double kPropagationUnitarityTolerance = 1e-8;

/// exp(-i H(t) dt) for H = 1/2 h . sigma.
inline Unitary2 step_propagator(const DriveParams &p, double t, double dt) {
    const Vec3 h = hamiltonian_field(p, t);
    const double len = h.norm();
    if (len == 0.0) {
        return Unitary2::identity();
    }
    return su2_exp(-0.5 * len * dt, h);
}

/// Propagator from t0 to t1 using `steps` uniform midpoint steps.
inline Unitary2 propagate_segment(const DriveParams &p, double t0, double t1, std::int64_t steps) {
    if (steps < 1) {
        throw DomainError("propagate: steps must be >= 1");
    }
    const double dt = (t1 - t0) / static_cast<double>(steps);
    Unitary2 u = Unitary2::identity();
    for (std::int64_t k = 0; k < steps; ++k) {
        const double t_mid = t0 + (static_cast<double>(k) + 0.5) * dt;
        u = step_propagator(p, t_mid, dt) * u;
    }
    return u;
}

inline Unitary2 propagate(const DriveParams &p, double duration, std::int64_t steps) {
    p.validate();
    if (!(duration >= 0.0)) {
        throw DomainError("propagate: duration must be nonnegative");
    }
    return propagate_segment(p, 0.0, duration, steps);
}

/// Numerically integrated phases over one period, split into their
/// geometric and dynamical parts (composite trapezoid, uniform grid).
struct PhaseIntegrals {
    BranchPair alpha;
    BranchPair gamma_geometric;
    BranchPair gamma_dynamical;
    double max_integrand = 0.0;  // max_t max_branch |<phi|H|phi>|
};

inline PhaseIntegrals integrate_phases(const DriveParams &p, std::int64_t steps) {
    if (steps < kMinReportSteps) {
        throw DomainError("phase integration needs at least " + std::to_string(kMinReportSteps) + " steps");
    }
    const double period = p.period();
    const double dt = period / static_cast<double>(steps);

    PhaseIntegrals out;
    double geo[2] = {0.0, 0.0};
    double dyn[2] = {0.0, 0.0};
    for (std::int64_t j = 0; j <= steps; ++j) {
        const double t = static_cast<double>(j) * dt;
        const double weight = (j == 0 || j == steps) ? 0.5 : 1.0;
        const InvariantEigensystem es = eigensystem(p, t);
        const Unitary2 h = hamiltonian(p, t);
        for (int b = 0; b < 2; ++b) {
            const Spinor phi = b == 0 ? es.eigvec_plus : es.eigvec_minus;
            const Spinor dphi{complex{0.0, -p.omega_drive} * phi[0], 0.0};
            const double g = (kI * inner(phi, dphi)).real();
            const double e = inner(phi, h * phi).real();
            geo[b] += weight * g;
            dyn[b] += weight * e;
            out.max_integrand = std::max(out.max_integrand, std::abs(e));
        }
    }
    out.gamma_geometric = {geo[0] * dt, geo[1] * dt};
    out.gamma_dynamical = {-dyn[0] * dt, -dyn[1] * dt};
    out.alpha = {out.gamma_geometric.plus + out.gamma_dynamical.plus,
                 out.gamma_geometric.minus + out.gamma_dynamical.minus};
    return out;
}

struct EvolutionReport {
    Unitary2 propagator;
    BranchPair alpha_numeric;
    BranchPair gamma_geometric;
    BranchPair gamma_dynamical;
    double max_integrand = 0.0;
    double transitionless_defect = 0.0;
    BranchPair aa_eigenphases;  // in [0, 2pi), matched to branches by eigenvector overlap
    std::int64_t steps = 0;
};

/// Eigenphases of a one-period propagator, assigned to the invariant
/// branches by overlap of the eigenvectors with |phi_{+-}(0)>.
inline BranchPair aa_eigenphases(const Unitary2 &u, const InvariantEigensystem &es0) {
    const auto pairs = eigen_decompose(u);
    const double overlap0 = std::abs(inner(pairs[0].vector, es0.eigvec_plus));
    const double overlap1 = std::abs(inner(pairs[1].vector, es0.eigvec_plus));
    if (overlap0 >= overlap1) {
        return {pairs[0].phase, pairs[1].phase};
    }
    return {pairs[1].phase, pairs[0].phase};
}

/// Propagates over one period and collects every numerical check on it.
inline EvolutionReport full_report(const DriveParams &p, std::int64_t steps = kDefaultStepsPerPeriod) {
    p.validate();
    if (steps < kMinReportSteps) {
        throw DomainError("full_report: steps must be >= " + std::to_string(kMinReportSteps));
    }
    const double period = p.period();

    EvolutionReport r;
    r.steps = steps;
    r.propagator = propagate_segment(p, 0.0, period, steps);
    const double defect = unitarity_defect(r.propagator);
    if (!(defect <= kPropagationUnitarityTolerance)) {
        throw ConsistencyError("full_report: propagator unitarity defect " + std::to_string(defect));
    }

    const PhaseIntegrals phases = integrate_phases(p, steps);
    r.alpha_numeric = phases.alpha;
    r.gamma_geometric = phases.gamma_geometric;
    r.gamma_dynamical = phases.gamma_dynamical;
    r.max_integrand = phases.max_integrand;

    const InvariantEigensystem es0 = eigensystem(p, 0.0);
    const InvariantEigensystem es_end = eigensystem(p, period);
    const double keep_plus = std::abs(inner(es_end.eigvec_plus, r.propagator * es0.eigvec_plus));
    const double keep_minus = std::abs(inner(es_end.eigvec_minus, r.propagator * es0.eigvec_minus));
    r.transitionless_defect = 1.0 - std::min(keep_plus, keep_minus);

    r.aa_eigenphases = aa_eigenphases(r.propagator, es0);
    return r;
}

/// U(T) = sum_k e^{i alpha_k(T)} |phi_k(T)><phi_k(0)| with alpha_k integrated
/// numerically; never touches the time-ordered product.
inline Unitary2 spectral_propagator(const DriveParams &p, std::int64_t steps = kDefaultStepsPerPeriod) {
    p.validate();
    const double period = p.period();
    const PhaseIntegrals phases = integrate_phases(p, steps);
    const InvariantEigensystem es0 = eigensystem(p, 0.0);
    const InvariantEigensystem es_end = eigensystem(p, period);
    return std::polar(1.0, phases.alpha.plus) * outer(es_end.eigvec_plus, es0.eigvec_plus) +
           std::polar(1.0, phases.alpha.minus) * outer(es_end.eigvec_minus, es0.eigvec_minus);
}

/// max-norm of (I(t+h) - I(t-h)) / 2h + i [H(t), I(t)], which vanishes for an
/// exact invariant up to the O(h^2) central-difference error.
inline double invariant_residual(const DriveParams &p, double t, double h) {
    if (!(h > 0.0)) {
        throw DomainError("invariant_residual: h must be positive");
    }
    const Unitary2 derivative = (1.0 / (2.0 * h)) * (invariant(p, t + h) - invariant(p, t - h));
    return (derivative + kI * commutator(hamiltonian(p, t), invariant(p, t))).max_abs();
}

}  // namespace holonomic
