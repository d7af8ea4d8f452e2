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

// Rotating-field qubit drive
//
//   H(t) = 1/2 (Omega cos(wt) sx + Omega sin(wt) sy + Delta sz)
//
// together with its exact dynamical invariant
//
//   I(t) = Omega cos(wt) sx + Omega sin(wt) sy + (Delta - w) sz,
//
// the invariant's eigenbasis, the Lewis-Riesenfeld phases, and the
// one-parameter family of holonomic gates obtained when
// Omega^2 + Delta (Delta - w) = 0.
//
// Time is measured in units of 1/w; w defaults to 1.

#include <cmath>
#include <string>
#include <tuple>
#include <utility>

#include "holonomic/su2.hpp"

namespace holonomic {

struct DriveParams {
    double omega_rabi = 0.0;   // Omega
    double detuning = 0.0;     // Delta
    double omega_drive = 1.0;  // w

    double period() const { return 2.0 * kPi / omega_drive; }

    void validate() const {
        if (!(omega_drive > 0.0) || !std::isfinite(omega_drive)) {
            throw DomainError("DriveParams: omega_drive must be positive and finite");
        }
        if (!(omega_rabi >= 0.0) || !std::isfinite(omega_rabi)) {
            throw DomainError("DriveParams: omega_rabi must be nonnegative and finite");
        }
        if (!std::isfinite(detuning)) {
            throw DomainError("DriveParams: detuning must be finite");
        }
    }
};

inline constexpr double kBetaMax = kPi / 2.0;

inline void check_beta(double beta) {
    if (!(beta >= 0.0 && beta <= kBetaMax)) {
        throw DomainError("beta must lie in [0, pi/2], got " + std::to_string(beta));
    }
}

/// A holonomic gate U_beta: a drive satisfying the holonomy constraint, with
/// cos^2(beta) = Delta / w.
struct HolonomicGate {
    double beta = 0.0;
    double omega_drive = 1.0;

    void validate() const {
        check_beta(beta);
        if (!(omega_drive > 0.0) || !std::isfinite(omega_drive)) {
            throw DomainError("HolonomicGate: omega_drive must be positive and finite");
        }
    }
};

/// Pauli-vector coefficients h with H(t) = 1/2 h . sigma.
inline Vec3 hamiltonian_field(const DriveParams &p, double t) {
    const double phase = p.omega_drive * t;
    return {p.omega_rabi * std::cos(phase), p.omega_rabi * std::sin(phase), p.detuning};
}

inline Unitary2 hamiltonian(const DriveParams &p, double t) {
    return 0.5 * pauli_vector(hamiltonian_field(p, t));
}

inline Unitary2 invariant(const DriveParams &p, double t) {
    const double phase = p.omega_drive * t;
    return pauli_vector(
        {p.omega_rabi * std::cos(phase), p.omega_rabi * std::sin(phase), p.detuning - p.omega_drive});
}

/// Magnitude of the invariant's (time-independent) eigenvalues.
inline double invariant_lambda(const DriveParams &p) {
    return std::hypot(p.omega_rabi, p.detuning - p.omega_drive);
}

/// Eigenbasis of I(t). The eigenvectors have the form
/// (e^{-iwt} cos(theta), sin(theta)); only the upper component depends on t.
struct InvariantEigensystem {
    double lambda = 0.0;
    double cos_theta_plus = 0.0;
    double sin_theta_plus = 1.0;
    double cos_theta_minus = 0.0;
    double sin_theta_minus = 1.0;
    Spinor eigvec_plus{};
    Spinor eigvec_minus{};
};

namespace detail {

// Unit (cos, sin) pair proportional to (c, s).
inline std::pair<double, double> unit_pair(double c, double s) {
    const double r = std::hypot(c, s);
    return {c / r, s / r};
}

}  // namespace detail

/// cos(theta) = xi / sqrt(1 + xi^2), sin(theta) = 1 / sqrt(1 + xi^2) with
/// xi_{+-} = [(Delta - w) +- lambda] / Omega. Each branch is evaluated from
/// whichever of two equivalent ratios avoids cancellation, so the Omega -> 0+
/// limit is reached continuously. In the fully degenerate case (Omega = 0 and
/// Delta = w) the limit xi_{+-} = +-1 is used.
inline InvariantEigensystem eigensystem(const DriveParams &p, double t) {
    const double omega = p.omega_rabi;
    const double d = p.detuning - p.omega_drive;
    const double lambda = invariant_lambda(p);

    InvariantEigensystem es;
    es.lambda = lambda;
    if (lambda == 0.0) {
        const double r = 1.0 / std::sqrt(2.0);
        std::tie(es.cos_theta_plus, es.sin_theta_plus) = std::pair{r, r};
        std::tie(es.cos_theta_minus, es.sin_theta_minus) = std::pair{-r, r};
    } else {
        // xi_+ = (d + lambda) / Omega = Omega / (lambda - d)
        std::tie(es.cos_theta_plus, es.sin_theta_plus) =
            d >= 0.0 ? detail::unit_pair(d + lambda, omega) : detail::unit_pair(omega, lambda - d);
        // xi_- = (d - lambda) / Omega = -Omega / (lambda + d)
        std::tie(es.cos_theta_minus, es.sin_theta_minus) =
            d <= 0.0 ? detail::unit_pair(d - lambda, omega) : detail::unit_pair(-omega, lambda + d);
    }
    const complex rot = std::polar(1.0, -p.omega_drive * t);
    es.eigvec_plus = {rot * es.cos_theta_plus, es.sin_theta_plus};
    es.eigvec_minus = {rot * es.cos_theta_minus, es.sin_theta_minus};
    return es;
}

enum class Branch { plus, minus };

/// A value per invariant eigenbranch.
struct BranchPair {
    double plus = 0.0;
    double minus = 0.0;

    double operator[](Branch b) const { return b == Branch::plus ? plus : minus; }
    friend bool operator==(const BranchPair &, const BranchPair &) = default;
};

inline Spinor eigenvector(const InvariantEigensystem &es, Branch b) {
    return b == Branch::plus ? es.eigvec_plus : es.eigvec_minus;
}

/// Closed-form Lewis-Riesenfeld phases alpha_{+-}(t) = (w -+ lambda) t / 2.
inline BranchPair lr_phase(const DriveParams &p, double t) {
    const double lambda = invariant_lambda(p);
    return {(p.omega_drive - lambda) * t / 2.0, (p.omega_drive + lambda) * t / 2.0};
}

/// Omega^2 + Delta (Delta - w); zero exactly when the drive is holonomic.
inline double holonomy_residual(const DriveParams &p) {
    return p.omega_rabi * p.omega_rabi + p.detuning * (p.detuning - p.omega_drive);
}

/// Delta = w cos^2(beta), Omega = w cos(beta) sin(beta) (nonnegative root).
inline DriveParams params_from_beta(const HolonomicGate &g) {
    g.validate();
    const double c = std::cos(g.beta);
    const double s = std::sin(g.beta);
    return {g.omega_drive * c * s, g.omega_drive * c * c, g.omega_drive};
}

/// U_beta(T) = -exp(i pi sin(beta) [-cos(beta) sx + sin(beta) sz]).
inline Unitary2 analytic_gate(const HolonomicGate &g) {
    g.validate();
    const double s = std::sin(g.beta);
    return -su2_exp(kPi * s, {-std::cos(g.beta), 0.0, s});
}

inline Unitary2 analytic_gate(double beta) { return analytic_gate(HolonomicGate{beta, 1.0}); }

/// <phi_b(t)| H(t) |phi_b(t)>; identically zero for holonomic drives.
inline double dynamical_integrand(const DriveParams &p, double t, Branch branch) {
    const Spinor phi = eigenvector(eigensystem(p, t), branch);
    return inner(phi, hamiltonian(p, t) * phi).real();
}

/// i <phi_b(t)| d/dt |phi_b(t)>, using the analytic time derivative of the
/// eigenvector; equals w cos^2(theta_b).
inline double geometric_integrand(const DriveParams &p, double t, Branch branch) {
    const InvariantEigensystem es = eigensystem(p, t);
    const Spinor phi = eigenvector(es, branch);
    const Spinor dphi{complex{0.0, -p.omega_drive} * phi[0], 0.0};
    return (kI * inner(phi, dphi)).real();
}

}  // namespace holonomic
