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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace holonomic {

using complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr complex kI{0.0, 1.0};

/// Raised when an argument lies outside the domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a numerical result fails an internal consistency check.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

/// A pure one-qubit state vector (amplitudes of |0> and |1>).
using Spinor = std::array<complex, 2>;

inline complex inner(const Spinor &bra, const Spinor &ket) {
    return std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1];
}

inline double norm(const Spinor &s) {
    return std::sqrt(std::norm(s[0]) + std::norm(s[1]));
}

/// A 2x2 complex matrix stored row-major as four explicit entries.
///
/// Used for unitaries (propagators, gates, targets) and for Hermitian
/// operators such as Hamiltonians and invariants; the name refers to its
/// primary role.
class Unitary2 {
   public:
    constexpr Unitary2() = default;
    constexpr Unitary2(complex a00, complex a01, complex a10, complex a11) : m_{a00, a01, a10, a11} {}

    static constexpr Unitary2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Unitary2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

    constexpr complex operator()(int row, int col) const { return m_[2 * row + col]; }
    constexpr complex &operator()(int row, int col) { return m_[2 * row + col]; }

    constexpr const std::array<complex, 4> &entries() const { return m_; }

    Unitary2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
    }
    complex trace() const { return m_[0] + m_[3]; }
    complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    /// Largest entry magnitude.
    double max_abs() const {
        double r = 0.0;
        for (const auto &e : m_) {
            r = std::max(r, std::abs(e));
        }
        return r;
    }

    Unitary2 &operator+=(const Unitary2 &o) {
        for (int k = 0; k < 4; ++k) m_[k] += o.m_[k];
        return *this;
    }
    Unitary2 &operator-=(const Unitary2 &o) {
        for (int k = 0; k < 4; ++k) m_[k] -= o.m_[k];
        return *this;
    }
    Unitary2 &operator*=(complex s) {
        for (auto &e : m_) e *= s;
        return *this;
    }

    friend Unitary2 operator+(Unitary2 a, const Unitary2 &b) { return a += b; }
    friend Unitary2 operator-(Unitary2 a, const Unitary2 &b) { return a -= b; }
    friend Unitary2 operator-(Unitary2 a) { return a *= -1.0; }
    friend Unitary2 operator*(Unitary2 a, complex s) { return a *= s; }
    friend Unitary2 operator*(complex s, Unitary2 a) { return a *= s; }
    friend Unitary2 operator*(double s, Unitary2 a) { return a *= complex{s, 0.0}; }

    friend Unitary2 operator*(const Unitary2 &a, const Unitary2 &b) {
        return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
                a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
    }

    friend Spinor operator*(const Unitary2 &a, const Spinor &v) {
        return {a.m_[0] * v[0] + a.m_[1] * v[1], a.m_[2] * v[0] + a.m_[3] * v[1]};
    }

    friend bool operator==(const Unitary2 &, const Unitary2 &) = default;

   private:
    std::array<complex, 4> m_{};
};

/// max_ij |a_ij - b_ij|
inline double max_abs_diff(const Unitary2 &a, const Unitary2 &b) { return (a - b).max_abs(); }

/// max_ij |(U^dagger U - I)_ij|
inline double unitarity_defect(const Unitary2 &u) { return max_abs_diff(u.adjoint() * u, Unitary2::identity()); }

inline bool is_unitary(const Unitary2 &u, double tol = kUnitarityTolerance) { return unitarity_defect(u) <= tol; }

inline Unitary2 commutator(const Unitary2 &a, const Unitary2 &b) { return a * b - b * a; }

/// |ket><bra|
inline Unitary2 outer(const Spinor &ket, const Spinor &bra) {
    return {ket[0] * std::conj(bra[0]), ket[0] * std::conj(bra[1]), ket[1] * std::conj(bra[0]),
            ket[1] * std::conj(bra[1])};
}

enum class Axis { x, y, z };

inline Unitary2 pauli(Axis axis) {
    switch (axis) {
        case Axis::x:
            return {0.0, 1.0, 1.0, 0.0};
        case Axis::y:
            return {0.0, -kI, kI, 0.0};
        case Axis::z:
            return {1.0, 0.0, 0.0, -1.0};
    }
    throw DomainError("pauli: invalid axis");
}

/// v.x sigma_x + v.y sigma_y + v.z sigma_z
inline Unitary2 pauli_vector(const Vec3 &v) { return {v.z, complex{v.x, -v.y}, complex{v.x, v.y}, -v.z}; }

/// exp(i * angle * (n . sigma)) for the unit vector n along `axis`, evaluated
/// in closed form as cos(angle) I + i sin(angle) (n . sigma).
inline Unitary2 su2_exp(double angle, const Vec3 &axis) {
    const double len = axis.norm();
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw DomainError("su2_exp: axis must have nonzero finite norm");
    }
    const Vec3 n{axis.x / len, axis.y / len, axis.z / len};
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {complex{c, s * n.z}, complex{s * n.y, s * n.x}, complex{-s * n.y, s * n.x}, complex{c, -s * n.z}};
}

struct FidelityReport {
    double magnitude = 0.0;        // |tr(u^dagger v)| / 2
    double phase_sensitive = 0.0;  // Re tr(u^dagger v) / 2
    double relative_phase = 0.0;   // arg tr(u^dagger v)
};

/// Normalized trace overlap tr(u^dagger v) / tr(v^dagger v) for one qubit.
inline FidelityReport fidelity(const Unitary2 &u, const Unitary2 &v) {
    // tr(u^dagger v) without forming the product.
    const auto &a = u.entries();
    const auto &b = v.entries();
    complex tr{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        tr += std::conj(a[k]) * b[k];
    }
    return {std::abs(tr) / 2.0, tr.real() / 2.0, std::arg(tr)};
}

struct BlochPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm_squared() const { return x * x + y * y + z * z; }
};

inline constexpr double kStateNormTolerance = 1e-10;

/// Pauli expectation values of a normalized pure state.
inline BlochPoint bloch_of(const Spinor &state) {
    const double n2 = std::norm(state[0]) + std::norm(state[1]);
    if (!(std::abs(n2 - 1.0) <= kStateNormTolerance)) {
        throw DomainError("bloch_of: state is not normalized");
    }
    const complex cross = std::conj(state[0]) * state[1];
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(state[0]) - std::norm(state[1])};
}

/// One eigenpair of a 2x2 unitary: U v = e^{i phase} v, phase in [0, 2pi).
struct EigenPair {
    double phase = 0.0;
    Spinor vector{};
};

/// Wraps an angle into [0, 2pi).
inline double wrap_phase(double a) {
    double r = std::fmod(a, 2.0 * kPi);
    if (r < 0.0) r += 2.0 * kPi;
    if (r >= 2.0 * kPi) r = 0.0;
    return r;
}

/// Shortest distance between two angles on the circle.
inline double circular_distance(double a, double b) {
    const double d = wrap_phase(a - b);
    return std::min(d, 2.0 * kPi - d);
}

/// Eigen-decomposition of a 2x2 unitary (normal) matrix. The second
/// eigenvector is the orthogonal complement of the first, so the pair is
/// orthonormal even when the eigenvalues are (nearly) degenerate.
inline std::array<EigenPair, 2> eigen_decompose(const Unitary2 &u) {
    const complex half_tr = u.trace() / 2.0;
    const complex disc = std::sqrt(half_tr * half_tr - u.det());
    const complex mu = half_tr + disc;

    // Null vector of (U - mu I); take whichever row gives the larger vector.
    Spinor a{u(0, 1), mu - u(0, 0)};
    Spinor b{mu - u(1, 1), u(1, 0)};
    Spinor v = norm(a) >= norm(b) ? a : b;
    const double scale = norm(v);
    const double ref = std::max(1.0, u.max_abs());
    if (scale <= 1e-14 * ref) {
        // U is (numerically) a multiple of the identity or already diagonal.
        v = std::abs(u(0, 0) - mu) <= std::abs(u(1, 1) - mu) ? Spinor{1.0, 0.0} : Spinor{0.0, 1.0};
    } else {
        v = {v[0] / scale, v[1] / scale};
    }
    const Spinor w{-std::conj(v[1]), std::conj(v[0])};
    return {EigenPair{wrap_phase(std::arg(inner(v, u * v))), v}, EigenPair{wrap_phase(std::arg(inner(w, u * w))), w}};
}

}  // namespace holonomic
