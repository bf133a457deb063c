// Copyright 2026 The fpbqkd Authors
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

#ifndef FPBQKD_QUANTUM_CORE_HPP
#define FPBQKD_QUANTUM_CORE_HPP

// State-vector algebra for a single photon carrying a polarization qubit and a
// momentum (beam-position) qubit.
//
// Amplitude ordering is (HR, HL, VR, VL): polarization is the high bit with
// H = 0, V = 1; momentum is the low bit with R = 0, L = 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "fpbqkd/random.hpp"

namespace fpbqkd {

using Complex = std::complex<double>;

/// Normalization tolerance for constructed states and unitarity checks.
inline constexpr double kStateTolerance = 1e-12;
/// Allowed norm drift from gate application before it counts as a bug.
inline constexpr double kDriftTolerance = 1e-9;

struct Qubit {
  Complex amp0{1.0, 0.0};
  Complex amp1{0.0, 0.0};

  static Qubit horizontal() { return {1.0, 0.0}; }
  static Qubit vertical() { return {0.0, 1.0}; }
  static Qubit plus45();
  static Qubit minus45();
  static Qubit right() { return {1.0, 0.0}; }
  static Qubit left() { return {0.0, 1.0}; }

  double norm_squared() const;
  /// Throws std::invalid_argument for the zero vector.
  Qubit normalized() const;
};

/// <a|b>
Complex inner(const Qubit& a, const Qubit& b);

enum AmplitudeIndex : std::size_t { kHR = 0, kHL = 1, kVR = 2, kVL = 3 };

class TwoQubitState {
 public:
  /// |HR>
  TwoQubitState() = default;
  explicit TwoQubitState(const std::array<Complex, 4>& amps) : amps_(amps) {}

  static TwoQubitState product(const Qubit& polarization, const Qubit& momentum);
  static TwoQubitState basis_state(std::size_t index);

  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  const std::array<Complex, 4>& amplitudes() const { return amps_; }

  double norm_squared() const;
  TwoQubitState normalized() const;

  /// Probability that a momentum measurement in R/L yields R (0) or L (1).
  double momentum_probability(int outcome) const;
  /// Probability that a polarization measurement in H/V yields H (0) or V (1).
  double polarization_probability(int outcome) const;

 private:
  std::array<Complex, 4> amps_{Complex{1.0, 0.0}, {}, {}, {}};
};

Complex inner(const TwoQubitState& a, const TwoQubitState& b);

/// Dense N x N complex matrix, row-major.
template <std::size_t N>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return m_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_[r * N + c]; }

  SquareMatrix adjoint() const {
    SquareMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t c = 0; c < N; ++c) out(r, c) += a(r, k) * b(k, c);
    return out;
  }

  /// Largest entrywise modulus of (this - other).
  double max_abs_diff(const SquareMatrix& other) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) worst = std::max(worst, std::abs(m_[i] - other.m_[i]));
    return worst;
  }

  /// U^dagger U == I entrywise within `tol`.
  bool is_unitary(double tol = kStateTolerance) const {
    return (adjoint() * *this).max_abs_diff(identity()) <= tol;
  }

 private:
  std::array<Complex, N * N> m_{};
};

using Unitary2 = SquareMatrix<2>;
using Unitary4 = SquareMatrix<4>;

/// Half-wave-plate style real rotation [[cos, -sin], [sin, cos]] on (H, V).
/// Throws std::invalid_argument for non-finite angles.
Unitary2 hwp_rotation(double theta);

/// Unitary taking `ket` (normalized) to the first basis vector, e.g. |H> or |R>.
Unitary2 align_to_first(const Qubit& ket);

/// Polarization-controlled NOT: V flips the momentum qubit (VR <-> VL).
Unitary4 pcnot();
/// Momentum-controlled NOT: L flips the polarization qubit (HL <-> VL).
Unitary4 mcnot();
/// Qubit exchange built as the M-CNOT, P-CNOT, M-CNOT cascade.
Unitary4 swap_gate();

/// polarization ⊗ momentum
Unitary4 kron(const Unitary2& polarization, const Unitary2& momentum);
Unitary4 on_polarization(const Unitary2& u);
Unitary4 on_momentum(const Unitary2& u);

Qubit apply(const Unitary2& u, const Qubit& q);

/// Matrix-vector product followed by renormalization.
///
/// Throws std::invalid_argument if `s` is not normalized and std::logic_error
/// if the product drifts from unit norm by more than kDriftTolerance (which
/// only happens for a non-unitary `u`).
TwoQubitState apply(const Unitary4& u, const TwoQubitState& s);

template <typename State>
struct MeasurementOutcome {
  std::size_t index = 0;
  State post_state;
};

/// Born-rule projective measurement in a complete orthonormal basis.
/// The post-measurement state is the basis vector that fired.
MeasurementOutcome<TwoQubitState> measure(const TwoQubitState& s,
                                          std::span<const TwoQubitState, 4> basis,
                                          RandomStream& rng);
MeasurementOutcome<Qubit> measure(const Qubit& q, std::span<const Qubit, 2> basis,
                                  RandomStream& rng);

enum class Subsystem { kPolarization, kMomentum };

/// Measures one qubit of the photon in `basis`, leaving the other untouched.
/// post_state is the normalized projection of `s` onto basis[index] on that
/// subsystem.
MeasurementOutcome<TwoQubitState> measure_subsystem(const TwoQubitState& s, Subsystem which,
                                                    std::span<const Qubit, 2> basis,
                                                    RandomStream& rng);

/// Reduced state of the other subsystem after projecting `which` onto `ket`
/// (unnormalized; its squared norm is the outcome probability).
Qubit project_subsystem(const TwoQubitState& s, Subsystem which, const Qubit& ket);

/// |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const Qubit& a, const Qubit& b, double tol = kStateTolerance);
bool equal_up_to_global_phase(const TwoQubitState& a, const TwoQubitState& b,
                              double tol = kStateTolerance);

}  // namespace fpbqkd

#endif  // FPBQKD_QUANTUM_CORE_HPP
