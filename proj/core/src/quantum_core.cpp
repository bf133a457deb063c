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

#include "fpbqkd/quantum_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fpbqkd {
namespace {

void require_normalized(double norm_squared, const char* what) {
  if (!(std::abs(norm_squared - 1.0) <= kDriftTolerance)) {
    throw std::invalid_argument(std::string(what) + ": state is not normalized (|psi|^2 = " +
                                std::to_string(norm_squared) + ")");
  }
}

// Index of the Born-rule outcome selected by a uniform draw. Outcomes with
// zero probability are never returned.
template <std::size_t N>
std::size_t sample_outcome(const std::array<double, N>& probs, RandomStream& rng) {
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::size_t last_possible = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last_possible = i;
    if (u < cumulative) return i;
  }
  // Rounding left the cumulative sum a hair below u.
  return last_possible;
}

std::size_t flat_index(Subsystem which, std::size_t measured, std::size_t other) {
  return which == Subsystem::kPolarization ? 2 * measured + other : 2 * other + measured;
}

}  // namespace

Qubit Qubit::plus45() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {h, h};
}

Qubit Qubit::minus45() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {h, -h};
}

double Qubit::norm_squared() const { return std::norm(amp0) + std::norm(amp1); }

Qubit Qubit::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero qubit");
  return {amp0 / n, amp1 / n};
}

Complex inner(const Qubit& a, const Qubit& b) {
  return std::conj(a.amp0) * b.amp0 + std::conj(a.amp1) * b.amp1;
}

TwoQubitState TwoQubitState::product(const Qubit& polarization, const Qubit& momentum) {
  return TwoQubitState({polarization.amp0 * momentum.amp0, polarization.amp0 * momentum.amp1,
                        polarization.amp1 * momentum.amp0, polarization.amp1 * momentum.amp1});
}

TwoQubitState TwoQubitState::basis_state(std::size_t index) {
  if (index >= 4) throw std::invalid_argument("basis index out of range");
  std::array<Complex, 4> amps{};
  amps[index] = 1.0;
  return TwoQubitState(amps);
}

double TwoQubitState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

TwoQubitState TwoQubitState::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero state");
  auto amps = amps_;
  for (auto& a : amps) a /= n;
  return TwoQubitState(amps);
}

double TwoQubitState::momentum_probability(int outcome) const {
  const std::size_t m = outcome == 0 ? 0 : 1;
  return std::norm(amps_[m]) + std::norm(amps_[2 + m]);
}

double TwoQubitState::polarization_probability(int outcome) const {
  const std::size_t p = outcome == 0 ? 0 : 1;
  return std::norm(amps_[2 * p]) + std::norm(amps_[2 * p + 1]);
}

Complex inner(const TwoQubitState& a, const TwoQubitState& b) {
  Complex total{};
  for (std::size_t i = 0; i < 4; ++i) total += std::conj(a[i]) * b[i];
  return total;
}

Unitary2 hwp_rotation(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("hwp_rotation: angle must be finite");
  Unitary2 u;
  u(0, 0) = std::cos(theta);
  u(0, 1) = -std::sin(theta);
  u(1, 0) = std::sin(theta);
  u(1, 1) = std::cos(theta);
  return u;
}

Unitary2 align_to_first(const Qubit& ket) {
  require_normalized(ket.norm_squared(), "align_to_first");
  // Rows are <ket| and its orthogonal complement.
  Unitary2 u;
  u(0, 0) = std::conj(ket.amp0);
  u(0, 1) = std::conj(ket.amp1);
  u(1, 0) = -ket.amp1;
  u(1, 1) = ket.amp0;
  return u;
}

Unitary4 pcnot() {
  Unitary4 u;
  u(kHR, kHR) = 1.0;
  u(kHL, kHL) = 1.0;
  u(kVR, kVL) = 1.0;
  u(kVL, kVR) = 1.0;
  return u;
}

Unitary4 mcnot() {
  Unitary4 u;
  u(kHR, kHR) = 1.0;
  u(kVR, kVR) = 1.0;
  u(kHL, kVL) = 1.0;
  u(kVL, kHL) = 1.0;
  return u;
}

Unitary4 swap_gate() { return mcnot() * pcnot() * mcnot(); }

Unitary4 kron(const Unitary2& polarization, const Unitary2& momentum) {
  Unitary4 u;
  for (std::size_t pr = 0; pr < 2; ++pr)
    for (std::size_t mr = 0; mr < 2; ++mr)
      for (std::size_t pc = 0; pc < 2; ++pc)
        for (std::size_t mc = 0; mc < 2; ++mc)
          u(2 * pr + mr, 2 * pc + mc) = polarization(pr, pc) * momentum(mr, mc);
  return u;
}

Unitary4 on_polarization(const Unitary2& u) { return kron(u, Unitary2::identity()); }

Unitary4 on_momentum(const Unitary2& u) { return kron(Unitary2::identity(), u); }

Qubit apply(const Unitary2& u, const Qubit& q) {
  return {u(0, 0) * q.amp0 + u(0, 1) * q.amp1, u(1, 0) * q.amp0 + u(1, 1) * q.amp1};
}

TwoQubitState apply(const Unitary4& u, const TwoQubitState& s) {
  require_normalized(s.norm_squared(), "apply");
  std::array<Complex, 4> out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += u(r, c) * s[c];
  TwoQubitState result(out);
  const double drift = std::abs(result.norm_squared() - 1.0);
  if (drift > kDriftTolerance) {
    throw std::logic_error("apply: norm drifted by " + std::to_string(drift) +
                           "; gate is not unitary");
  }
  return result.normalized();
}

MeasurementOutcome<TwoQubitState> measure(const TwoQubitState& s,
                                          std::span<const TwoQubitState, 4> basis,
                                          RandomStream& rng) {
  require_normalized(s.norm_squared(), "measure");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(inner(basis[i], basis[j]) - expected) > kStateTolerance) {
        throw std::invalid_argument("measure: basis is not a complete orthonormal set");
      }
    }
  }
  std::array<double, 4> probs{};
  for (std::size_t i = 0; i < 4; ++i) probs[i] = std::norm(inner(basis[i], s));
  const std::size_t k = sample_outcome(probs, rng);
  return {k, basis[k]};
}

MeasurementOutcome<Qubit> measure(const Qubit& q, std::span<const Qubit, 2> basis,
                                  RandomStream& rng) {
  require_normalized(q.norm_squared(), "measure");
  if (std::abs(basis[0].norm_squared() - 1.0) > kStateTolerance ||
      std::abs(basis[1].norm_squared() - 1.0) > kStateTolerance ||
      std::abs(inner(basis[0], basis[1])) > kStateTolerance) {
    throw std::invalid_argument("measure: basis is not a complete orthonormal set");
  }
  const std::array<double, 2> probs{std::norm(inner(basis[0], q)), std::norm(inner(basis[1], q))};
  const std::size_t k = sample_outcome(probs, rng);
  return {k, basis[k]};
}

Qubit project_subsystem(const TwoQubitState& s, Subsystem which, const Qubit& ket) {
  Qubit rest{0.0, 0.0};
  const std::array<Complex, 2> bra{std::conj(ket.amp0), std::conj(ket.amp1)};
  for (std::size_t m = 0; m < 2; ++m) {
    rest.amp0 += bra[m] * s[flat_index(which, m, 0)];
    rest.amp1 += bra[m] * s[flat_index(which, m, 1)];
  }
  return rest;
}

MeasurementOutcome<TwoQubitState> measure_subsystem(const TwoQubitState& s, Subsystem which,
                                                    std::span<const Qubit, 2> basis,
                                                    RandomStream& rng) {
  require_normalized(s.norm_squared(), "measure_subsystem");
  if (std::abs(basis[0].norm_squared() - 1.0) > kStateTolerance ||
      std::abs(basis[1].norm_squared() - 1.0) > kStateTolerance ||
      std::abs(inner(basis[0], basis[1])) > kStateTolerance) {
    throw std::invalid_argument("measure_subsystem: basis is not a complete orthonormal set");
  }
  const std::array<Qubit, 2> rest{project_subsystem(s, which, basis[0]),
                                  project_subsystem(s, which, basis[1])};
  const std::array<double, 2> probs{rest[0].norm_squared(), rest[1].norm_squared()};
  const std::size_t k = sample_outcome(probs, rng);
  const Qubit other = rest[k].normalized();
  const TwoQubitState post = which == Subsystem::kPolarization
                                 ? TwoQubitState::product(basis[k], other)
                                 : TwoQubitState::product(other, basis[k]);
  return {k, post};
}

bool equal_up_to_global_phase(const Qubit& a, const Qubit& b, double tol) {
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

bool equal_up_to_global_phase(const TwoQubitState& a, const TwoQubitState& b, double tol) {
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

}  // namespace fpbqkd
