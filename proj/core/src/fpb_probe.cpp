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

#include "fpbqkd/fpb_probe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fpbqkd {
namespace {

constexpr double kProbabilityTolerance = 1e-9;

void require_probe_domain(double p_e, const char* what) {
  if (!(p_e >= 0.0 && p_e <= 0.5)) {
    throw std::invalid_argument(std::string(what) + ": p_e = " + std::to_string(p_e) +
                                " is outside [0, 0.5]");
  }
}

void require_distribution(const std::array<double, 2>& p, const char* what) {
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw std::invalid_argument(std::string(what) + ": probability outside [0, 1]");
    }
  }
  if (std::abs(p[0] + p[1] - 1.0) > kProbabilityTolerance) {
    throw std::invalid_argument(std::string(what) + ": probabilities do not sum to 1");
  }
}

double log2_collision(const std::array<double, 2>& p) { return std::log2(p[0] * p[0] + p[1] * p[1]); }

}  // namespace

ProbeParams::ProbeParams(double p_e)
    : p_e_(p_e), c_(0.0), s_(0.0) {
  require_probe_domain(p_e, "ProbeParams");
  c_ = std::sqrt(1.0 - 2.0 * p_e);
  s_ = std::sqrt(2.0 * p_e);
}

Unitary2 fpb_frame() { return hwp_rotation(std::numbers::pi / 8.0); }

FpbBasis fpb_basis() {
  const Unitary2 r = fpb_frame();
  const Qubit ket0{r(0, 0), r(1, 0)};
  const Qubit ket1{r(0, 1), r(1, 1)};
  return {ket0, ket1, ket0, ket1};
}

Qubit to_physical(const Qubit& fpb_coords) { return apply(fpb_frame(), fpb_coords); }

Qubit fpb_plus() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {h, h};
}

Qubit fpb_minus() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {h, -h};
}

Qubit probe_input(const ProbeParams& p) {
  const double h = std::numbers::sqrt2 / 2.0;
  return {h * (p.c() + p.s()), h * (p.c() - p.s())};
}

Unitary4 attack_unitary() {
  const Unitary2 r = fpb_frame();
  const Unitary4 frame = kron(r, r);
  // pcnot() is the standard CNOT with the high (polarization) bit as control.
  return frame * pcnot() * frame.adjoint();
}

TargetOutputs target_outputs(const ProbeParams& p) {
  const Qubit plus = fpb_plus();
  const Qubit minus = fpb_minus();
  const double err = p.s() / std::numbers::sqrt2;
  const double c = p.c();
  return {
      {c * plus.amp0 + err * minus.amp0, c * plus.amp1 + err * minus.amp1},
      {c * plus.amp0 - err * minus.amp0, c * plus.amp1 - err * minus.amp1},
      {err * minus.amp0, err * minus.amp1},
  };
}

int eve_bit(EveOutcome outcome, Basis /*bob_basis*/) {
  return outcome == EveOutcome::kDPlus ? 0 : 1;
}

int eve_decide(const Qubit& post_probe_qubit, Basis bob_basis, RandomStream& rng) {
  // d+ = |0>, d- = |1> in FPB coordinates.
  const std::array<Qubit, 2> receiver{Qubit{1.0, 0.0}, Qubit{0.0, 1.0}};
  const auto fired = measure(post_probe_qubit.normalized(), receiver, rng);
  return eve_bit(fired.index == 0 ? EveOutcome::kDPlus : EveOutcome::kDMinus, bob_basis);
}

double eve_conditional_error(double p_e) {
  require_probe_domain(p_e, "eve_conditional_error");
  const double root = std::sqrt(std::max(0.0, 4.0 * p_e * (1.0 - 2.0 * p_e)));
  return 0.5 * (1.0 - root / (1.0 - p_e));
}

double renyi_information(double p_e) {
  require_probe_domain(p_e, "renyi_information");
  const double one_minus = 1.0 - p_e;
  return std::log2(1.0 + 4.0 * p_e * (1.0 - 2.0 * p_e) / (one_minus * one_minus));
}

double renyi_from_distribution(const std::array<double, 2>& p_b,
                               const std::array<double, 2>& p_e_marginal,
                               const std::array<std::array<double, 2>, 2>& p_b_given_e) {
  require_distribution(p_b, "renyi_from_distribution (P(b))");
  require_distribution(p_e_marginal, "renyi_from_distribution (P(e))");
  require_distribution(p_b_given_e[0], "renyi_from_distribution (P(b|e=0))");
  require_distribution(p_b_given_e[1], "renyi_from_distribution (P(b|e=1))");
  double info = -log2_collision(p_b);
  for (std::size_t e = 0; e < 2; ++e) {
    if (p_e_marginal[e] > 0.0) info += p_e_marginal[e] * log2_collision(p_b_given_e[e]);
  }
  return info;
}

TwoQubitState restore_momentum(const TwoQubitState& s, const Qubit& known_momentum) {
  const Qubit ket = known_momentum.normalized();
  const Qubit orthogonal{-std::conj(ket.amp1), std::conj(ket.amp0)};
  const double stray = project_subsystem(s, Subsystem::kMomentum, orthogonal).norm_squared();
  if (stray > kDriftTolerance) {
    throw std::invalid_argument("restore_momentum: state has weight " + std::to_string(stray) +
                                " off the stated momentum outcome");
  }
  return apply(on_momentum(align_to_first(ket)), s);
}

TwoQubitState restore_momentum(const TwoQubitState& s, EveOutcome eve_outcome) {
  const FpbBasis basis = fpb_basis();
  return restore_momentum(s, eve_outcome == EveOutcome::kDPlus ? basis.d_plus : basis.d_minus);
}

FpbProbe::FpbProbe(const ProbeParams& params)
    : params_(params),
      prepare_(on_momentum(align_to_first(to_physical(probe_input(params))).adjoint())),
      attack_(attack_unitary()),
      receiver_{fpb_basis().d_plus, fpb_basis().d_minus} {}

TwoQubitState FpbProbe::prepare(const TwoQubitState& s) const {
  if (std::abs(s.momentum_probability(0) - 1.0) > kDriftTolerance) {
    throw std::invalid_argument("FpbProbe::prepare: momentum qubit must be |R>");
  }
  return apply(prepare_, s);
}

FpbProbe::Interception FpbProbe::intercept(const TwoQubitState& s, RandomStream& rng) const {
  const TwoQubitState entangled = apply(attack_, prepare(s));
  const auto fired = measure_subsystem(entangled, Subsystem::kMomentum, receiver_, rng);
  const EveOutcome outcome = fired.index == 0 ? EveOutcome::kDPlus : EveOutcome::kDMinus;
  return {restore_momentum(fired.post_state, outcome), outcome};
}

}  // namespace fpbqkd
