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

#ifndef FPBQKD_FPB_PROBE_HPP
#define FPBQKD_FPB_PROBE_HPP

// Fuchs-Peres-Brandt individual attack: a single CNOT whose computational
// basis is rotated by pi/8 from H/V, a tunable probe input, and a two-outcome
// minimum-error projective receiver on the retained probe.
//
// Qubits described as "FPB coordinates" are expanded in the rotated basis
// {|0>, |1>}; "physical coordinates" are H/V (polarization) or R/L
// (momentum). The same rotation is used for both qubits.

#include <array>

#include "fpbqkd/bb84_basis.hpp"
#include "fpbqkd/quantum_core.hpp"
#include "fpbqkd/random.hpp"

namespace fpbqkd {

/// Disturbance level p_e in [0, 1/2] with C = sqrt(1 - 2 p_e), S = sqrt(2 p_e).
class ProbeParams {
 public:
  /// Throws std::invalid_argument outside [0, 0.5].
  explicit ProbeParams(double p_e);

  double p_e() const { return p_e_; }
  double c() const { return c_; }
  double s() const { return s_; }

 private:
  double p_e_;
  double c_;
  double s_;
};

/// The rotated computational basis and Eve's receiver basis, in physical
/// coordinates. d_plus == ket0 and d_minus == ket1.
struct FpbBasis {
  Qubit ket0;
  Qubit ket1;
  Qubit d_plus;
  Qubit d_minus;
};

FpbBasis fpb_basis();

/// Columns are |0> and |1> in physical coordinates; maps FPB coordinates to
/// physical ones.
Unitary2 fpb_frame();

Qubit to_physical(const Qubit& fpb_coords);

/// |+> and |-> in FPB coordinates.
Qubit fpb_plus();
Qubit fpb_minus();

/// C|+> + S|->, in FPB coordinates.
Qubit probe_input(const ProbeParams& p);

/// CNOT in the rotated basis, polarization as control and momentum as target:
/// (R ⊗ R) CNOT (R ⊗ R)^dagger with R = fpb_frame().
Unitary4 attack_unitary();

/// Unnormalized target outputs, FPB coordinates. t_err is the zero vector at
/// p_e = 0.
struct TargetOutputs {
  Qubit t_plus;
  Qubit t_minus;
  Qubit t_err;
};

TargetOutputs target_outputs(const ProbeParams& p);

enum class EveOutcome { kDPlus = 0, kDMinus = 1 };

/// Bit Eve assigns to her receiver outcome once Bob's basis is public.
///
/// d+ pairs with T+, which the attack attaches to |H> and |+45> (bit 0);
/// d- pairs with T-, attached to |V> and |-45> (bit 1). The pairing is the same
/// in both bases.
int eve_bit(EveOutcome outcome, Basis bob_basis);

/// Measures Eve's retained probe (FPB coordinates) in {d+, d-} and returns her
/// bit guess for `bob_basis`.
int eve_decide(const Qubit& post_probe_qubit, Basis bob_basis, RandomStream& rng);

/// Probability that Eve's guess disagrees with Bob on an error-free sift.
double eve_conditional_error(double p_e);

/// Closed-form Rényi information (bits) Eve holds on error-free sifted bits.
double renyi_information(double p_e);

/// Order-2 Rényi information, -log2 sum_b P(b)^2 + sum_e P(e) log2 sum_b P(b|e)^2.
/// `p_b_given_e[e][b]`. Throws std::invalid_argument for non-stochastic input.
double renyi_from_distribution(const std::array<double, 2>& p_b,
                               const std::array<double, 2>& p_e_marginal,
                               const std::array<std::array<double, 2>, 2>& p_b_given_e);

/// Rotates a momentum qubit known to be `known_momentum` (physical
/// coordinates) back to |R>. Throws std::invalid_argument if `s` has weight
/// on the orthogonal momentum state.
TwoQubitState restore_momentum(const TwoQubitState& s, const Qubit& known_momentum);

/// Same, for the momentum state implied by Eve's receiver outcome.
TwoQubitState restore_momentum(const TwoQubitState& s, EveOutcome eve_outcome);

/// Eve's in-line apparatus for one disturbance level.
class FpbProbe {
 public:
  explicit FpbProbe(const ProbeParams& params);

  struct Interception {
    TwoQubitState forwarded;
    EveOutcome outcome;
  };

  /// Loads the probe onto the momentum qubit of a photon sent in |R>.
  TwoQubitState prepare(const TwoQubitState& s) const;

  /// Prepare, apply the attack CNOT, measure the momentum in {d+, d-}, then
  /// restore the momentum to |R> before forwarding.
  Interception intercept(const TwoQubitState& s, RandomStream& rng) const;

  const ProbeParams& params() const { return params_; }

 private:
  ProbeParams params_;
  Unitary4 prepare_;
  Unitary4 attack_;
  std::array<Qubit, 2> receiver_;
};

}  // namespace fpbqkd

#endif  // FPBQKD_FPB_PROBE_HPP
