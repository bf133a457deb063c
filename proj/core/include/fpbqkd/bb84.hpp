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

#ifndef FPBQKD_BB84_HPP
#define FPBQKD_BB84_HPP

// BB84 session engine: Alice's random transmissions, the optional in-line FPB
// attack, Bob's basis selection and measurement, sifting, and statistics.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fpbqkd/bb84_basis.hpp"
#include "fpbqkd/fpb_probe.hpp"
#include "fpbqkd/quantum_core.hpp"
#include "fpbqkd/random.hpp"

namespace fpbqkd {

enum class ReceiverMode { kActive, kPassive };

std::string_view to_string(ReceiverMode m);

struct BitRecord {
  Basis alice_basis = Basis::kRectilinear;
  int alice_bit = 0;
  Basis bob_basis = Basis::kRectilinear;
  int bob_bit = 0;
  int eve_guess = 0;
  bool sifted = false;
  bool error = false;

  bool operator==(const BitRecord&) const = default;
};

struct SessionConfig {
  std::uint64_t n_intervals = 100000;
  double p_e = 0.0;
  std::uint64_t seed = 1;
  ReceiverMode receiver_mode = ReceiverMode::kActive;
  bool momentum_defense = false;
  bool attack_enabled = true;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SessionStats {
  std::uint64_t n_intervals = 0;
  std::uint64_t n_sift = 0;
  std::uint64_t n_errors = 0;
  /// Error-free sifts; the population scored for Eve.
  std::uint64_t n_clean = 0;
  double qber_emp = 0.0;
  double qber_analytic = 0.0;
  double renyi_emp = 0.0;
  double renyi_analytic = 0.0;
  double eve_err_emp = 0.0;
  double eve_err_analytic = 0.0;
};

/// Counts accumulated over intervals. Merging is associative and commutative,
/// so partial tallies from any partition of a session combine exactly.
class SessionTally {
 public:
  void add(const BitRecord& r);
  void merge(const SessionTally& other);

  std::uint64_t intervals() const { return intervals_; }
  std::uint64_t sifted() const { return sifted_; }
  std::uint64_t errors() const { return errors_; }
  /// joint(eve_guess, bob_bit) over error-free sifts.
  std::uint64_t joint(int eve, int bob) const { return joint_[eve][bob]; }

  SessionStats finalize(const SessionConfig& cfg) const;

 private:
  std::uint64_t intervals_ = 0;
  std::uint64_t sifted_ = 0;
  std::uint64_t errors_ = 0;
  std::array<std::array<std::uint64_t, 2>, 2> joint_{};
};

/// Plug-in Rényi information from joint (eve, bob) counts. A conditioning
/// value that never occurred contributes nothing. Sampling noise that would
/// push the estimate below zero is floored at zero.
double renyi_from_counts(const std::array<std::array<std::uint64_t, 2>, 2>& joint);

struct Transmission {
  Basis basis;
  int bit;
  TwoQubitState state;
};

/// Uniform basis and bit; momentum |R>, or a uniformly random R/L when
/// `momentum_defense` is set.
Transmission alice_transmit(RandomStream& rng, bool momentum_defense = false);

/// Eve's answer to a randomized momentum qubit: measure it in R/L, then rotate
/// the result to |R>. The polarization qubit is untouched.
TwoQubitState eve_collapse_momentum(const TwoQubitState& s, RandomStream& rng);

struct BobResult {
  Basis basis;
  int bit;
};

/// Uniform basis choice (explicit draw for active selection, 50/50 beam
/// splitter routing for passive) then a polarization measurement in that
/// basis. The momentum qubit is ignored.
BobResult bob_measure(const TwoQubitState& s, ReceiverMode mode, RandomStream& rng);

/// Simulates interval `index` of the session; depends only on (cfg, index).
BitRecord run_interval(const SessionConfig& cfg, const FpbProbe* probe, std::uint64_t index);

struct SessionResult {
  std::vector<BitRecord> records;
  SessionStats stats;
};

/// Runs cfg.n_intervals intervals. Deterministic for a given config.
SessionResult run_session(const SessionConfig& cfg);

/// Same statistics as run_session without keeping per-interval records.
SessionStats run_session_stats(const SessionConfig& cfg);

}  // namespace fpbqkd

#endif  // FPBQKD_BB84_HPP
