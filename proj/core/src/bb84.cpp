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

#include "fpbqkd/bb84.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace fpbqkd {

std::string_view to_string(Basis b) {
  return b == Basis::kRectilinear ? "rectilinear" : "diagonal";
}

std::array<Qubit, 2> bb84_kets(Basis b) {
  if (b == Basis::kRectilinear) return {Qubit::horizontal(), Qubit::vertical()};
  return {Qubit::plus45(), Qubit::minus45()};
}

std::string_view to_string(ReceiverMode m) {
  return m == ReceiverMode::kActive ? "active" : "passive";
}

void SessionConfig::validate() const {
  if (n_intervals < 1) throw std::invalid_argument("n_intervals must be at least 1");
  if (!(p_e >= 0.0 && p_e <= 0.5)) {
    throw std::invalid_argument("p_e = " + std::to_string(p_e) + " is outside [0, 0.5]");
  }
}

void SessionTally::add(const BitRecord& r) {
  ++intervals_;
  if (!r.sifted) return;
  ++sifted_;
  if (r.error) {
    ++errors_;
    return;
  }
  ++joint_[r.eve_guess][r.bob_bit];
}

void SessionTally::merge(const SessionTally& other) {
  intervals_ += other.intervals_;
  sifted_ += other.sifted_;
  errors_ += other.errors_;
  for (int e = 0; e < 2; ++e)
    for (int b = 0; b < 2; ++b) joint_[e][b] += other.joint_[e][b];
}

double renyi_from_counts(const std::array<std::array<std::uint64_t, 2>, 2>& joint) {
  const double n = static_cast<double>(joint[0][0] + joint[0][1] + joint[1][0] + joint[1][1]);
  if (n == 0.0) return 0.0;
  std::array<double, 2> p_b{};
  std::array<double, 2> p_e{};
  std::array<std::array<double, 2>, 2> p_b_given_e{};
  for (int e = 0; e < 2; ++e) {
    const double row = static_cast<double>(joint[e][0] + joint[e][1]);
    p_e[e] = row / n;
    if (row == 0.0) {
      p_b_given_e[e] = {1.0, 0.0};
    } else {
      p_b_given_e[e] = {joint[e][0] / row, joint[e][1] / row};
    }
  }
  p_b[0] = (joint[0][0] + joint[1][0]) / n;
  p_b[1] = 1.0 - p_b[0];
  p_e[1] = 1.0 - p_e[0];
  return std::max(0.0, renyi_from_distribution(p_b, p_e, p_b_given_e));
}

SessionStats SessionTally::finalize(const SessionConfig& cfg) const {
  SessionStats st;
  st.n_intervals = intervals_;
  st.n_sift = sifted_;
  st.n_errors = errors_;
  st.n_clean = sifted_ - errors_;
  if (sifted_ > 0) st.qber_emp = static_cast<double>(errors_) / static_cast<double>(sifted_);
  if (st.n_clean > 0) {
    const auto wrong = joint_[0][1] + joint_[1][0];
    st.eve_err_emp = static_cast<double>(wrong) / static_cast<double>(st.n_clean);
  }
  st.renyi_emp = renyi_from_counts(joint_);
  if (cfg.attack_enabled) {
    st.qber_analytic = cfg.p_e;
    st.renyi_analytic = renyi_information(cfg.p_e);
    st.eve_err_analytic = eve_conditional_error(cfg.p_e);
  } else {
    st.qber_analytic = 0.0;
    st.renyi_analytic = 0.0;
    st.eve_err_analytic = 0.5;
  }
  return st;
}

Transmission alice_transmit(RandomStream& rng, bool momentum_defense) {
  const Basis basis = rng.bit() == 0 ? Basis::kRectilinear : Basis::kDiagonal;
  const int bit = rng.bit();
  Qubit momentum = Qubit::right();
  if (momentum_defense && rng.bit() == 1) momentum = Qubit::left();
  return {basis, bit, TwoQubitState::product(bb84_polarization(basis, bit), momentum)};
}

TwoQubitState eve_collapse_momentum(const TwoQubitState& s, RandomStream& rng) {
  const std::array<Qubit, 2> rl{Qubit::right(), Qubit::left()};
  const auto fired = measure_subsystem(s, Subsystem::kMomentum, rl, rng);
  return restore_momentum(fired.post_state, rl[fired.index]);
}

BobResult bob_measure(const TwoQubitState& s, ReceiverMode mode, RandomStream& rng) {
  Basis basis = Basis::kRectilinear;
  if (mode == ReceiverMode::kActive) {
    basis = rng.bit() == 0 ? Basis::kRectilinear : Basis::kDiagonal;
  } else {
    // 50/50 splitter: transmitted port feeds the H/V analyzer, reflected the
    // +-45 analyzer.
    basis = rng.uniform() < 0.5 ? Basis::kRectilinear : Basis::kDiagonal;
  }
  const auto kets = bb84_kets(basis);
  const auto fired = measure_subsystem(s, Subsystem::kPolarization, kets, rng);
  return {basis, static_cast<int>(fired.index)};
}

BitRecord run_interval(const SessionConfig& cfg, const FpbProbe* probe, std::uint64_t index) {
  RandomStream rng = RandomStream::substream(cfg.seed, index);
  const Transmission sent = alice_transmit(rng, cfg.momentum_defense);

  TwoQubitState in_flight = sent.state;
  std::optional<EveOutcome> eve;
  if (cfg.attack_enabled && probe != nullptr) {
    if (cfg.momentum_defense) in_flight = eve_collapse_momentum(in_flight, rng);
    // Eve measures immediately; her outcome is only turned into a bit once
    // Bob's basis is public.
    const auto hit = probe->intercept(in_flight, rng);
    in_flight = hit.forwarded;
    eve = hit.outcome;
  }

  const BobResult bob = bob_measure(in_flight, cfg.receiver_mode, rng);

  BitRecord r;
  r.alice_basis = sent.basis;
  r.alice_bit = sent.bit;
  r.bob_basis = bob.basis;
  r.bob_bit = bob.bit;
  r.eve_guess = eve ? eve_bit(*eve, bob.basis) : rng.bit();
  r.sifted = sent.basis == bob.basis;
  r.error = r.sifted && bob.bit != sent.bit;
  return r;
}

namespace {

std::optional<FpbProbe> make_probe(const SessionConfig& cfg) {
  if (!cfg.attack_enabled) return std::nullopt;
  return FpbProbe(ProbeParams(cfg.p_e));
}

}  // namespace

SessionResult run_session(const SessionConfig& cfg) {
  cfg.validate();
  const auto probe = make_probe(cfg);
  SessionResult out;
  out.records.reserve(cfg.n_intervals);
  SessionTally tally;
  for (std::uint64_t i = 0; i < cfg.n_intervals; ++i) {
    out.records.push_back(run_interval(cfg, probe ? &*probe : nullptr, i));
    tally.add(out.records.back());
  }
  out.stats = tally.finalize(cfg);
  return out;
}

SessionStats run_session_stats(const SessionConfig& cfg) {
  cfg.validate();
  const auto probe = make_probe(cfg);
  SessionTally tally;
  for (std::uint64_t i = 0; i < cfg.n_intervals; ++i) {
    tally.add(run_interval(cfg, probe ? &*probe : nullptr, i));
  }
  return tally.finalize(cfg);
}

}  // namespace fpbqkd
