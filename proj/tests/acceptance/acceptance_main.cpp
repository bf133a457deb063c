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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fpbqkd/bb84.hpp"
#include "fpbqkd/cli/app.hpp"
#include "fpbqkd/cli/sweep.hpp"
#include "fpbqkd/fpb_probe.hpp"
#include "fpbqkd/qnd.hpp"
#include "fpbqkd/quantum_core.hpp"
#include "fpbqkd/random.hpp"
#include "stat_oracle.hpp"

namespace {

using namespace fpbqkd;

constexpr std::uint64_t kSweepSeed = 42;
constexpr std::uint64_t kIntervals = 100000;

// Upper Gaussian tails at 2, 3 and 4, from a 30-digit erfc evaluation.
constexpr std::array<double, 3> kTailOracle{0.0227501319481792072, 0.00134989803163009452665,
                                            3.16712418331199212537707567222e-5};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "\n    failed: " << what;
    }
  }
};

void report(int id, const char* title, const Verdict& v, int& failures) {
  std::printf("[%s] %d %s%s\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.str().c_str());
  if (!v.pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

const std::vector<cli::CsvRow>& sweep_rows() {
  static const std::vector<cli::CsvRow> rows = [] {
    cli::SweepSpec spec;
    spec.pe_values = cli::default_pe_grid();
    spec.trials_per_point = kIntervals;
    spec.base_seed = kSweepSeed;
    return cli::run_sweep(spec);
  }();
  return rows;
}

Verdict renyi_curve() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const auto& rows = sweep_rows();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.detail << fmt("  (sweep %.1f s)", seconds);
  for (const auto& r : rows) {
    const double target = std::log2(1.0 + 4.0 * r.pe * (1.0 - 2.0 * r.pe) /
                                              ((1.0 - r.pe) * (1.0 - r.pe)));
    v.detail << fmt("\n    pe=%.4f  qber=%.6f  renyi=%.6f", r.pe, r.qber_emp, r.renyi_emp)
             << fmt("  target=%.6f", target);
    v.require(std::abs(r.renyi_emp - target) <= 0.02, fmt("renyi at pe=%.4f", r.pe));
    v.require(std::abs(r.qber_emp - r.pe) <= 0.005, fmt("qber at pe=%.4f", r.pe));
  }
  const std::array<std::pair<double, double>, 3> anchors{{{0.0, 0.0}, {1.0 / 3.0, 1.0}, {0.5, 0.0}}};
  for (const auto& [pe, info] : anchors) {
    v.require(std::abs(renyi_information(pe) - info) <= 1e-12, fmt("anchor pe=%.4f", pe));
    for (const auto& r : rows)
      if (r.pe == pe) v.require(std::abs(r.renyi_emp - info) <= 0.02, fmt("empirical anchor %.4f", pe));
  }
  v.require(seconds < 60.0, "sweep runtime under one minute");
  return v;
}

Verdict eve_receiver() {
  Verdict v;
  for (const auto& r : sweep_rows()) {
    const double root = std::sqrt(4.0 * r.pe * (1.0 - 2.0 * r.pe));
    const double target = 0.5 * (1.0 - root / (1.0 - r.pe));
    v.detail << fmt("\n    pe=%.4f  eve_err=%.6f  target=%.6f", r.pe, r.eve_err_emp, target);
    v.require(std::abs(r.eve_err_emp - target) <= 0.01, fmt("eve_err at pe=%.4f", r.pe));
  }
  SessionConfig cfg;
  cfg.p_e = 1.0 / 3.0;
  cfg.n_intervals = kIntervals;
  cfg.seed = kSweepSeed + 3;
  const auto result = run_session(cfg);
  std::uint64_t clean = 0;
  std::uint64_t wrong = 0;
  for (const auto& rec : result.records) {
    if (!rec.sifted || rec.error) continue;
    ++clean;
    if (rec.eve_guess != rec.bob_bit) ++wrong;
  }
  v.detail << "\n    pe=1/3: " << wrong << " receiver errors over " << clean << " clean sifts";
  v.require(wrong == 0 && clean > 0, "zero receiver errors at pe=1/3");
  return v;
}

Qubit target_given_control(const TwoQubitState& out, const Qubit& control) {
  return apply(fpb_frame().adjoint(), project_subsystem(out, Subsystem::kPolarization, control));
}

double distance(const Qubit& a, const Qubit& b) {
  return std::max(std::abs(a.amp0 - b.amp0), std::abs(a.amp1 - b.amp1));
}

Verdict state_vector_oracle() {
  Verdict v;
  struct Row {
    const char* name;
    Qubit sent;
    Qubit complement;
    bool keeps_t_plus;
  };
  const std::array<Row, 4> table{{
      {"H", Qubit::horizontal(), Qubit::vertical(), true},
      {"V", Qubit::vertical(), Qubit::horizontal(), false},
      {"+45", Qubit::plus45(), Qubit::minus45(), true},
      {"-45", Qubit::minus45(), Qubit::plus45(), false},
  }};
  for (const auto& row : table)
    v.detail << "\n    " << row.name << " -> " << row.name << " (x) "
             << (row.keeps_t_plus ? "T+" : "T-") << "  +  complement (x) T_E";

  double worst_norm = 0.0;
  double worst_vector = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double pe = 0.005 * i;
    const ProbeParams params(pe);
    const TargetOutputs t = target_outputs(params);
    const Qubit probe = to_physical(probe_input(params));
    for (const auto& row : table) {
      const auto out = apply(attack_unitary(), TwoQubitState::product(row.sent, probe));
      const Qubit kept = target_given_control(out, row.sent);
      const Qubit err = target_given_control(out, row.complement);
      worst_norm = std::max({worst_norm, std::abs(kept.norm_squared() - (1.0 - pe)),
                             std::abs(err.norm_squared() - pe)});
      worst_vector = std::max(
          {worst_vector, distance(kept, row.keeps_t_plus ? t.t_plus : t.t_minus),
           distance(err, t.t_err)});
    }
    worst_norm = std::max({worst_norm, std::abs(t.t_err.norm_squared() - pe),
                           std::abs(t.t_plus.norm_squared() - (1.0 - pe)),
                           std::abs(t.t_minus.norm_squared() - (1.0 - pe))});
  }
  v.detail << fmt("\n    worst norm deviation %.3g, worst amplitude deviation %.3g", worst_norm,
                  worst_vector);
  v.require(worst_norm <= 1e-12, "target norms on 101-point grid");
  v.require(worst_vector <= 1e-12, "four decompositions on 101-point grid");
  return v;
}

Verdict gate_algebra() {
  Verdict v;
  const std::vector<std::pair<const char*, Unitary4>> gates{
      {"pcnot", pcnot()},
      {"mcnot", mcnot()},
      {"swap", swap_gate()},
      {"attack", attack_unitary()},
      {"frame(x)frame", kron(fpb_frame(), fpb_frame())},
      {"hwp(0.3) on pol", on_polarization(hwp_rotation(0.3))},
      {"hwp(1.1) on mom", on_momentum(hwp_rotation(1.1))},
  };
  double worst = 0.0;
  for (const auto& [name, u] : gates) {
    const double dev = (u.adjoint() * u).max_abs_diff(Unitary4::identity());
    worst = std::max(worst, dev);
    v.require(dev <= 1e-12, std::string("unitarity of ") + name);
  }
  for (double theta : {0.0, M_PI / 8.0, 0.7, -2.0}) {
    const Unitary2 h = hwp_rotation(theta);
    v.require((h.adjoint() * h).max_abs_diff(Unitary2::identity()) <= 1e-12, "hwp unitarity");
  }
  // Qubit exchange |a b> -> |b a> written out by hand.
  Unitary4 exchange;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) exchange(2 * b + a, 2 * a + b) = 1.0;
  const double cascade = swap_gate().max_abs_diff(mcnot() * pcnot() * mcnot());
  const double explicit_perm = swap_gate().max_abs_diff(exchange);
  v.detail << fmt("\n    worst U^dagger U deviation %.3g, cascade %.3g, permutation %.3g", worst,
                  cascade, explicit_perm);
  v.require(cascade <= 1e-12, "swap equals M P M cascade");
  v.require(explicit_perm <= 1e-12, "swap equals qubit exchange");
  return v;
}

Verdict qnd_appendix() {
  Verdict v;
  constexpr std::uint64_t kTrials = 1000000;
  constexpr double kNp = 1e6;
  for (std::size_t i = 0; i < 3; ++i) {
    const double x = 2.0 + static_cast<double>(i);
    const QndParams q(x / std::sqrt(kNp), kNp);
    const auto s = run_qnd_trials(q, kTrials, 100 + i);
    const double bound = std::exp(-x * x / 2.0) / 2.0;
    const double se = testing::binomial_se(kTailOracle[i], kTrials);
    v.detail << fmt("\n    k*sqrt(Np)=%.0f  rate=%.4e  tail=%.4e", x, s.error_rate, kTailOracle[i])
             << fmt("  bound=%.4e", bound);
    v.require(s.error_rate <= bound, fmt("rate below bound at %.0f", x));
    v.require(std::abs(s.error_rate - kTailOracle[i]) <= 3.0 * se, fmt("rate near tail at %.0f", x));
  }
  std::mt19937_64 gen(2026);
  const QndParams q(0.003, kNp);
  double worst = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const std::complex<double> h = testing::random_complex(gen);
    const std::complex<double> w = testing::random_complex(gen);
    const double n = std::sqrt(std::norm(h) + std::norm(w));
    const double overlap = qnd_polarization_check(h / n, w / n, q);
    worst = std::min(worst, overlap * overlap);
  }
  v.detail << fmt("\n    worst polarization fidelity 1 - %.3g", 1.0 - worst);
  v.require(worst >= 1.0 - 1e-12, "polarization fidelity");
  return v;
}

// Standard error of the order-2 information 1 + log2(e^2 + (1-e)^2) when e is
// a proportion from n draws, by the delta method.
double renyi_se(double e, double n) {
  const double s = e * e + (1.0 - e) * (1.0 - e);
  const double slope = 2.0 * (2.0 * e - 1.0) / (s * std::log(2.0));
  return std::abs(slope) * testing::binomial_se(e, n);
}

Verdict defense_and_restore() {
  Verdict v;
  for (double pe : {0.1, 0.25}) {
    SessionConfig off;
    off.p_e = pe;
    off.n_intervals = kIntervals;
    off.seed = 601;
    SessionConfig on = off;
    on.seed = 602;
    on.momentum_defense = true;
    const auto a = run_session_stats(off);
    const auto b = run_session_stats(on);
    const double z_qber = testing::two_sample_z(a.qber_emp, a.n_sift, b.qber_emp, b.n_sift);
    const double pooled_e = (a.eve_err_emp * a.n_clean + b.eve_err_emp * b.n_clean) /
                            static_cast<double>(a.n_clean + b.n_clean);
    const double se_renyi = std::hypot(renyi_se(pooled_e, a.n_clean), renyi_se(pooled_e, b.n_clean));
    const double z_renyi = std::abs(a.renyi_emp - b.renyi_emp) / se_renyi;
    v.detail << fmt("\n    pe=%.2f  z(qber)=%.2f  z(renyi)=%.2f", pe, z_qber, z_renyi);
    v.require(z_qber <= 3.0, fmt("qber A/B at pe=%.2f", pe));
    v.require(z_renyi <= 3.0, fmt("renyi A/B at pe=%.2f", pe));
  }

  const FpbProbe probe(ProbeParams(0.2));
  RandomStream rng(603);
  const std::array<Qubit, 2> rl{Qubit::right(), Qubit::left()};
  std::uint64_t right = 0;
  for (std::uint64_t i = 0; i < kIntervals; ++i) {
    const auto sent = alice_transmit(rng);
    const auto forwarded = probe.intercept(sent.state, rng).forwarded;
    if (measure_subsystem(forwarded, Subsystem::kMomentum, rl, rng).index == 0) ++right;
  }
  v.detail << "\n    momentum R after restore: " << right << "/" << kIntervals;
  v.require(right == kIntervals, "restore yields R every time");

  for (auto mode : {ReceiverMode::kActive, ReceiverMode::kPassive}) {
    SessionConfig clean;
    clean.p_e = 0.3;
    clean.n_intervals = kIntervals;
    clean.seed = 604;
    clean.receiver_mode = mode;
    clean.attack_enabled = false;
    const auto st = run_session_stats(clean);
    v.detail << "\n    no attack (" << to_string(mode) << "): " << st.n_errors << " errors over "
             << st.n_sift << " sifts";
    v.require(st.n_errors == 0 && st.qber_emp == 0.0, "no-attack qber exactly zero");
  }
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism() {
  Verdict v;
  const auto dir = std::filesystem::temp_directory_path() / "fpbqkd_acceptance";
  std::filesystem::create_directories(dir);
  std::array<std::string, 2> sweeps;
  std::array<std::string, 2> sessions;
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out;
    std::ostringstream err;
    const auto csv = dir / ("sweep" + std::to_string(i) + ".csv");
    const auto records = dir / ("records" + std::to_string(i) + ".csv");
    const int a = cli::run_cli({"sweep", "--trials", "20000", "--seed", "42", "--out", csv.string()},
                               out, err);
    const int b = cli::run_cli({"session", "--pe", "0.3", "--trials", "20000", "--seed", "9",
                                "--mode", "passive", "--records", records.string()},
                               out, err);
    v.require(a == cli::kExitOk && b == cli::kExitOk, "cli runs succeed");
    sweeps[i] = slurp(csv);
    sessions[i] = slurp(records) + out.str();
  }
  std::filesystem::remove_all(dir);
  v.detail << "\n    sweep csv " << sweeps[0].size() << " bytes, session output "
           << sessions[0].size() << " bytes";
  v.require(!sweeps[0].empty() && sweeps[0] == sweeps[1], "sweep csv byte-identical");
  v.require(!sessions[0].empty() && sessions[0] == sessions[1], "session output byte-identical");
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  report(1, "information curve sweep", renyi_curve(), failures);
  report(2, "eavesdropper receiver error", eve_receiver(), failures);
  report(3, "state-vector oracle", state_vector_oracle(), failures);
  report(4, "gate algebra", gate_algebra(), failures);
  report(5, "QND discrimination and polarization", qnd_appendix(), failures);
  report(6, "momentum defense, restore, clean baseline", defense_and_restore(), failures);
  report(7, "deterministic output", determinism(), failures);
  std::printf("%d of 7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
