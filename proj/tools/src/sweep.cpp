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

#include "fpbqkd/cli/sweep.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "fpbqkd/fpb_probe.hpp"

namespace fpbqkd::cli {
namespace {

std::string real(double x) { return fmt::format("{:#.6g}", x); }

void require_rate(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::logic_error(std::string(name) + " = " + std::to_string(x) + " is not a rate");
  }
}

void require_good(const std::ostream& out) {
  if (!out) throw std::runtime_error("failed writing output");
}

}  // namespace

void SweepSpec::validate() const {
  if (pe_values.empty()) throw std::invalid_argument("sweep needs at least one pe value");
  if (trials_per_point < 1) throw std::invalid_argument("trials per point must be at least 1");
  for (std::size_t i = 0; i < pe_values.size(); ++i) {
    const double pe = pe_values[i];
    if (!(pe >= 0.0 && pe <= 0.5)) {
      throw std::invalid_argument("sweep value " + std::to_string(pe) +
                                  " is outside the allowed domain [0, 0.5]");
    }
    if (i > 0 && !(pe > pe_values[i - 1])) {
      throw std::invalid_argument("sweep values must be strictly increasing");
    }
  }
}

std::vector<double> default_pe_grid() { return {0.0, 0.1, 0.2, 1.0 / 3.0, 0.4, 0.5}; }

CsvRow to_csv_row(double pe, const SessionStats& stats) {
  return {pe,
          stats.n_intervals,
          stats.n_sift,
          stats.qber_emp,
          stats.qber_analytic,
          stats.renyi_emp,
          stats.renyi_analytic,
          stats.eve_err_emp,
          stats.eve_err_analytic};
}

std::vector<CsvRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<CsvRow> rows;
  rows.reserve(spec.pe_values.size());
  for (std::size_t i = 0; i < spec.pe_values.size(); ++i) {
    SessionConfig cfg;
    cfg.n_intervals = spec.trials_per_point;
    cfg.p_e = spec.pe_values[i];
    cfg.seed = spec.base_seed + i;
    cfg.receiver_mode = spec.receiver_mode;
    cfg.momentum_defense = spec.momentum_defense;
    cfg.attack_enabled = spec.attack_enabled;
    rows.push_back(to_csv_row(cfg.p_e, run_session_stats(cfg)));
  }
  return rows;
}

void check_row_invariants(const CsvRow& row, bool attack_enabled) {
  require_rate(row.qber_emp, "qber_emp");
  require_rate(row.renyi_emp, "renyi_emp");
  require_rate(row.eve_err_emp, "eve_err_emp");
  if (row.n_sift > row.n_intervals) throw std::logic_error("more sifts than intervals");
  const double qber = attack_enabled ? row.pe : 0.0;
  const double renyi = attack_enabled ? renyi_information(row.pe) : 0.0;
  const double eve = attack_enabled ? eve_conditional_error(row.pe) : 0.5;
  if (row.qber_analytic != qber || row.renyi_analytic != renyi || row.eve_err_analytic != eve) {
    throw std::logic_error("analytic columns disagree with the closed forms");
  }
}

void write_csv(const std::vector<CsvRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << real(r.pe) << ',' << r.n_intervals << ',' << r.n_sift << ',' << real(r.qber_emp) << ','
        << real(r.qber_analytic) << ',' << real(r.renyi_emp) << ',' << real(r.renyi_analytic)
        << ',' << real(r.eve_err_emp) << ',' << real(r.eve_err_analytic) << '\n';
  }
  out.flush();
  require_good(out);
}

void write_records(const std::vector<BitRecord>& records, std::ostream& out) {
  out << "index,alice_basis,alice_bit,bob_basis,bob_bit,eve_guess,sifted,error\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << i << ',' << to_string(r.alice_basis) << ',' << r.alice_bit << ','
        << to_string(r.bob_basis) << ',' << r.bob_bit << ',' << r.eve_guess << ','
        << (r.sifted ? 1 : 0) << ',' << (r.error ? 1 : 0) << '\n';
  }
  out.flush();
  require_good(out);
}

void write_qnd_summary(const QndParams& q, const QndTrialSummary& s, std::ostream& out) {
  out << "kappa,np,kappa_sqrt_np,trials,errors,error_rate,exact_tail,bound\n";
  out << real(q.kappa()) << ',' << real(q.n_p()) << ',' << real(q.displacement()) << ','
      << s.trials << ',' << s.errors << ',' << real(s.error_rate) << ',' << real(s.exact_tail)
      << ',' << real(s.bound) << '\n';
  out.flush();
  require_good(out);
}

}  // namespace fpbqkd::cli
