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

#ifndef FPBQKD_CLI_SWEEP_HPP
#define FPBQKD_CLI_SWEEP_HPP

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "fpbqkd/bb84.hpp"
#include "fpbqkd/qnd.hpp"

namespace fpbqkd::cli {

struct SweepSpec {
  std::vector<double> pe_values;
  std::uint64_t trials_per_point = 100000;
  std::uint64_t base_seed = 1;
  ReceiverMode receiver_mode = ReceiverMode::kActive;
  bool momentum_defense = false;
  bool attack_enabled = true;

  /// Non-empty, strictly increasing, every value in [0, 0.5], trials >= 1.
  void validate() const;
};

/// The disturbance grid used to trace the information-disturbance curve.
std::vector<double> default_pe_grid();

struct CsvRow {
  double pe = 0.0;
  std::uint64_t n_intervals = 0;
  std::uint64_t n_sift = 0;
  double qber_emp = 0.0;
  double qber_analytic = 0.0;
  double renyi_emp = 0.0;
  double renyi_analytic = 0.0;
  double eve_err_emp = 0.0;
  double eve_err_analytic = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "pe,n_intervals,n_sift,qber_emp,qber_analytic,renyi_emp,renyi_analytic,eve_err_emp,"
    "eve_err_analytic";

CsvRow to_csv_row(double pe, const SessionStats& stats);

/// Point i runs with seed base_seed + i.
std::vector<CsvRow> run_sweep(const SweepSpec& spec);

/// Throws std::logic_error if a row has rates outside [0, 1] or analytic
/// columns that disagree with the closed forms for its pe.
void check_row_invariants(const CsvRow& row, bool attack_enabled);

/// Header plus one line per row, reals to 6 significant digits, LF endings.
/// Throws std::runtime_error if the stream fails.
void write_csv(const std::vector<CsvRow>& rows, std::ostream& out);

void write_records(const std::vector<BitRecord>& records, std::ostream& out);

void write_qnd_summary(const QndParams& q, const QndTrialSummary& s, std::ostream& out);

}  // namespace fpbqkd::cli

#endif  // FPBQKD_CLI_SWEEP_HPP
