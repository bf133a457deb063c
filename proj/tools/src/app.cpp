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

#include "fpbqkd/cli/app.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <stdexcept>

#include "fpbqkd/bb84.hpp"
#include "fpbqkd/cli/config.hpp"
#include "fpbqkd/cli/sweep.hpp"
#include "fpbqkd/qnd.hpp"

namespace fpbqkd::cli {
namespace {

// Opens --out if given, otherwise hands back the default stream.
class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void print_summary(std::ostream& err, const std::vector<CsvRow>& rows) {
  fmt::print(err, "{:>8} {:>8} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}\n", "pe", "n_sift", "qber",
             "qber*", "I_R", "I_R*", "eve_err", "eve_err*");
  for (const auto& r : rows) {
    fmt::print(err, "{:>8.5f} {:>8} {:>9.5f} {:>9.5f} {:>9.5f} {:>9.5f} {:>9.5f} {:>9.5f}\n", r.pe,
               r.n_sift, r.qber_emp, r.qber_analytic, r.renyi_emp, r.renyi_analytic,
               r.eve_err_emp, r.eve_err_analytic);
  }
  fmt::print(err, "(* = closed form)\n");
}

int run_session_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  fmt::print(err, "session: pe={} intervals={} seed={} mode={} attack={} momentum-defense={}\n",
             cmd.session.p_e, cmd.session.n_intervals, cmd.session.seed,
             to_string(cmd.session.receiver_mode), cmd.session.attack_enabled ? "on" : "off",
             cmd.session.momentum_defense ? "on" : "off");
  const SessionResult result = run_session(cmd.session);
  const std::vector<CsvRow> rows{to_csv_row(cmd.session.p_e, result.stats)};
  for (const auto& r : rows) check_row_invariants(r, cmd.session.attack_enabled);
  OutputSink sink(cmd.out, out);
  write_csv(rows, sink.get());
  if (!cmd.records.empty()) {
    OutputSink records(cmd.records, out);
    write_records(result.records, records.get());
  }
  print_summary(err, rows);
  return kExitOk;
}

int run_sweep_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  fmt::print(err, "sweep: {} points x {} intervals, base seed {}\n", cmd.sweep.pe_values.size(),
             cmd.sweep.trials_per_point, cmd.sweep.base_seed);
  const auto rows = run_sweep(cmd.sweep);
  for (const auto& r : rows) check_row_invariants(r, cmd.sweep.attack_enabled);
  OutputSink sink(cmd.out, out);
  write_csv(rows, sink.get());
  print_summary(err, rows);
  return kExitOk;
}

int run_qnd_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  const QndParams q(cmd.qnd.kappa, cmd.qnd.n_p);
  if (q.weak_discrimination()) {
    fmt::print(err, "warning: kappa^2 N_P = {} < 1, photon-number discrimination is weak\n",
               q.kappa() * q.kappa() * q.n_p());
  }
  const QndTrialSummary s = run_qnd_trials(q, cmd.qnd.trials, cmd.qnd.seed);
  if (s.error_rate > 1.0) throw std::logic_error("error rate above 1");
  OutputSink sink(cmd.out, out);
  write_qnd_summary(q, s, sink.get());
  fmt::print(err, "qnd: kappa*sqrt(N_P)={:.6g} empirical error={:.6g} exact tail={:.6g} bound={:.6g}\n",
             q.displacement(), s.error_rate, s.exact_tail, s.bound);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_command(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    fmt::print(err, "usage error: {}\nRun with --help for usage.\n", e.what());
    return kExitUsage;
  }

  try {
    switch (cmd.subcommand) {
      case Subcommand::kSession:
        return run_session_command(cmd, out, err);
      case Subcommand::kSweep:
        return run_sweep_command(cmd, out, err);
      case Subcommand::kQnd:
        return run_qnd_command(cmd, out, err);
    }
  } catch (const std::logic_error& e) {
    fmt::print(err, "invariant violated: {}\n", e.what());
    return kExitInvariant;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace fpbqkd::cli
