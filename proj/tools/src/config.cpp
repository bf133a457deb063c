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

#include "fpbqkd/cli/config.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace fpbqkd::cli {
namespace {

bool on_off(const std::string& v) { return v == "on"; }

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Simulator for BB84 under the Fuchs-Peres-Brandt individual attack", "fpbqkd"};
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Settings file of `key = value` lines, # comments");

  double pe = 0.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string mode = "active";
  std::string attack = "on";
  std::string defense = "off";
  std::vector<double> sweep;
  std::string out;
  std::string records;
  double kappa = QndOptions{}.kappa;
  double n_p = QndOptions{}.n_p;

  app.add_option("--pe", pe, "Disturbance P_E imposed by the probe, in [0, 0.5]");
  auto* trials_opt = app.add_option("--trials", trials,
                                    "Intervals per session point (qnd: Monte Carlo trials)");
  app.add_option("--seed", seed, "Base 64-bit seed");
  app.add_option("--mode,--receiver_mode", mode, "Bob's basis selection")
      ->check(CLI::IsMember({"active", "passive"}));
  app.add_option("--attack", attack, "Enable the FPB attack")->check(CLI::IsMember({"on", "off"}));
  app.add_option("--momentum-defense,--momentum_defense", defense,
                 "Alice randomizes the momentum qubit")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--sweep", sweep, "Comma-separated P_E values for `sweep`")->delimiter(',');
  app.add_option("--out", out, "Output file (default: standard output)");
  app.add_option("--records", records, "Per-interval CSV dump for `session`");
  app.add_option("--kappa", kappa, "Cross-phase coupling for `qnd`");
  app.add_option("--np", n_p, "Mean probe photon number for `qnd`");

  auto* session_cmd = app.add_subcommand("session", "Run one BB84 session");
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep P_E and emit one CSV row per point");
  auto* qnd_cmd = app.add_subcommand("qnd", "QND photon-number Monte Carlo");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  if (sweep_cmd->parsed()) {
    cmd.subcommand = Subcommand::kSweep;
  } else if (qnd_cmd->parsed()) {
    cmd.subcommand = Subcommand::kQnd;
  } else if (session_cmd->parsed()) {
    cmd.subcommand = Subcommand::kSession;
  }
  cmd.out = out;
  cmd.records = records;

  if (!(pe >= 0.0 && pe <= 0.5)) {
    std::ostringstream msg;
    msg << "--pe " << pe << " is outside the allowed domain [0, 0.5]";
    throw UsageError(msg.str());
  }
  if (trials < 1) throw UsageError("--trials must be at least 1");

  cmd.session.p_e = pe;
  cmd.session.n_intervals = trials;
  cmd.session.seed = seed;
  cmd.session.receiver_mode = mode == "passive" ? ReceiverMode::kPassive : ReceiverMode::kActive;
  cmd.session.attack_enabled = on_off(attack);
  cmd.session.momentum_defense = on_off(defense);

  cmd.sweep.pe_values = sweep.empty() ? default_pe_grid() : sweep;
  cmd.sweep.trials_per_point = trials;
  cmd.sweep.base_seed = seed;
  cmd.sweep.receiver_mode = cmd.session.receiver_mode;
  cmd.sweep.attack_enabled = cmd.session.attack_enabled;
  cmd.sweep.momentum_defense = cmd.session.momentum_defense;

  cmd.qnd.kappa = kappa;
  cmd.qnd.n_p = n_p;
  cmd.qnd.trials = trials_opt->count() > 0 ? trials : QndOptions{}.trials;
  cmd.qnd.seed = seed;

  try {
    cmd.session.validate();
    if (cmd.subcommand == Subcommand::kSweep) cmd.sweep.validate();
    if (cmd.subcommand == Subcommand::kQnd) QndParams(kappa, n_p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cmd;
}

}  // namespace fpbqkd::cli
