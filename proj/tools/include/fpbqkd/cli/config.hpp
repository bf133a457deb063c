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

#ifndef FPBQKD_CLI_CONFIG_HPP
#define FPBQKD_CLI_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpbqkd/bb84.hpp"
#include "fpbqkd/cli/sweep.hpp"

namespace fpbqkd::cli {

/// Bad flags, bad config file, or out-of-range values. Exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() carries the help text. Exit status 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { kSession, kSweep, kQnd };

struct QndOptions {
  double kappa = 0.003;
  double n_p = 1e6;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
};

struct Command {
  Subcommand subcommand = Subcommand::kSession;
  SessionConfig session;
  SweepSpec sweep;
  QndOptions qnd;
  /// Empty means standard output.
  std::string out;
  /// Per-interval record dump for `session`; empty disables it.
  std::string records;
};

/// Parses `fpbqkd <session|sweep|qnd> [flags]`. `args` excludes the program
/// name. Values from --config are overridden by flags on the command line.
Command parse_command(const std::vector<std::string>& args);

}  // namespace fpbqkd::cli

#endif  // FPBQKD_CLI_CONFIG_HPP
