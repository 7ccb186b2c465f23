// Copyright 2026 The analog-search-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASL_TOOLS_CLI_HPP
#define ASL_TOOLS_CLI_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asl/document.hpp"

namespace asl::cli {

enum class Command {
  curve,
  maxfid,
  delta,
  discrim,
  bound,
  verify_proof,
  regions,
  table1,
  prior,
  crossing,
};

const char* command_name(Command c);

// Fully resolved run description. hbar is always set (either directly, from
// --h, or from the default h = 1); exactly one of --h/--hbar may appear on
// the command line.
struct RunConfig {
  Command command = Command::table1;

  // Physics
  double energy = 1.0;
  double hbar = 0.15915494309189535;  // 1/(2 pi), i.e. h = 1
  double x = 0.8;
  double gamma = 1.1;
  double threshold = 0.995;
  double alpha = 100.0;
  std::optional<double> p_w;  // alternative to alpha for discrim

  // Sampling / grids
  std::vector<double> x_list{0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
  std::size_t points = 1000;
  double tmax = 0.0;  // 0 = automatic
  std::size_t nx = 512;
  std::size_t ngamma = 512;
  double gamma_min = 1.0;
  double gamma_max = 10.0;
  bool x_given = false;
  bool gamma_given = false;

  // delta sweep
  std::vector<double> delta_gammas{1.0, 1.001, 1.01, 1.1};

  // discrim
  std::vector<double> ratios{1.0, 10.0, 100.0};
  std::optional<double> single_delta;

  // bound / verify-proof / prior
  std::size_t dim = 16;
  double bound_delta = 0.0;
  std::vector<std::size_t> dims{4, 8, 16, 64};
  std::vector<double> gammas{1.0, 1.05, 1.1};
  std::size_t proof_points = 50;

  // prior
  std::string prior_kind = "damped-gaussian";
  std::vector<double> sigma_sqs{1.0};
  std::vector<double> xbars{0.95};
  double damping_scale = 10.0;

  // Output
  std::string format = "csv";
  std::string output = "-";
};

// Thrown when --help was requested; carries the text to print.
struct help_requested {
  std::string text;
};

// Parses and validates; throws asl::usage_error on bad input and
// help_requested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

// Dispatches to the owning module. Deterministic: identical configs produce
// identical documents apart from the timestamp metadata entry.
ResultDocument run(const RunConfig& config);

// parse + run + write with the exit-code contract: 0 ok, 1 numeric/domain/
// resource failure, 2 usage. Diagnostics go to err as single lines.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace asl::cli

#endif
