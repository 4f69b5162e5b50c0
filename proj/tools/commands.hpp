// Copyright 2026 The rdnc Authors
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

// Subcommands of the rdnc tool. Each returns the process exit code and
// writes its human-readable summary to `out`, diagnostics to `err`.

#ifndef RDNC_TOOLS_COMMANDS_HPP
#define RDNC_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "rdnc/tables.hpp"

namespace rdnc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitOracleMismatch = 3;
inline constexpr int kExitVerifyFailed = 4;

struct SolveArgs {
  std::string scenario_path;
  std::string out_csv;
  std::optional<std::size_t> max_iters;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct PolicyArgs {
  PolicyOptions options;
  std::string out_csv;
};

int cmd_policy(const PolicyArgs& args, std::ostream& out, std::ostream& err);

struct MacArgs {
  std::string scenario_path;
  std::string out_csv;
  // Added to the closed-form objective before the oracle cross-check; only
  // the fault-injection build sets it.
  double injected_objective_error = 0.0;
};

int cmd_mac(const MacArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::string scenario_path;
  std::size_t grid_steps = 301;
  double tolerance = 0.01;  // relative objective agreement
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace rdnc::cli

#endif  // RDNC_TOOLS_COMMANDS_HPP
