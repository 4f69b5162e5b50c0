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

// rdnc: solve, verify and plot-data front end.
//
//   rdnc solve SCENARIO --out trace.csv [--max-iters N]
//   rdnc policy --K 1 --p 0.5 --c-min 0.1 --c-max 2 --steps 20 --out policy.csv
//   rdnc mac MAC_SCENARIO --out mac.csv
//   rdnc verify SCENARIO [--steps N] [--tolerance REL]

#include <cstddef>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace rdnc::cli;

  CLI::App app{"Rate-distortion network control"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  std::size_t max_iters = 0;
  auto* solve = app.add_subcommand("solve", "Run the dual solver on a scenario");
  solve->add_option("scenario", solve_args.scenario_path)->required();
  solve->add_option("--out", solve_args.out_csv, "Trace CSV")->required();
  auto* max_iters_opt =
      solve->add_option("--max-iters", max_iters)->check(CLI::PositiveNumber);

  PolicyArgs policy_args;
  auto* policy = app.add_subcommand("policy", "Compression policy sweep over c");
  policy->add_option("--K", policy_args.options.K)->required();
  policy->add_option("--p", policy_args.options.p)->required();
  policy->add_option("--c-min", policy_args.options.c_min)->required();
  policy->add_option("--c-max", policy_args.options.c_max)->required();
  policy->add_option("--steps", policy_args.options.steps, "Grid points")
      ->capture_default_str();
  policy->add_option("--out", policy_args.out_csv)->required();

  MacArgs mac_args;
  auto* mac = app.add_subcommand("mac", "Two-user MAC distortion control");
  mac->add_option("scenario", mac_args.scenario_path)->required();
  mac->add_option("--out", mac_args.out_csv)->required();
#ifdef RDNC_INJECT_MAC_FAULT
  mac_args.injected_objective_error = 1e-6;
#endif

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the solver against the grid oracle");
  verify->add_option("scenario", verify_args.scenario_path)->required();
  verify->add_option("--steps", verify_args.grid_steps, "Grid points per axis")
      ->capture_default_str();
  verify->add_option("--tolerance", verify_args.tolerance,
                     "Relative objective agreement")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*solve) {
    if (*max_iters_opt) solve_args.max_iters = max_iters;
    return cmd_solve(solve_args, std::cout, std::cerr);
  }
  if (*policy) return cmd_policy(policy_args, std::cout, std::cerr);
  if (*mac) return cmd_mac(mac_args, std::cout, std::cerr);
  return cmd_verify(verify_args, std::cout, std::cerr);
}
