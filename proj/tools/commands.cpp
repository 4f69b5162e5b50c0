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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "rdnc/csv.hpp"
#include "rdnc/dual_orchestrator.hpp"
#include "rdnc/mac_distortion.hpp"
#include "rdnc/oracle.hpp"
#include "rdnc/scenario_io.hpp"

namespace rdnc::cli {
namespace {

constexpr double kMacTolerance = 1e-9;

std::string join(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += format_number(v[i]);
  }
  return s + ")";
}

void print_allocation(const PrimalAllocation& a, std::ostream& out) {
  out << "alpha=" << join(a.alpha) << "\n"
      << "beta=" << join(a.beta) << "\n"
      << "c=" << join(a.c) << "\n"
      << "r=" << join(a.r) << "\n";
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  Scenario scn;
  try {
    scn = load_scenario(args.scenario_path);
    if (args.max_iters) scn.options.max_iters = *args.max_iters;
    validate(scn);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  SolveReport report;
  try {
    report = solve(scn);
    write_csv_file(args.out_csv, trace_table(report, scn.size()));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  print_allocation(report.recovered, out);
  out << "objective=" << format_number(report.recovered_objective) << "\n"
      << "dual=" << format_number(report.best_dual_objective) << "\n"
      << "gap=" << format_number(report.gap) << "\n"
      << "violation=" << format_number(report.recovered_violation) << "\n"
      << "iterations=" << report.iterations << "\n"
      << "converged=" << (report.converged ? "true" : "false") << "\n";
  return report.converged ? kExitOk : kExitNotConverged;
}

int cmd_policy(const PolicyArgs& args, std::ostream& out, std::ostream& err) {
  CsvTable table;
  try {
    table = policy_table(args.options);
    write_csv_file(args.out_csv, table);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  out << "rows=" << table.rows.size() << "\n"
      << "breakpoint=" << format_number(1.0 / args.options.K) << "\n";
  return kExitOk;
}

int cmd_mac(const MacArgs& args, std::ostream& out, std::ostream& err) {
  MacScenario scn;
  CornerSolution corner;
  LpSolution lp;
  try {
    scn = load_mac_scenario(args.scenario_path);
    validate(scn);
    corner = solve_corner(scn);
    lp = lp_oracle(scn);
    write_csv_file(args.out_csv, mac_table(scn, corner));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const double objective = corner.objective + args.injected_objective_error;
  out << "case=" << case_label(corner.kase) << " D=("
      << format_number(corner.distortion[0]) << ","
      << format_number(corner.distortion[1]) << ")\n"
      << "x=(" << format_number(corner.x[0]) << ","
      << format_number(corner.x[1]) << ")\n"
      << "objective=" << format_number(objective) << "\n"
      << "oracle_objective=" << format_number(lp.objective) << "\n";

  const double diff = std::fabs(objective - lp.objective);
  if (!(diff <= kMacTolerance)) {
    err << "error: closed-form objective differs from the LP oracle by "
        << format_number(diff) << "\n";
    return kExitOracleMismatch;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  Scenario scn;
  try {
    scn = load_scenario(args.scenario_path);
    validate(scn);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  SolveReport report;
  GridResult grid;
  KktReport kkt;
  try {
    report = solve(scn);
    grid = grid_search_num(scn, default_grid(scn, args.grid_steps));
    if (report.recovered_violation <= 1e-6) {
      kkt = kkt_residuals(report.recovered, report.best_dual, scn);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!grid.found) {
    err << "error: oracle grid holds no feasible point\n";
    return kExitVerifyFailed;
  }

  const double rel = std::fabs(report.recovered_objective - grid.objective) /
                     std::max(std::fabs(grid.objective), 1e-12);
  out << "solver_objective=" << format_number(report.recovered_objective) << "\n"
      << "oracle_objective=" << format_number(grid.objective) << "\n"
      << "oracle_points=" << grid.points << "\n"
      << "relative_difference=" << format_number(rel) << "\n"
      << "gap=" << format_number(report.gap) << "\n"
      << "kkt_residual=" << format_number(kkt.max_residual()) << "\n"
      << "converged=" << (report.converged ? "true" : "false") << "\n";
  const bool ok = report.converged && rel <= args.tolerance;
  out << "verdict=" << (ok ? "agree" : "disagree") << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace rdnc::cli
