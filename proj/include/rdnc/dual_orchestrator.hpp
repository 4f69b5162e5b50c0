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

// Joint compression / congestion / scheduling control by dual decomposition.
//
// Primal program, one entry per source i:
//
//   max  sum_i V_i(alpha_i, beta_i) + U_i(c_i)
//   s.t. alpha_i + beta_i <= c_i          (price mu_i)
//        a_i alpha_i >= 0, b_i beta_i <= 0, alpha_i + beta_i >= 0
//        c_i <= r_i                       (price lambda_i)
//        r in region
//
// plus the SolverCaps bounds alpha <= alpha_max, c_min <= c <= c_max. The dual
// function g(mu, lambda) is evaluated by the three layer subproblems and
// minimized by projected subgradient steps. A feasible primal point is
// recovered from the running average of the subproblem maximizers.

#ifndef RDNC_DUAL_ORCHESTRATOR_HPP
#define RDNC_DUAL_ORCHESTRATOR_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "rdnc/layer_solvers.hpp"
#include "rdnc/rate_region.hpp"
#include "rdnc/source_models.hpp"

namespace rdnc {

struct SourceSpec {
  SourceModel model;
  UtilityV V;
  UtilityU U;
};

struct ConstantStep {
  double gamma = 0.1;
};

// gamma_t = gamma0 / sqrt(t), t = 1, 2, ...
struct DiminishingStep {
  double gamma0 = 1.0;
};

using StepRule = std::variant<ConstantStep, DiminishingStep>;

double step_size(const StepRule& rule, std::size_t t);

struct SolverOptions {
  StepRule step = DiminishingStep{1.0};
  std::size_t max_iters = 50000;
  double tol_feas = 1e-6;
  double tol_gap = 1e-3;
  SolverCaps caps;
};

struct Scenario {
  std::vector<SourceSpec> sources;
  RateRegion region;
  SolverOptions options;

  std::size_t size() const { return sources.size(); }
};

void validate(const Scenario& scn);

struct DualState {
  std::vector<double> mu;
  std::vector<double> lambda;

  static DualState uniform(std::size_t n, double value) {
    return {std::vector<double>(n, value), std::vector<double>(n, value)};
  }
};

struct PrimalAllocation {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> c;
  std::vector<double> r;

  static PrimalAllocation zeros(std::size_t n) {
    return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
            std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  }
};

// Largest amount by which any primal constraint, including the caps, fails.
double max_violation(const PrimalAllocation& primal, const Scenario& scn);

double primal_objective(const PrimalAllocation& primal, const Scenario& scn);

double lagrangian_value(const PrimalAllocation& primal, const DualState& dual,
                        const Scenario& scn);

// Maximizers of the three layer subproblems at the given prices.
PrimalAllocation solve_subproblems(const DualState& dual, const Scenario& scn);

double dual_objective(const DualState& dual, const Scenario& scn);

struct IterateResult {
  DualState next;
  PrimalAllocation primal;
};

// One Jacobi sweep: all subproblems see `state`, then both price vectors
// take a projected subgradient step of size gamma.
IterateResult dual_iterate(const DualState& state, const Scenario& scn,
                           double gamma);

// Clips c to r and re-solves compression at the clipped rate.
PrimalAllocation repair(const PrimalAllocation& averaged, const Scenario& scn);

struct TraceEntry {
  std::size_t iter = 0;
  DualState dual;             // prices the subproblems saw
  PrimalAllocation primal;    // subproblem maximizers at those prices
  double primal_obj = 0.0;    // objective of the recovered point so far
  double dual_obj = 0.0;      // g(dual)
  double max_violation = 0.0; // of the unrepaired running average
};

struct SolveReport {
  std::vector<TraceEntry> trace;
  DualState final_dual;
  DualState best_dual;  // iterate with the smallest dual objective
  PrimalAllocation averaged;
  PrimalAllocation recovered;
  double recovered_objective = 0.0;
  double recovered_violation = 0.0;
  double best_dual_objective = 0.0;
  double best_feasible_objective = 0.0;
  double gap = 0.0;  // (best dual - recovered) / (1 + |recovered|)
  std::size_t iterations = 0;
  bool converged = false;
};

// Tolerance for counting a recovered point as feasible.
inline constexpr double kRecoveryFeasTol = 1e-9;

SolveReport solve(const Scenario& scn);

}  // namespace rdnc

#endif  // RDNC_DUAL_ORCHESTRATOR_HPP
