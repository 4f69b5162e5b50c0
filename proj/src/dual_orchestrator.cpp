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

#include "rdnc/dual_orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rdnc/errors.hpp"

namespace rdnc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_sizes(const PrimalAllocation& p, std::size_t n) {
  if (p.alpha.size() != n || p.beta.size() != n || p.c.size() != n ||
      p.r.size() != n) {
    throw DimensionError("primal allocation does not match scenario size " +
                         std::to_string(n));
  }
}

void check_sizes(const DualState& d, std::size_t n) {
  if (d.mu.size() != n || d.lambda.size() != n) {
    throw DimensionError("dual state does not match scenario size " +
                         std::to_string(n));
  }
}

double log_linear_K(const SourceSpec& src) {
  const auto* v = std::get_if<LogLinear>(&src.V);
  if (v == nullptr) {
    throw UnsupportedError(
        "dual solver: only the log-linear compression utility is supported");
  }
  return v->K;
}

// Primal objective that treats undefined logarithms as -infinity instead of
// throwing; used on recovered points, which may sit on c = 0.
double safe_objective(const PrimalAllocation& p, const Scenario& scn) {
  for (std::size_t i = 0; i < scn.size(); ++i) {
    if (!(p.alpha[i] > 0.0)) return -std::numeric_limits<double>::infinity();
    if (std::holds_alternative<LogRate>(scn.sources[i].U) && !(p.c[i] > 0.0)) {
      return -std::numeric_limits<double>::infinity();
    }
  }
  return primal_objective(p, scn);
}

// Running average with weight proportional to the iteration index, so the
// early transient is forgotten at rate O(1/t^2).
void accumulate(PrimalAllocation& avg, const PrimalAllocation& x,
                std::size_t t) {
  const double w = 2.0 / static_cast<double>(t + 1);
  auto blend = [w](std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += w * (b[i] - a[i]);
  };
  blend(avg.alpha, x.alpha);
  blend(avg.beta, x.beta);
  blend(avg.c, x.c);
  blend(avg.r, x.r);
}

}  // namespace

double step_size(const StepRule& rule, std::size_t t) {
  return std::visit(
      Overloaded{[](const ConstantStep& s) { return s.gamma; },
                 [t](const DiminishingStep& s) {
                   return s.gamma0 /
                          std::sqrt(static_cast<double>(std::max<std::size_t>(t, 1)));
                 }},
      rule);
}

void validate(const Scenario& scn) {
  if (scn.sources.empty()) throw DomainError("scenario: no sources");
  validate(scn.region);
  if (dimension(scn.region) != scn.sources.size()) {
    throw DimensionError("scenario: region dimension " +
                         std::to_string(dimension(scn.region)) +
                         " does not match " +
                         std::to_string(scn.sources.size()) + " sources");
  }
  for (const auto& src : scn.sources) {
    validate(src.model);
    validate(src.V);
    validate(src.U);
  }
  validate(scn.options.caps);
  std::visit(Overloaded{[](const ConstantStep& s) {
                          if (!(s.gamma > 0.0)) {
                            throw DomainError("step: gamma must be > 0");
                          }
                        },
                        [](const DiminishingStep& s) {
                          if (!(s.gamma0 > 0.0)) {
                            throw DomainError("step: gamma0 must be > 0");
                          }
                        }},
             scn.options.step);
  if (scn.options.max_iters == 0) {
    throw DomainError("solver: max_iters must be >= 1");
  }
  if (!(scn.options.tol_feas > 0.0) || !(scn.options.tol_gap > 0.0)) {
    throw DomainError("solver: tolerances must be > 0");
  }
}

double max_violation(const PrimalAllocation& p, const Scenario& scn) {
  const std::size_t n = scn.size();
  check_sizes(p, n);
  const SolverCaps& caps = scn.options.caps;
  double worst = 0.0;
  auto bump = [&worst](double v) { worst = std::max(worst, v); };
  for (std::size_t i = 0; i < n; ++i) {
    const SignFlags flags = sign_flags(scn.sources[i].model);
    const double sum = p.alpha[i] + p.beta[i];
    bump(sum - p.c[i]);
    if (flags.a == 1) bump(-p.alpha[i]);
    if (flags.b == 1) bump(p.beta[i]);
    bump(-sum);
    bump(p.c[i] - p.r[i]);
    bump(p.alpha[i] - caps.alpha_max);
    bump(caps.c_min - p.c[i]);
    bump(p.c[i] - caps.c_max);
  }
  bump(violation(scn.region, p.r));
  return worst;
}

double primal_objective(const PrimalAllocation& p, const Scenario& scn) {
  check_sizes(p, scn.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scn.size(); ++i) {
    total += evaluate_V(scn.sources[i].V, p.alpha[i], p.beta[i]) +
             evaluate_U(scn.sources[i].U, p.c[i]);
  }
  return total;
}

double lagrangian_value(const PrimalAllocation& p, const DualState& d,
                        const Scenario& scn) {
  const std::size_t n = scn.size();
  check_sizes(p, n);
  check_sizes(d, n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += evaluate_V(scn.sources[i].V, p.alpha[i], p.beta[i]) +
             evaluate_U(scn.sources[i].U, p.c[i]);
    total -= d.mu[i] * (p.alpha[i] + p.beta[i] - p.c[i]);
    total -= d.lambda[i] * (p.c[i] - p.r[i]);
  }
  return total;
}

PrimalAllocation solve_subproblems(const DualState& d, const Scenario& scn) {
  const std::size_t n = scn.size();
  check_sizes(d, n);
  const SolverCaps& caps = scn.options.caps;
  PrimalAllocation out = PrimalAllocation::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SourceSpec& src = scn.sources[i];
    const AlphaBeta ab =
        compression_subproblem(src.V, d.mu[i], sign_flags(src.model), caps);
    out.alpha[i] = ab.alpha;
    out.beta[i] = ab.beta;
    out.c[i] = congestion_subproblem(src.U, d.lambda[i], d.mu[i], caps);
  }
  out.r = max_weight(scn.region, d.lambda);
  return out;
}

double dual_objective(const DualState& d, const Scenario& scn) {
  // The subproblem maximizers attain the supremum of the Lagrangian.
  return lagrangian_value(solve_subproblems(d, scn), d, scn);
}

IterateResult dual_iterate(const DualState& state, const Scenario& scn,
                           double gamma) {
  if (!(gamma > 0.0)) throw DomainError("dual_iterate: step must be > 0");
  const std::size_t n = scn.size();
  check_sizes(state, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(state.mu[i] >= 0.0) || !(state.lambda[i] >= 0.0)) {
      throw DomainError("dual_iterate: duals must be >= 0");
    }
  }
  IterateResult out{state, solve_subproblems(state, scn)};
  const PrimalAllocation& x = out.primal;
  for (std::size_t i = 0; i < n; ++i) {
    out.next.mu[i] =
        std::max(0.0, state.mu[i] + gamma * (x.alpha[i] + x.beta[i] - x.c[i]));
    out.next.lambda[i] =
        std::max(0.0, state.lambda[i] + gamma * (x.c[i] - x.r[i]));
  }
  return out;
}

PrimalAllocation repair(const PrimalAllocation& averaged, const Scenario& scn) {
  const std::size_t n = scn.size();
  check_sizes(averaged, n);
  PrimalAllocation out = averaged;
  for (std::size_t i = 0; i < n; ++i) {
    const double K = log_linear_K(scn.sources[i]);
    const double c = std::min(averaged.c[i], averaged.r[i]);
    out.c[i] = c;
    out.alpha[i] = c > 0.0 ? compression_given_rate(K, c) : 1.0 / K;
    out.beta[i] = c - out.alpha[i];
  }
  return out;
}

SolveReport solve(const Scenario& scn) {
  validate(scn);
  const std::size_t n = scn.size();
  const SolverOptions& opt = scn.options;

  SolveReport report;
  report.trace.reserve(std::min<std::size_t>(opt.max_iters, 1u << 20));
  report.best_dual_objective = std::numeric_limits<double>::infinity();
  report.best_feasible_objective = -std::numeric_limits<double>::infinity();

  DualState state = DualState::uniform(n, 1.0);
  PrimalAllocation avg = PrimalAllocation::zeros(n);

  for (std::size_t t = 1; t <= opt.max_iters; ++t) {
    const double gamma = step_size(opt.step, t);
    IterateResult step = dual_iterate(state, scn, gamma);
    const double dual_obj = lagrangian_value(step.primal, state, scn);

    accumulate(avg, step.primal, t);
    PrimalAllocation recovered = repair(avg, scn);
    const double rec_violation = max_violation(recovered, scn);
    const double rec_objective = safe_objective(recovered, scn);

    if (dual_obj < report.best_dual_objective) {
      report.best_dual_objective = dual_obj;
      report.best_dual = state;
    }
    if (rec_violation <= kRecoveryFeasTol) {
      report.best_feasible_objective =
          std::max(report.best_feasible_objective, rec_objective);
    }

    TraceEntry entry;
    entry.iter = t;
    entry.dual = state;
    entry.primal = std::move(step.primal);
    entry.primal_obj = rec_objective;
    entry.dual_obj = dual_obj;
    entry.max_violation = max_violation(avg, scn);
    report.trace.push_back(std::move(entry));

    report.iterations = t;
    report.recovered = std::move(recovered);
    report.recovered_objective = rec_objective;
    report.recovered_violation = rec_violation;
    report.gap = (report.best_dual_objective - rec_objective) /
                 (1.0 + std::fabs(rec_objective));
    state = std::move(step.next);

    if (rec_violation < opt.tol_feas && report.gap < opt.tol_gap) {
      report.converged = true;
      break;
    }
  }
  report.final_dual = std::move(state);
  report.averaged = std::move(avg);
  return report;
}

}  // namespace rdnc
