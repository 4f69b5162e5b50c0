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


#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "rdnc/dual_orchestrator.hpp"
#include "rdnc/errors.hpp"
#include "rdnc/oracle.hpp"
#include "support.hpp"

namespace rdnc {
namespace {

using testing::binary_source;
using testing::box_scenario;
using testing::mac_scenario;

Scenario single_zero_utility() {
  Scenario scn = box_scenario({10.0}, {{BinarySource{1.0, 0.5}, LogLinear{1.0}, ZeroUtility{}}});
  return scn;
}

TEST_CASE("step rules") {
  CHECK(step_size(ConstantStep{0.3}, 1) == 0.3);
  CHECK(step_size(ConstantStep{0.3}, 100) == 0.3);
  CHECK(step_size(DiminishingStep{2.0}, 4) == doctest::Approx(1.0));
  CHECK(step_size(DiminishingStep{2.0}, 0) == step_size(DiminishingStep{2.0}, 1));
}

TEST_CASE("Lagrangian by hand") {
  Scenario scn = single_zero_utility();
  PrimalAllocation x{{1.0}, {0.0}, {1.0}, {1.0}};
  CHECK(lagrangian_value(x, DualState{{1.0}, {1.0}}, scn) == doctest::Approx(0.0));

  // ln 2 + 1 (-0.5) - mu (2 - 0.5 - 1) - lambda (1 - 3) with mu = 2, lambda = 0.5
  PrimalAllocation y{{2.0}, {-0.5}, {1.0}, {3.0}};
  const double want = std::log(2.0) - 0.5 - 2.0 * 0.5 + 0.5 * 2.0;
  CHECK(lagrangian_value(y, DualState{{2.0}, {0.5}}, scn) == doctest::Approx(want));
  CHECK(primal_objective(y, scn) == doctest::Approx(std::log(2.0) - 0.5));

  PrimalAllocation bad{{0.0}, {0.0}, {1.0}, {1.0}};
  CHECK_THROWS_AS(lagrangian_value(bad, DualState{{1.0}, {1.0}}, scn), DomainError);
}

TEST_CASE("zero duals reduce the Lagrangian to the objective") {
  Scenario scn = box_scenario({2.0, 1.0}, {binary_source(3.0, 0.25, 1.0, 1.0),
                                           binary_source(2.0, 0.4, 0.5, 2.0)});
  PrimalAllocation x{{1.5, 0.7}, {-0.2, 0.0}, {1.0, 0.6}, {2.0, 1.0}};
  CHECK(lagrangian_value(x, DualState::uniform(2, 0.0), scn) ==
        doctest::Approx(primal_objective(x, scn)));
}

TEST_CASE("dual function at zero prices") {
  Scenario scn = box_scenario({2.0, 1.0}, {binary_source(3.0, 0.25, 1.0, 1.0),
                                           binary_source(2.0, 0.4, 0.5, 2.0)});
  const double want = std::log(10.0) + 1.0 * std::log(10.0) + std::log(10.0) +
                      2.0 * std::log(10.0);
  CHECK(dual_objective(DualState::uniform(2, 0.0), scn) == doctest::Approx(want));

  const auto step = dual_iterate(DualState::uniform(2, 0.0), scn, 0.1);
  CHECK(step.primal.alpha[0] == 10.0);
  CHECK(step.primal.c[1] == 10.0);
  CHECK(step.primal.r == std::vector<double>{2.0, 1.0});
}

TEST_CASE("weak duality at arbitrary prices") {
  Scenario scn = mac_scenario({7.0, 3.0}, 1.0, {binary_source(4.0, 0.3, 0.5, 2.0),
                                                binary_source(4.0, 0.2, 2.0, 1.0)});
  const PrimalAllocation x{{2.0, 0.5}, {-1.2, 0.0}, {0.8, 0.5}, {0.9, 0.6}};
  REQUIRE(max_violation(x, scn) == 0.0);
  const double f = primal_objective(x, scn);
  for (double m : {0.0, 0.3, 1.0, 4.0}) {
    for (double l : {0.0, 0.5, 2.0}) {
      const DualState d{{m, m + 0.1}, {l, 2.0 * l}};
      CHECK(lagrangian_value(x, d, scn) >= f - 1e-12);
      CHECK(dual_objective(d, scn) >= f - 1e-12);
    }
  }
}

TEST_CASE("prices fall when the maximizers leave slack") {
  Scenario scn = box_scenario({10.0}, {binary_source(1.0, 0.5, 1.0, 1.0)});
  // At mu = 0.5, lambda = 2: alpha = min(2, 10), c = 1 / 1.5, r = 10.
  const DualState d{{0.5}, {2.0}};
  const auto step = dual_iterate(d, scn, 0.1);
  CHECK(step.next.lambda[0] < 2.0);
  CHECK(step.next.lambda[0] >= 0.0);
  // mu rises because alpha + beta = 2 exceeds c.
  CHECK(step.next.mu[0] > 0.5);

  // c = 1/5 leaves most of r = 10 unused; a long step hits the floor.
  const auto floor = dual_iterate(DualState{{0.0}, {5.0}}, scn, 100.0);
  CHECK(floor.next.lambda[0] == 0.0);
}

TEST_CASE("constraint violation") {
  Scenario scn = box_scenario({1.0}, {binary_source(1.0, 0.5, 1.0, 1.0)});
  CHECK(max_violation({{1.0}, {0.0}, {1.0}, {1.0}}, scn) == 0.0);
  CHECK(max_violation({{1.0}, {0.5}, {1.0}, {1.0}}, scn) == doctest::Approx(0.5));
  CHECK(max_violation({{1.0}, {-2.0}, {1.0}, {1.0}}, scn) == doctest::Approx(1.0));
  CHECK(max_violation({{1.0}, {0.0}, {1.0}, {1.5}}, scn) == doctest::Approx(0.5));
  CHECK(max_violation({{1.0}, {0.0}, {1.2}, {1.0}}, scn) == doctest::Approx(0.2));
  CHECK_THROWS_AS(max_violation(PrimalAllocation::zeros(2), scn), DimensionError);
}

TEST_CASE("repair clips the rate and re-solves compression") {
  Scenario scn = box_scenario({1.0}, {binary_source(1.0, 0.5, 2.0, 1.0)});
  const auto fixed = repair({{0.7}, {0.1}, {1.3}, {1.0}}, scn);
  CHECK(fixed.c[0] == 1.0);
  CHECK(fixed.alpha[0] == 1.0);
  CHECK(fixed.beta[0] == 0.0);
  CHECK(max_violation(fixed, scn) == 0.0);
}

TEST_CASE("single source on a box reaches the oracle optimum") {
  for (double cap : {1.0, 2.0, 0.5}) {
    CAPTURE(cap);
    Scenario scn = box_scenario({cap}, {binary_source(1.0, 0.5, 1.0, 1.0)});
    const SolveReport rep = solve(scn);
    CHECK(rep.converged);
    CHECK(rep.iterations <= scn.options.max_iters);
    const GridResult grid = grid_search_num(scn, default_grid(scn, 401));
    REQUIRE(grid.found);
    // At cap 1 the optimum is ln 1 + ln 1 = 0, so the 1% is taken against
    // max(|f*|, 1).
    CHECK(std::fabs(rep.recovered_objective - grid.objective) <=
          0.01 * std::max(std::fabs(grid.objective), 1.0));
  }
}

TEST_CASE("zero congestion utility on a large box") {
  Scenario scn = single_zero_utility();
  const SolveReport rep = solve(scn);
  const GridResult grid = grid_search_num(scn, default_grid(scn, 401));
  REQUIRE(grid.found);
  CHECK(rep.recovered_violation <= 1e-9);
  CHECK(grid.objective == doctest::Approx(std::log(10.0)));
  CHECK(rep.recovered_objective == doctest::Approx(grid.objective).epsilon(0.01));
}

TEST_CASE("symmetric instance gives symmetric allocations") {
  Scenario scn = mac_scenario({3.0, 3.0}, 1.0, {binary_source(2.0, 0.3, 1.0, 1.0),
                                                binary_source(2.0, 0.3, 1.0, 1.0)});
  const SolveReport rep = solve(scn);
  CHECK(rep.converged);
  CHECK(rep.recovered.alpha[0] == doctest::Approx(rep.recovered.alpha[1]).epsilon(1e-3));
  CHECK(rep.recovered.c[0] == doctest::Approx(rep.recovered.c[1]).epsilon(1e-3));
  CHECK(rep.recovered.r[0] == doctest::Approx(rep.recovered.r[1]).epsilon(1e-3));
}

TEST_CASE("final dual bounds the recovered objective") {
  Scenario scn = box_scenario({2.0, 1.0}, {binary_source(3.0, 0.25, 1.0, 1.0),
                                           binary_source(2.0, 0.4, 0.5, 2.0)});
  const SolveReport rep = solve(scn);
  CHECK(rep.converged);
  CHECK(dual_objective(rep.final_dual, scn) >= rep.recovered_objective - 1e-9);
  CHECK(rep.best_dual_objective >= rep.recovered_objective - 1e-9);
  CHECK(rep.gap < scn.options.tol_gap);
  CHECK(rep.trace.size() == rep.iterations);
  for (const TraceEntry& e : rep.trace) {
    CHECK(e.dual_obj >= rep.best_feasible_objective - 1e-9);
  }
}

TEST_CASE("iteration budget exhaustion is reported, not thrown") {
  Scenario scn = box_scenario({2.0}, {binary_source(1.0, 0.5, 1.0, 1.0)});
  scn.options.max_iters = 1;
  const SolveReport rep = solve(scn);
  CHECK_FALSE(rep.converged);
  CHECK(rep.iterations == 1);
  CHECK(rep.trace.size() == 1);
}

TEST_CASE("scenario validation") {
  Scenario scn = box_scenario({2.0}, {binary_source(1.0, 0.5, 1.0, 1.0)});
  scn.region = BoxRegion{{1.0, 1.0}};
  CHECK_THROWS_AS(validate(scn), DimensionError);

  Scenario gauss = box_scenario({2.0}, {{GaussianSource{1.0, 1.0}, LogLinear{1.0}, LogRate{1.0}}});
  CHECK_THROWS_AS(solve(gauss), UnsupportedError);

  Scenario empty = box_scenario({}, {});
  CHECK_THROWS(validate(empty));
}

}  // namespace
}  // namespace rdnc
