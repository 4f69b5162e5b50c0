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

// Brute-force verifiers for the dual solver. Nothing here calls the layer
// subproblem solvers or max_weight; utilities, capacities and subproblem
// optima are recomputed from their definitions.
//
// The grid search assumes the rate-distortion constraint is tight
// (beta = c - alpha), which holds at the optimum for utilities increasing in
// beta. That is an assumption of the oracle, not of the solver.

#ifndef RDNC_ORACLE_HPP
#define RDNC_ORACLE_HPP

#include <cstddef>

#include "rdnc/dual_orchestrator.hpp"

namespace rdnc {

inline constexpr std::size_t kMaxGridPoints = 100'000'000;

struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 2;

  double at(std::size_t k) const {
    return lo + (hi - lo) * (static_cast<double>(k) /
                             static_cast<double>(steps - 1));
  }
};

struct SourceGrid {
  GridAxis alpha;
  GridAxis c;
};

struct GridSpec {
  std::vector<SourceGrid> sources;
  std::size_t mixture_points = 100;  // time-sharing grid between MAC corners
};

// Grid covering every candidate optimum of `scn` with `steps` points per axis.
GridSpec default_grid(const Scenario& scn, std::size_t steps);

// Halves every step (n -> 2n - 1 points); the old grid is a subset.
// Halves every step, the time-sharing grid included; the refined grid
// contains every point of the original.
GridSpec refine(const GridSpec& grid);

// Number of (alpha, c, r) evaluations the scan performs.
std::size_t grid_points(const Scenario& scn, const GridSpec& grid);

struct GridResult {
  bool found = false;
  PrimalAllocation best;
  double objective = 0.0;
  std::size_t points = 0;
};

// Exhaustive scan, OpenMP-parallel over grid rows. Ties go to the first
// point in lexicographic (candidate r, alpha, c) order, so the result is
// identical to grid_search_num_serial.
GridResult grid_search_num(const Scenario& scn, const GridSpec& grid);
GridResult grid_search_num_serial(const Scenario& scn, const GridSpec& grid);

struct KktReport {
  double slackness_mu = 0.0;      // max |mu_i (alpha_i + beta_i - c_i)|
  double slackness_lambda = 0.0;  // max |lambda_i (c_i - r_i)|
  double compression_margin = 0.0;
  double congestion_margin = 0.0;
  double scheduling_margin = 0.0;

  double max_residual() const;
};

KktReport kkt_residuals(const PrimalAllocation& primal, const DualState& dual,
                        const Scenario& scn);

}  // namespace rdnc

#endif  // RDNC_ORACLE_HPP
