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

// Plot-ready CSV tables emitted by the command-line tool.

#ifndef RDNC_TABLES_HPP
#define RDNC_TABLES_HPP

#include <cstddef>

#include "rdnc/csv.hpp"
#include "rdnc/dual_orchestrator.hpp"
#include "rdnc/mac_distortion.hpp"

namespace rdnc {

// iter, mu_i.., lambda_i.., alpha_i.., beta_i.., c_i.., r_i.., primal_obj,
// dual_obj, max_violation.
CsvTable trace_table(const SolveReport& report, std::size_t sources);

struct PolicyOptions {
  double K = 1.0;
  double p = 0.5;
  double c_min = 0.1;
  double c_max = 2.0;
  std::size_t steps = 20;
};

// Compression policy over a compressed-rate sweep: c, alpha_star, D, s_eff,
// H_D. The breakpoint c = 1/K is always one of the rows when it falls inside
// [c_min, c_max].
CsvTable policy_table(const PolicyOptions& opt);

// point, r1, r2: the region's corner points, the entropy point and the
// compressed-rate pair of the chosen corner.
CsvTable mac_table(const MacScenario& scn, const CornerSolution& corner);

}  // namespace rdnc

#endif  // RDNC_TABLES_HPP
