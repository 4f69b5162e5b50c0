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

#include "rdnc/tables.hpp"

#include <algorithm>
#include <string>

#include "rdnc/errors.hpp"
#include "rdnc/layer_solvers.hpp"
#include "rdnc/rate_region.hpp"
#include "rdnc/source_models.hpp"

namespace rdnc {

CsvTable trace_table(const SolveReport& report, std::size_t sources) {
  CsvTable table;
  table.header.push_back("iter");
  for (const char* name : {"mu", "lambda", "alpha", "beta", "c", "r"}) {
    for (std::size_t i = 0; i < sources; ++i) {
      table.header.push_back(std::string(name) + "_" + std::to_string(i));
    }
  }
  table.header.insert(table.header.end(),
                      {"primal_obj", "dual_obj", "max_violation"});

  for (const TraceEntry& e : report.trace) {
    std::vector<CsvCell> row;
    row.reserve(table.header.size());
    row.push_back(num(static_cast<double>(e.iter)));
    for (const auto* vec : {&e.dual.mu, &e.dual.lambda, &e.primal.alpha,
                            &e.primal.beta, &e.primal.c, &e.primal.r}) {
      for (double v : *vec) row.push_back(num(v));
    }
    row.push_back(num(e.primal_obj));
    row.push_back(num(e.dual_obj));
    row.push_back(num(e.max_violation));
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable policy_table(const PolicyOptions& opt) {
  if (!(opt.K > 0.0)) throw DomainError("policy: K must be > 0");
  if (!(opt.p > 0.0 && opt.p < 1.0)) throw DomainError("policy: p must be in (0,1)");
  if (!(opt.c_min > 0.0 && opt.c_min < opt.c_max)) {
    throw DomainError("policy: need 0 < c_min < c_max");
  }
  if (opt.steps < 2) throw DomainError("policy: steps must be >= 2");

  std::vector<double> grid;
  for (std::size_t k = 0; k < opt.steps; ++k) {
    grid.push_back(opt.c_min + (opt.c_max - opt.c_min) *
                                   (static_cast<double>(k) /
                                    static_cast<double>(opt.steps - 1)));
  }
  const double breakpoint = 1.0 / opt.K;
  if (breakpoint >= opt.c_min && breakpoint <= opt.c_max &&
      std::find(grid.begin(), grid.end(), breakpoint) == grid.end()) {
    grid.insert(std::upper_bound(grid.begin(), grid.end(), breakpoint),
                breakpoint);
  }

  CsvTable table;
  table.header = {"c", "alpha_star", "D", "s_eff", "H_D"};
  for (double c : grid) {
    const double alpha = compression_given_rate(opt.K, c);
    const OperatingPoint op = operating_point(opt.p, opt.K, c);
    table.add_row({num(c), num(alpha), num(op.distortion), num(op.s_eff),
                   num(binary_entropy(op.distortion))});
  }
  return table;
}

CsvTable mac_table(const MacScenario& scn, const CornerSolution& corner) {
  const double c1 = capacity_C(scn.powers[0], scn.noise);
  const double c2 = capacity_C(scn.powers[1], scn.noise);
  const double c12 = capacity_C(scn.powers[0] + scn.powers[1], scn.noise);
  const auto h = entropy_point(scn);

  CsvTable table;
  table.header = {"point", "r1", "r2"};
  const double corners[5][2] = {
      {0.0, 0.0}, {c1, 0.0}, {c1, c12 - c1}, {c12 - c2, c2}, {0.0, c2}};
  for (int k = 0; k < 5; ++k) {
    table.add_row({label("corner_" + std::to_string(k)), num(corners[k][0]),
                   num(corners[k][1])});
  }
  table.add_row({label("entropy"), num(h[0]), num(h[1])});
  table.add_row({label("chosen"), num(h[0] - corner.x[0]),
                 num(h[1] - corner.x[1])});
  return table;
}

}  // namespace rdnc
