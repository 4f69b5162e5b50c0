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

#include "rdnc/mac_distortion.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "rdnc/errors.hpp"

namespace rdnc {
namespace {

constexpr double kMembershipTol = 1e-12;
constexpr double kFeasTol = 1e-12;

double positive_part(double v) { return v > 0.0 ? v : 0.0; }

struct Capacities {
  double first = 0.0;
  double second = 0.0;
  double sum = 0.0;
};

Capacities capacities(const MacScenario& scn) {
  return {capacity_C(scn.powers[0], scn.noise),
          capacity_C(scn.powers[1], scn.noise),
          capacity_C(scn.powers[0] + scn.powers[1], scn.noise)};
}

std::array<double, 2> weights(const MacScenario& scn) {
  return {scn.delta[0] / scn.sources[0].s, scn.delta[1] / scn.sources[1].s};
}

bool lp_feasible(const MacScenario& scn, const std::array<double, 2>& x,
                 const std::array<double, 2>& h, const Capacities& cap,
                 double tol) {
  const double c_single[2] = {cap.first, cap.second};
  for (int i = 0; i < 2; ++i) {
    if (x[i] < h[i] - c_single[i] - tol) return false;
    if (x[i] < -tol || x[i] > scn.sources[i].s + tol) return false;
  }
  return x[0] + x[1] >= h[0] + h[1] - cap.sum - tol;
}

struct PairCheck {
  double diff = 0.0;
  bool case_mismatch = false;
};

PairCheck check_one(const MacScenario& scn) {
  const CornerSolution corner = solve_corner(scn);
  const LpSolution lp = lp_oracle(scn);
  const bool oracle_lossless =
      std::fabs(lp.x[0]) <= kFeasTol && std::fabs(lp.x[1]) <= kFeasTol;
  return {std::fabs(corner.objective - lp.objective),
          oracle_lossless != (corner.kase == MacCase::kLossless)};
}

MacBatchCheck reduce(const std::vector<PairCheck>& checks) {
  MacBatchCheck out;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (checks[k].diff > out.max_objective_diff) {
      out.max_objective_diff = checks[k].diff;
      out.worst_index = k;
    }
    if (checks[k].case_mismatch) ++out.case_mismatches;
  }
  return out;
}

}  // namespace

void validate(const MacScenario& scn) {
  for (int i = 0; i < 2; ++i) {
    validate(scn.sources[i]);
    if (!(scn.powers[i] >= 0.0) || !std::isfinite(scn.powers[i])) {
      throw DomainError("mac scenario: powers[" + std::to_string(i) +
                        "] must be >= 0");
    }
    if (!(scn.delta[i] > 0.0) || !std::isfinite(scn.delta[i])) {
      throw DomainError("mac scenario: delta[" + std::to_string(i) +
                        "] must be > 0");
    }
  }
  if (!(scn.noise > 0.0)) throw DomainError("mac scenario: noise must be > 0");
}

GaussianMacRegion mac_region(const MacScenario& scn) {
  return GaussianMacRegion{{scn.powers[0], scn.powers[1]}, scn.noise};
}

std::array<double, 2> entropy_point(const MacScenario& scn) {
  return {scn.sources[0].s * binary_entropy(scn.sources[0].p),
          scn.sources[1].s * binary_entropy(scn.sources[1].p)};
}

CornerSolution solve_corner(const MacScenario& scn) {
  validate(scn);
  const auto h = entropy_point(scn);
  const Capacities cap = capacities(scn);
  const auto w = weights(scn);

  CornerSolution out;
  if (contains(RateRegion{mac_region(scn)}, h, kMembershipTol)) {
    out.kase = MacCase::kLossless;
    return out;
  }
  out.kase = MacCase::kSumCapacityCorner;

  // The user with the larger weight is decoded last and gets its full
  // single-user capacity, or its entropy rate if that is smaller; the other
  // user takes what is left of the sum capacity.
  const std::size_t first = w[0] >= w[1] ? 0 : 1;
  const std::size_t second = 1 - first;
  const double c_single[2] = {cap.first, cap.second};
  out.x[first] = positive_part(h[first] - c_single[first]);
  const double first_rate = h[first] - out.x[first];
  out.x[second] = positive_part(
      h[second] - std::min(c_single[second], cap.sum - first_rate));

  if (!lp_feasible(scn, out.x, h, cap, kFeasTol)) {
    throw InconsistencyError("solve_corner: corner point is not LP-feasible");
  }
  for (int i = 0; i < 2; ++i) {
    const double y = std::clamp(out.x[i] / scn.sources[i].s, 0.0, 1.0);
    out.distortion[i] = inverse_binary_entropy(y);
  }
  out.objective = w[0] * out.x[0] + w[1] * out.x[1];
  return out;
}

LpSolution lp_oracle(const MacScenario& scn) {
  validate(scn);
  const auto h = entropy_point(scn);
  const Capacities cap = capacities(scn);
  const auto w = weights(scn);

  // Every constraint as a line a1 x1 + a2 x2 = b.
  struct Line {
    double a1, a2, b;
  };
  const Line lines[] = {
      {1.0, 0.0, h[0] - cap.first},
      {0.0, 1.0, h[1] - cap.second},
      {1.0, 1.0, h[0] + h[1] - cap.sum},
      {1.0, 0.0, 0.0},
      {1.0, 0.0, scn.sources[0].s},
      {0.0, 1.0, 0.0},
      {0.0, 1.0, scn.sources[1].s},
  };
  constexpr std::size_t kLines = sizeof(lines) / sizeof(lines[0]);
  const double tol = kFeasTol * (1.0 + scn.sources[0].s + scn.sources[1].s);

  bool found = false;
  LpSolution best;
  for (std::size_t i = 0; i < kLines; ++i) {
    for (std::size_t j = i + 1; j < kLines; ++j) {
      const Line& u = lines[i];
      const Line& v = lines[j];
      const double det = u.a1 * v.a2 - u.a2 * v.a1;
      if (det == 0.0) continue;
      const std::array<double, 2> x{(u.b * v.a2 - u.a2 * v.b) / det,
                                    (u.a1 * v.b - u.b * v.a1) / det};
      if (!lp_feasible(scn, x, h, cap, tol)) continue;
      const double obj = w[0] * x[0] + w[1] * x[1];
      const double eps = 1e-14 * (1.0 + std::fabs(best.objective));
      if (!found || obj < best.objective - eps ||
          (std::fabs(obj - best.objective) <= eps && x < best.x)) {
        best = {x, obj};
        found = true;
      }
    }
  }
  if (!found) throw InfeasibleError("lp_oracle: empty feasible set");
  return best;
}

MacBatchCheck cross_check_batch_serial(std::span<const MacScenario> batch) {
  std::vector<PairCheck> checks(batch.size());
  for (std::size_t k = 0; k < batch.size(); ++k) checks[k] = check_one(batch[k]);
  return reduce(checks);
}

MacBatchCheck cross_check_batch(std::span<const MacScenario> batch) {
  std::vector<PairCheck> checks(batch.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      checks[k] = check_one(batch[k]);
    } catch (...) {
#pragma omp critical(rdnc_mac_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce(checks);
}

}  // namespace rdnc
