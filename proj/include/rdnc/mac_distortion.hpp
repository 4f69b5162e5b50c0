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

// Distortion control for two Bernoulli sources sharing a Gaussian MAC.
//
// With V_i(D_i) = -delta_i H(D_i) and x_i = s_i H(D_i) the program becomes the
// two-variable LP
//
//   min  (delta_1/s_1) x_1 + (delta_2/s_2) x_2
//   s.t. x_i >= s_i H(p_i) - C(P_i)
//        x_1 + x_2 >= s_1 H(p_1) + s_2 H(p_2) - C(P_1 + P_2)
//        0 <= x_i <= s_i
//
// solve_corner gives the optimum in closed form: lossless coding when the
// entropy point is achievable, otherwise a corner of the sum-capacity face
// picked by the larger weight delta_i / s_i. lp_oracle enumerates vertices of
// the polytope and is kept independent of it.

#ifndef RDNC_MAC_DISTORTION_HPP
#define RDNC_MAC_DISTORTION_HPP

#include <array>
#include <span>

#include "rdnc/rate_region.hpp"
#include "rdnc/source_models.hpp"

namespace rdnc {

struct MacScenario {
  std::array<BinarySource, 2> sources;
  std::array<double, 2> powers{0.0, 0.0};
  double noise = 1.0;
  std::array<double, 2> delta{1.0, 1.0};
};

void validate(const MacScenario& scn);

GaussianMacRegion mac_region(const MacScenario& scn);

enum class MacCase { kLossless, kSumCapacityCorner };

inline char case_label(MacCase c) {
  return c == MacCase::kLossless ? 'A' : 'B';
}

struct CornerSolution {
  MacCase kase = MacCase::kLossless;
  std::array<double, 2> distortion{0.0, 0.0};
  std::array<double, 2> x{0.0, 0.0};  // s_i H(D_i)
  double objective = 0.0;
};

struct LpSolution {
  std::array<double, 2> x{0.0, 0.0};
  double objective = 0.0;
};

// (s_1 H(p_1), s_2 H(p_2)).
std::array<double, 2> entropy_point(const MacScenario& scn);

CornerSolution solve_corner(const MacScenario& scn);

LpSolution lp_oracle(const MacScenario& scn);

// Both routes over a batch; the parallel kernel and its serial reference
// must return identical results.
struct MacBatchCheck {
  double max_objective_diff = 0.0;
  std::size_t case_mismatches = 0;
  std::size_t worst_index = 0;
};

MacBatchCheck cross_check_batch(std::span<const MacScenario> batch);
MacBatchCheck cross_check_batch_serial(std::span<const MacScenario> batch);

}  // namespace rdnc

#endif  // RDNC_MAC_DISTORTION_HPP
