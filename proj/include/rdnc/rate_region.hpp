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

// Convex link-rate regions and MaxWeight scheduling over them.
//
// Three families are provided:
//  * BoxRegion          decoupled links, 0 <= r_i <= caps_i.
//  * GaussianMacRegion  the Gaussian multiple-access capacity region,
//                       sum_{i in S} r_i <= C(sum_{i in S} P_i) for all S.
//  * VertexRegion       convex hull of a finite set of rate vectors
//                       (time sharing between schedules).
//
// MaxWeight returns a maximizer of sum_i lambda_i r_i. Ties are resolved the
// same way on every call: descending weight, then ascending user index.

#ifndef RDNC_RATE_REGION_HPP
#define RDNC_RATE_REGION_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace rdnc {

inline constexpr std::size_t kMaxMacUsers = 16;

struct BoxRegion {
  std::vector<double> caps;
};

struct GaussianMacRegion {
  std::vector<double> powers;
  double noise = 1.0;
};

struct VertexRegion {
  std::vector<std::vector<double>> vertices;
};

using RateRegion = std::variant<BoxRegion, GaussianMacRegion, VertexRegion>;

// Shannon capacity 1/2 log2(1 + P/N).
double capacity_C(double power, double noise);

void validate(const RateRegion& region);

std::size_t dimension(const RateRegion& region);

// Amount by which `rates` fails the region's defining constraints (0 inside).
// For a VertexRegion this is the L1 distance to the hull.
double violation(const RateRegion& region, std::span<const double> rates);

// violation(region, rates) <= tol.
bool contains(const RateRegion& region, std::span<const double> rates,
              double tol);

std::vector<double> max_weight(const RateRegion& region,
                               std::span<const double> weights);

// Serving order used by the MAC greedy: descending weight, ascending index.
std::vector<std::size_t> service_order(std::span<const double> weights);

// Polymatroid vertex obtained by serving users in `order`.
std::vector<double> mac_vertex(const GaussianMacRegion& mac,
                               std::span<const std::size_t> order);

// L1 distance from `point` to the convex hull of `vertices`, solved as a
// small LP by the simplex method.
double hull_distance_l1(const std::vector<std::vector<double>>& vertices,
                        std::span<const double> point);

}  // namespace rdnc

#endif  // RDNC_RATE_REGION_HPP
