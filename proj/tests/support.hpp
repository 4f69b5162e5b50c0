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


// Shared fixtures and hand-written reference formulas for the unit tests.
// The references deliberately avoid the library's own helpers.

#ifndef RDNC_TESTS_SUPPORT_HPP
#define RDNC_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "rdnc/dual_orchestrator.hpp"

namespace rdnc::testing {

// -p log2 p - (1-p) log2 (1-p) via natural logs.
inline double ref_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log(p) + (1.0 - p) * std::log1p(-p)) / std::log(2.0);
}

inline double ref_capacity(double power, double noise) {
  return std::log1p(power / noise) / (2.0 * std::log(2.0));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline SourceSpec binary_source(double s, double p, double K, double w) {
  return {BinarySource{s, p}, LogLinear{K}, LogRate{w}};
}

inline SolverOptions tuned_options(double gamma0 = 0.2) {
  SolverOptions opt;
  opt.step = DiminishingStep{gamma0};
  opt.caps = {10.0, 10.0, 1e-9};
  return opt;
}

inline Scenario box_scenario(std::vector<double> caps,
                             std::vector<SourceSpec> sources,
                             double gamma0 = 0.2) {
  return {std::move(sources), BoxRegion{std::move(caps)}, tuned_options(gamma0)};
}

inline Scenario mac_scenario(std::vector<double> powers, double noise,
                             std::vector<SourceSpec> sources,
                             double gamma0 = 0.2) {
  return {std::move(sources), GaussianMacRegion{std::move(powers), noise},
          tuned_options(gamma0)};
}

}  // namespace rdnc::testing

#endif  // RDNC_TESTS_SUPPORT_HPP
