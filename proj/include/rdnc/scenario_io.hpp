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

// JSON scenario files. Unknown keys are rejected and every error names the
// offending field as a path such as `region.powers[1]`.
//
// Network scenario:
//   {
//     "sources": [{"kind": "binary", "s": 1, "p": 0.5,
//                  "V": {"kind": "log_linear", "K": 1},
//                  "U": {"kind": "log_rate", "w": 1}}],
//     "region": {"kind": "box", "caps": [2]},
//     "solver": {"step": {"kind": "diminishing", "gamma0": 0.3},
//                "max_iters": 50000, "tol_feas": 1e-6, "tol_gap": 1e-3,
//                "caps": {"alpha_max": 10, "c_max": 10, "c_min": 1e-9}}
//   }
//
// Source kinds: "binary" (s, p) and "gaussian" (s, sigma2). V kinds:
// "log_linear" (K) and "linear_entropy_penalty" (delta). U kinds: "log_rate"
// (w) and "zero". Region kinds: "box" (caps), "mac" (powers, noise) and
// "vertices" (vertices). "solver" and all of its keys are optional.
//
// MAC distortion scenario:
//   {"sources": [{"s": 1, "p": 0.5}, {"s": 1, "p": 0.5}],
//    "powers": [3, 3], "noise": 1, "delta": [2, 1]}

#ifndef RDNC_SCENARIO_IO_HPP
#define RDNC_SCENARIO_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "rdnc/dual_orchestrator.hpp"
#include "rdnc/mac_distortion.hpp"

namespace rdnc {

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message
                                         : "field `" + field + "`: " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::string& path);

MacScenario parse_mac_scenario(std::string_view json_text);
MacScenario load_mac_scenario(const std::string& path);

}  // namespace rdnc

#endif  // RDNC_SCENARIO_IO_HPP
