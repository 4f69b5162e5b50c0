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

#include "rdnc/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace rdnc {
namespace {

using nlohmann::json;

enum class Bound { kAny, kPositive, kNonNegative, kOpenUnit };

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void only_keys(const json& obj, const std::string& path,
               std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw SchemaError(child(path, key), "unknown key");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(path, key), "missing required key");
  return *it;
}

double as_number(const json& v, const std::string& path, Bound bound) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SchemaError(path, "must be finite");
  switch (bound) {
    case Bound::kPositive:
      if (!(x > 0.0)) throw SchemaError(path, "must be > 0");
      break;
    case Bound::kNonNegative:
      if (!(x >= 0.0)) throw SchemaError(path, "must be >= 0");
      break;
    case Bound::kOpenUnit:
      if (!(x > 0.0 && x < 1.0)) throw SchemaError(path, "must be in (0,1)");
      break;
    case Bound::kAny:
      break;
  }
  return x;
}

double number_at(const json& obj, const std::string& path, const char* key,
                 Bound bound) {
  return as_number(require(obj, path, key), child(path, key), bound);
}

std::vector<double> numbers_at(const json& obj, const std::string& path,
                               const char* key, Bound bound) {
  const json& arr = require(obj, path, key);
  const std::string p = child(path, key);
  if (!arr.is_array() || arr.empty()) {
    throw SchemaError(p, "expected a non-empty array of numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_number(arr[i], item(p, i), bound));
  }
  return out;
}

std::string kind_of(const json& obj, const std::string& path) {
  const json& k = require(obj, path, "kind");
  if (!k.is_string()) throw SchemaError(child(path, "kind"), "expected a string");
  return k.get<std::string>();
}

UtilityV parse_V(const json& obj, const std::string& path) {
  const std::string kind = kind_of(obj, path);
  if (kind == "log_linear") {
    only_keys(obj, path, {"kind", "K"});
    return LogLinear{number_at(obj, path, "K", Bound::kPositive)};
  }
  if (kind == "linear_entropy_penalty") {
    only_keys(obj, path, {"kind", "delta"});
    return LinearEntropyPenalty{number_at(obj, path, "delta", Bound::kPositive)};
  }
  throw SchemaError(child(path, "kind"),
                    "expected \"log_linear\" or \"linear_entropy_penalty\"");
}

UtilityU parse_U(const json& obj, const std::string& path) {
  const std::string kind = kind_of(obj, path);
  if (kind == "log_rate") {
    only_keys(obj, path, {"kind", "w"});
    return LogRate{number_at(obj, path, "w", Bound::kPositive)};
  }
  if (kind == "zero") {
    only_keys(obj, path, {"kind"});
    return ZeroUtility{};
  }
  throw SchemaError(child(path, "kind"), "expected \"log_rate\" or \"zero\"");
}

SourceSpec parse_source(const json& obj, const std::string& path) {
  const std::string kind = kind_of(obj, path);
  SourceSpec spec;
  if (kind == "binary") {
    only_keys(obj, path, {"kind", "s", "p", "V", "U"});
    spec.model = BinarySource{number_at(obj, path, "s", Bound::kPositive),
                              number_at(obj, path, "p", Bound::kOpenUnit)};
  } else if (kind == "gaussian") {
    only_keys(obj, path, {"kind", "s", "sigma2", "V", "U"});
    spec.model = GaussianSource{number_at(obj, path, "s", Bound::kPositive),
                                number_at(obj, path, "sigma2", Bound::kPositive)};
  } else {
    throw SchemaError(child(path, "kind"), "expected \"binary\" or \"gaussian\"");
  }
  spec.V = parse_V(require(obj, path, "V"), child(path, "V"));
  spec.U = parse_U(require(obj, path, "U"), child(path, "U"));
  return spec;
}

RateRegion parse_region(const json& obj, const std::string& path) {
  const std::string kind = kind_of(obj, path);
  if (kind == "box") {
    only_keys(obj, path, {"kind", "caps"});
    return BoxRegion{numbers_at(obj, path, "caps", Bound::kNonNegative)};
  }
  if (kind == "mac") {
    only_keys(obj, path, {"kind", "powers", "noise"});
    GaussianMacRegion mac{numbers_at(obj, path, "powers", Bound::kNonNegative),
                          number_at(obj, path, "noise", Bound::kPositive)};
    if (mac.powers.size() > kMaxMacUsers) {
      throw SchemaError(child(path, "powers"), "at most 16 users supported");
    }
    return mac;
  }
  if (kind == "vertices") {
    only_keys(obj, path, {"kind", "vertices"});
    const json& arr = require(obj, path, "vertices");
    const std::string p = child(path, "vertices");
    if (!arr.is_array() || arr.empty()) {
      throw SchemaError(p, "expected a non-empty array of rate vectors");
    }
    VertexRegion vr;
    for (std::size_t j = 0; j < arr.size(); ++j) {
      const std::string pj = item(p, j);
      if (!arr[j].is_array() || arr[j].empty()) {
        throw SchemaError(pj, "expected a non-empty array of numbers");
      }
      std::vector<double> v;
      for (std::size_t k = 0; k < arr[j].size(); ++k) {
        v.push_back(as_number(arr[j][k], item(pj, k), Bound::kNonNegative));
      }
      if (j > 0 && v.size() != vr.vertices.front().size()) {
        throw SchemaError(pj, "vertex dimension differs from the first vertex");
      }
      vr.vertices.push_back(std::move(v));
    }
    return vr;
  }
  throw SchemaError(child(path, "kind"),
                    "expected \"box\", \"mac\" or \"vertices\"");
}

SolverOptions parse_solver(const json& obj, const std::string& path) {
  only_keys(obj, path, {"step", "max_iters", "tol_feas", "tol_gap", "caps"});
  SolverOptions opt;
  if (obj.contains("step")) {
    const json& st = obj["step"];
    const std::string sp = child(path, "step");
    const std::string kind = kind_of(st, sp);
    only_keys(st, sp, {"kind", "gamma0"});
    const double g = number_at(st, sp, "gamma0", Bound::kPositive);
    if (kind == "constant") {
      opt.step = ConstantStep{g};
    } else if (kind == "diminishing") {
      opt.step = DiminishingStep{g};
    } else {
      throw SchemaError(child(sp, "kind"),
                        "expected \"constant\" or \"diminishing\"");
    }
  }
  if (obj.contains("max_iters")) {
    const json& m = obj["max_iters"];
    if (!m.is_number_integer() || m.get<long long>() < 1) {
      throw SchemaError(child(path, "max_iters"), "must be an integer >= 1");
    }
    opt.max_iters = m.get<std::size_t>();
  }
  if (obj.contains("tol_feas")) {
    opt.tol_feas = number_at(obj, path, "tol_feas", Bound::kPositive);
  }
  if (obj.contains("tol_gap")) {
    opt.tol_gap = number_at(obj, path, "tol_gap", Bound::kPositive);
  }
  if (obj.contains("caps")) {
    const json& caps = obj["caps"];
    const std::string cp = child(path, "caps");
    only_keys(caps, cp, {"alpha_max", "c_max", "c_min"});
    if (caps.contains("alpha_max")) {
      opt.caps.alpha_max = number_at(caps, cp, "alpha_max", Bound::kPositive);
    }
    if (caps.contains("c_max")) {
      opt.caps.c_max = number_at(caps, cp, "c_max", Bound::kPositive);
    }
    if (caps.contains("c_min")) {
      opt.caps.c_min = number_at(caps, cp, "c_min", Bound::kNonNegative);
    }
    if (!(opt.caps.c_min < opt.caps.c_max)) {
      throw SchemaError(child(cp, "c_min"), "must be < c_max");
    }
  }
  return opt;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C".
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw SchemaError("", "cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  const json doc = parse_json(json_text);
  only_keys(doc, "", {"sources", "region", "solver"});
  Scenario scn;
  const json& sources = require(doc, "", "sources");
  if (!sources.is_array() || sources.empty()) {
    throw SchemaError("sources", "expected a non-empty array");
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    scn.sources.push_back(parse_source(sources[i], item("sources", i)));
  }
  scn.region = parse_region(require(doc, "", "region"), "region");
  if (dimension(scn.region) != scn.sources.size()) {
    throw SchemaError("region", "dimension " +
                                    std::to_string(dimension(scn.region)) +
                                    " does not match " +
                                    std::to_string(scn.sources.size()) +
                                    " sources");
  }
  if (doc.contains("solver")) scn.options = parse_solver(doc["solver"], "solver");
  return scn;
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario(read_file(path));
}

MacScenario parse_mac_scenario(std::string_view json_text) {
  const json doc = parse_json(json_text);
  only_keys(doc, "", {"sources", "powers", "noise", "delta"});
  MacScenario scn;
  const json& sources = require(doc, "", "sources");
  if (!sources.is_array() || sources.size() != 2) {
    throw SchemaError("sources", "expected exactly 2 binary sources");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string p = item("sources", i);
    only_keys(sources[i], p, {"s", "p"});
    scn.sources[i] = BinarySource{number_at(sources[i], p, "s", Bound::kPositive),
                                  number_at(sources[i], p, "p", Bound::kOpenUnit)};
  }
  const auto powers = numbers_at(doc, "", "powers", Bound::kNonNegative);
  const auto delta = numbers_at(doc, "", "delta", Bound::kPositive);
  if (powers.size() != 2) throw SchemaError("powers", "expected 2 entries");
  if (delta.size() != 2) throw SchemaError("delta", "expected 2 entries");
  scn.powers = {powers[0], powers[1]};
  scn.delta = {delta[0], delta[1]};
  scn.noise = number_at(doc, "", "noise", Bound::kPositive);
  return scn;
}

MacScenario load_mac_scenario(const std::string& path) {
  return parse_mac_scenario(read_file(path));
}

}  // namespace rdnc
