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

#include "rdnc/layer_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdnc/errors.hpp"

namespace rdnc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be > 0, got " +
                      std::to_string(x));
  }
}

}  // namespace

void validate(const UtilityV& v) {
  std::visit(Overloaded{[](const LogLinear& u) { require_positive(u.K, "K"); },
                        [](const LinearEntropyPenalty& u) {
                          require_positive(u.delta, "delta");
                        }},
             v);
}

void validate(const UtilityU& u) {
  std::visit(Overloaded{[](const LogRate& r) { require_positive(r.w, "w"); },
                        [](const ZeroUtility&) {}},
             u);
}

void validate(const SolverCaps& caps) {
  require_positive(caps.alpha_max, "alpha_max");
  require_positive(caps.c_max, "c_max");
  if (!(caps.c_min >= 0.0)) {
    throw DomainError("c_min must be >= 0, got " + std::to_string(caps.c_min));
  }
  if (!(caps.c_min < caps.c_max)) {
    throw DomainError("c_min must be < c_max");
  }
}

double evaluate_V(const UtilityV& v, double alpha, double beta) {
  return std::visit(
      Overloaded{[&](const LogLinear& u) {
                   if (!(alpha > 0.0)) {
                     throw DomainError("V = ln(alpha) + K beta undefined at alpha = " +
                                       std::to_string(alpha));
                   }
                   return std::log(alpha) + u.K * beta;
                 },
                 [](const LinearEntropyPenalty&) -> double {
                   throw UnsupportedError(
                       "entropy-penalty utility is defined on distortion, not "
                       "on (alpha, beta)");
                 }},
      v);
}

double evaluate_U(const UtilityU& u, double c) {
  return std::visit(Overloaded{[&](const LogRate& r) {
                                 if (!(c > 0.0)) {
                                   throw DomainError(
                                       "U = w ln(c) undefined at c = " +
                                       std::to_string(c));
                                 }
                                 return r.w * std::log(c);
                               },
                               [](const ZeroUtility&) { return 0.0; }},
                    u);
}

AlphaBeta compression_subproblem(const UtilityV& v, double mu, SignFlags flags,
                                 const SolverCaps& caps) {
  if (!(mu >= 0.0)) {
    throw DomainError("compression_subproblem: mu must be >= 0, got " +
                      std::to_string(mu));
  }
  const auto* loglin = std::get_if<LogLinear>(&v);
  if (loglin == nullptr) {
    throw UnsupportedError(
        "compression_subproblem: only the log-linear utility is supported");
  }
  if (flags != SignFlags{1, 1}) {
    throw UnsupportedError(
        "compression_subproblem: log-linear utility requires binary sign flags "
        "(a, b) = (1, 1)");
  }
  const double K = loglin->K;
  if (mu == 0.0) return {caps.alpha_max, 0.0};
  if (mu <= K) return {std::min(1.0 / mu, caps.alpha_max), 0.0};
  // beta carries the negative coefficient K - mu, so alpha + beta >= 0 binds
  // and the remaining objective ln(alpha) - K alpha peaks at 1/K.
  const double alpha = std::min(1.0 / K, caps.alpha_max);
  return {alpha, -alpha};
}

double congestion_subproblem(const UtilityU& u, double lambda, double mu,
                             const SolverCaps& caps) {
  if (!(lambda >= 0.0) || !(mu >= 0.0)) {
    throw DomainError("congestion_subproblem: duals must be >= 0");
  }
  const double price = lambda - mu;
  return std::visit(
      Overloaded{[&](const LogRate& r) {
                   if (price <= 0.0) return caps.c_max;
                   return std::clamp(r.w / price, caps.c_min, caps.c_max);
                 },
                 [&](const ZeroUtility&) {
                   return price > 0.0 ? caps.c_min : caps.c_max;
                 }},
      u);
}

double compression_given_rate(double K, double c) {
  require_positive(K, "compression_given_rate: K");
  require_positive(c, "compression_given_rate: c");
  const double unconstrained = 1.0 / K;
  return unconstrained >= c ? unconstrained : c;
}

OperatingPoint operating_point(double p, double K, double c) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("operating_point: p must be in (0,1), got " +
                      std::to_string(p));
  }
  const double alpha = compression_given_rate(K, c);
  const double hp = binary_entropy(p);
  if (1.0 / K >= c) {
    // H(D) / H(p) = 1 - cK; at the breakpoint c = 1/K the product may round
    // to either side of 1, and offsets below the inversion tolerance mean
    // lossless coding.
    double y = hp * (1.0 - c * K);
    if (y < -kInverseEntropyTol || y > 1.0) {
      throw InfeasibleOffsetError("operating_point: H(D) = " +
                                  std::to_string(y) + " is outside [0,1]");
    }
    if (y <= kInverseEntropyTol) y = 0.0;
    return {alpha / hp, inverse_binary_entropy(y)};
  }
  return {c / hp, 0.0};
}

}  // namespace rdnc
