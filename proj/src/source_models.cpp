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

#include "rdnc/source_models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rdnc/errors.hpp"

namespace rdnc {
namespace {

constexpr int kMaxBisectionIters = 200;

const double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

// Residual of entropy evaluations, so y computed as H(D) inverts cleanly.
constexpr double kOffsetSlack = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

void validate(const BinarySource& src) {
  if (!(src.s > 0.0) || !std::isfinite(src.s)) {
    throw DomainError("binary source: s must be > 0, got " +
                      std::to_string(src.s));
  }
  if (!(src.p > 0.0 && src.p < 1.0)) {
    throw DomainError("binary source: p must be in (0,1), got " +
                      std::to_string(src.p));
  }
}

void validate(const GaussianSource& src) {
  if (!(src.s > 0.0) || !std::isfinite(src.s)) {
    throw DomainError("gaussian source: s must be > 0, got " +
                      std::to_string(src.s));
  }
  if (!(src.sigma2 > 0.0) || !std::isfinite(src.sigma2)) {
    throw DomainError("gaussian source: sigma2 must be > 0, got " +
                      std::to_string(src.sigma2));
  }
}

void validate(const SourceModel& src) {
  std::visit([](const auto& s) { validate(s); }, src);
}

SignFlags sign_flags(const SourceModel& src) {
  return std::visit(
      Overloaded{[](const BinarySource&) { return SignFlags{1, 1}; },
                 [](const GaussianSource&) { return SignFlags{0, 0}; }},
      src);
}

double symbol_rate(const SourceModel& src) {
  return std::visit([](const auto& s) { return s.s; }, src);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binary_entropy: p must be in [0,1], got " +
                      std::to_string(p));
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double inverse_binary_entropy(double y, double tol) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw DomainError("inverse_binary_entropy: y must be in [0,1], got " +
                      std::to_string(y));
  }
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  // H is strictly increasing on [0, 1/2].
  double lo = 0.0;
  double hi = 0.5;
  for (int it = 0; it < kMaxBisectionIters && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double rd_binary(const BinarySource& src, double distortion) {
  validate(src);
  if (!(distortion >= 0.0 && distortion <= 0.5)) {
    throw DomainError("rd_binary: D must be in [0,1/2], got " +
                      std::to_string(distortion));
  }
  const double r =
      src.s * (binary_entropy(src.p) - binary_entropy(distortion));
  return r > 0.0 ? r : 0.0;
}

double rd_gaussian(const GaussianSource& src, double distortion) {
  validate(src);
  if (!(distortion > 0.0)) {
    throw DomainError("rd_gaussian: D must be > 0, got " +
                      std::to_string(distortion));
  }
  if (distortion >= src.sigma2) return 0.0;
  return 0.5 * src.s * std::log2(src.sigma2 / distortion);
}

double rate_distortion(const SourceModel& src, double distortion) {
  return std::visit(
      Overloaded{
          [&](const BinarySource& b) { return rd_binary(b, distortion); },
          [&](const GaussianSource& g) { return rd_gaussian(g, distortion); }},
      src);
}

double source_entropy(const SourceModel& src) {
  validate(src);
  return std::visit(
      Overloaded{[](const BinarySource& b) { return b.s * binary_entropy(b.p); },
                 [](const GaussianSource& g) {
                   return 0.5 * g.s * std::log2(kTwoPiE * g.sigma2);
                 }},
      src);
}

AlphaBeta alpha_beta(const SourceModel& src, double distortion) {
  validate(src);
  return std::visit(
      Overloaded{
          [&](const BinarySource& b) {
            if (!(distortion >= 0.0 && distortion <= 0.5)) {
              throw DomainError("alpha_beta: Hamming D must be in [0,1/2], got " +
                                std::to_string(distortion));
            }
            return AlphaBeta{b.s * binary_entropy(b.p),
                             -b.s * binary_entropy(distortion)};
          },
          [&](const GaussianSource& g) {
            if (!(distortion > 0.0)) {
              throw DomainError("alpha_beta: squared-error D must be > 0, got " +
                                std::to_string(distortion));
            }
            if (distortion > g.sigma2) {
              throw DomainError(
                  "alpha_beta: D above sigma2 puts beta below -alpha");
            }
            return AlphaBeta{0.5 * g.s * std::log2(kTwoPiE * g.sigma2),
                             -0.5 * g.s * std::log2(kTwoPiE * distortion)};
          }},
      src);
}

double distortion_from_beta(const SourceModel& src, double beta, double s_eff) {
  validate(src);
  if (!(s_eff > 0.0)) {
    throw DomainError("distortion_from_beta: s_eff must be > 0, got " +
                      std::to_string(s_eff));
  }
  return std::visit(
      Overloaded{[&](const BinarySource&) {
                   double y = -beta / s_eff;
                   if (y < -kOffsetSlack || y > 1.0 + kOffsetSlack) {
                     throw InfeasibleOffsetError(
                         "distortion_from_beta: -beta/s_eff = " +
                         std::to_string(y) + " is outside [0,1]");
                   }
                   y = std::fmin(std::fmax(y, 0.0), 1.0);
                   return inverse_binary_entropy(y);
                 },
                 [&](const GaussianSource&) {
                   return std::exp2(-2.0 * beta / s_eff) / kTwoPiE;
                 }},
      src);
}

}  // namespace rdnc
