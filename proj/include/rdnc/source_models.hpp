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

// Rate-distortion functions of memoryless sources and their split into a
// source-entropy term (alpha) and a distortion-offset term (beta), both in
// bits/sec, such that alpha + beta equals the rate-distortion function.
//
//   binary (s, p), Hamming D:     alpha = s H(p),             beta = -s H(D)
//   Gaussian (s, sigma2), MSE D:  alpha = s/2 log2(2 pi e sigma2),
//                                 beta  = -s/2 log2(2 pi e D)

#ifndef RDNC_SOURCE_MODELS_HPP
#define RDNC_SOURCE_MODELS_HPP

#include <variant>

namespace rdnc {

struct BinarySource {
  double s = 1.0;  // symbols/sec
  double p = 0.5;  // Bernoulli parameter, 0 < p < 1
};

struct GaussianSource {
  double s = 1.0;       // symbols/sec
  double sigma2 = 1.0;  // variance
};

using SourceModel = std::variant<BinarySource, GaussianSource>;

// Sign constraints a*alpha >= 0, b*beta <= 0 of the convex program.
struct SignFlags {
  int a = 1;
  int b = 1;
  friend bool operator==(const SignFlags&, const SignFlags&) = default;
};

struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
};

// Throws DomainError if the parameters violate the type invariants.
void validate(const BinarySource& src);
void validate(const GaussianSource& src);
void validate(const SourceModel& src);

SignFlags sign_flags(const SourceModel& src);

double symbol_rate(const SourceModel& src);

// H(p) in bits, with 0 log 0 = 0.
double binary_entropy(double p);

inline constexpr double kInverseEntropyTol = 1e-12;

// The D in [0, 1/2] with H(D) = y, found by bisection.
double inverse_binary_entropy(double y, double tol = kInverseEntropyTol);

// s (H(p) - H(D)), clipped at zero. D in [0, 1/2].
double rd_binary(const BinarySource& src, double distortion);

// s/2 log2(sigma2 / D) for D <= sigma2, zero beyond. D > 0.
double rd_gaussian(const GaussianSource& src, double distortion);

double rate_distortion(const SourceModel& src, double distortion);

// alpha_beta(src, D).alpha + .beta is the unclipped rate-distortion value.
// Gaussian distortions above sigma2 are rejected since they would put beta
// below -alpha.
AlphaBeta alpha_beta(const SourceModel& src, double distortion);

// Source entropy term alone; does not depend on the distortion.
double source_entropy(const SourceModel& src);

// Inverse of the beta map at an effective symbol rate s_eff.
double distortion_from_beta(const SourceModel& src, double beta, double s_eff);

}  // namespace rdnc

#endif  // RDNC_SOURCE_MODELS_HPP
