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

// Per-layer subproblems obtained by pricing the rate-distortion constraint
// alpha + beta <= c with mu and the capacity constraint c <= r with lambda:
//
//   compression (application layer):  max V(alpha, beta) - mu (alpha + beta)
//   congestion  (transport layer):     max U(c) - (lambda - mu) c
//   scheduling  (network layer):       max sum lambda_i r_i over the region
//
// Scheduling lives in rate_region.hpp (max_weight). The utilities come from a
// closed catalog so each subproblem has an exact solution.

#ifndef RDNC_LAYER_SOLVERS_HPP
#define RDNC_LAYER_SOLVERS_HPP

#include <variant>

#include "rdnc/source_models.hpp"

namespace rdnc {

// V(alpha, beta) = ln(alpha) + K beta.
struct LogLinear {
  double K = 1.0;
};

// V(D) = -delta H(D); only meaningful for the MAC distortion program.
struct LinearEntropyPenalty {
  double delta = 1.0;
};

using UtilityV = std::variant<LogLinear, LinearEntropyPenalty>;

// U(c) = w ln(c).
struct LogRate {
  double w = 1.0;
};

struct ZeroUtility {};

using UtilityU = std::variant<LogRate, ZeroUtility>;

// Bounds that keep subproblems finite at zero or inverted prices.
struct SolverCaps {
  double alpha_max = 1e6;
  double c_max = 1e6;
  double c_min = 1e-9;
};

void validate(const UtilityV& v);
void validate(const UtilityU& u);
void validate(const SolverCaps& caps);

// Throws DomainError for alpha <= 0, UnsupportedError for the entropy penalty.
double evaluate_V(const UtilityV& v, double alpha, double beta);
double evaluate_U(const UtilityU& u, double c);

AlphaBeta compression_subproblem(const UtilityV& v, double mu, SignFlags flags,
                                 const SolverCaps& caps);

double congestion_subproblem(const UtilityU& u, double lambda, double mu,
                             const SolverCaps& caps);

// Best source entropy for a known compressed rate c:
// max ln(alpha) + K (c - alpha) s.t. alpha >= c.
double compression_given_rate(double K, double c);

struct OperatingPoint {
  double s_eff = 0.0;       // symbols/sec the source should emit
  double distortion = 0.0;  // Hamming distortion
};

// Free-symbol-rate reading of compression_given_rate for a Bernoulli(p)
// source: alpha = s H(p) fixes s, beta = c - alpha fixes D.
OperatingPoint operating_point(double p, double K, double c);

}  // namespace rdnc

#endif  // RDNC_LAYER_SOLVERS_HPP
