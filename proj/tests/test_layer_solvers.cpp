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


#include <cmath>
#include <random>

#include "doctest.h"
#include "rdnc/errors.hpp"
#include "rdnc/layer_solvers.hpp"
#include "support.hpp"

namespace rdnc {
namespace {

constexpr SignFlags kBinary{1, 1};

double V(double K, double alpha, double beta) {
  return std::log(alpha) + K * beta;
}

// Best point of ln(alpha) + K beta - mu (alpha + beta) on a dense lattice of
// the feasible set alpha in (0, amax], -alpha <= beta <= 0.
double lattice_best(double K, double mu, double amax) {
  double best = -1e300;
  const int n = 2000;
  for (int i = 1; i <= n; ++i) {
    const double a = amax * i / n;
    for (int j = 0; j <= 40; ++j) {
      const double b = -a * j / 40.0;
      best = std::max(best, V(K, a, b) - mu * (a + b));
    }
  }
  return best;
}

TEST_CASE("compression subproblem closed form") {
  const SolverCaps caps{10.0, 10.0, 1e-9};
  AlphaBeta ab = compression_subproblem(LogLinear{2.0}, 1.0, kBinary, caps);
  CHECK(ab.alpha == doctest::Approx(1.0));
  CHECK(ab.beta == 0.0);
  ab = compression_subproblem(LogLinear{1.0}, 2.0, kBinary, caps);
  CHECK(ab.alpha == doctest::Approx(1.0));
  CHECK(ab.beta == doctest::Approx(-1.0));
  ab = compression_subproblem(LogLinear{1.0}, 0.0, kBinary, caps);
  CHECK(ab.alpha == 10.0);
  CHECK(ab.beta == 0.0);
  // The cap binds for small positive prices as well.
  ab = compression_subproblem(LogLinear{1.0}, 0.01, kBinary, caps);
  CHECK(ab.alpha == 10.0);
}

TEST_CASE("compression subproblem against a lattice search") {
  for (double K : {0.3, 1.0, 2.5}) {
    for (double mu : {0.2, 0.9, 1.0, 1.7, 4.0}) {
      const double amax = 8.0;
      const AlphaBeta ab =
          compression_subproblem(LogLinear{K}, mu, kBinary, {amax, 10.0, 1e-9});
      const double got = V(K, ab.alpha, ab.beta) - mu * (ab.alpha + ab.beta);
      CHECK(got >= lattice_best(K, mu, amax) - 1e-9);
      CHECK(ab.beta <= 0.0);
      CHECK(ab.alpha + ab.beta >= -1e-15);
    }
  }
}

TEST_CASE("compression subproblem rejects unsupported inputs") {
  const SolverCaps caps;
  CHECK_THROWS_AS(compression_subproblem(LogLinear{1.0}, 1.0, SignFlags{0, 0}, caps),
                  UnsupportedError);
  CHECK_THROWS_AS(
      compression_subproblem(LinearEntropyPenalty{1.0}, 1.0, kBinary, caps),
      UnsupportedError);
  CHECK_THROWS_AS(compression_subproblem(LogLinear{1.0}, -1.0, kBinary, caps),
                  DomainError);
}

TEST_CASE("congestion subproblem") {
  const SolverCaps caps{10.0, 100.0, 1e-9};
  CHECK(congestion_subproblem(LogRate{1.0}, 2.0, 0.0, caps) == doctest::Approx(0.5));
  CHECK(congestion_subproblem(LogRate{1.0}, 1.0, 1.0, caps) == 100.0);
  CHECK(congestion_subproblem(LogRate{2.0}, 1.5, 0.5, caps) == doctest::Approx(2.0));
  CHECK(congestion_subproblem(LogRate{1.0}, 1e9, 0.0, caps) == 1e-9);
  CHECK(congestion_subproblem(ZeroUtility{}, 2.0, 1.0, caps) == 1e-9);
  CHECK(congestion_subproblem(ZeroUtility{}, 1.0, 2.0, caps) == 100.0);
  CHECK_THROWS_AS(congestion_subproblem(LogRate{1.0}, -1.0, 0.0, caps), DomainError);
}

TEST_CASE("congestion subproblem against a 1-D scan") {
  const SolverCaps caps{10.0, 20.0, 1e-9};
  for (double w : {0.5, 1.0, 3.0}) {
    for (double price : {0.1, 0.5, 2.0, 7.0}) {
      const double c = congestion_subproblem(LogRate{w}, price + 0.3, 0.3, caps);
      const double got = w * std::log(c) - price * c;
      for (int k = 1; k <= 20000; ++k) {
        const double x = 20.0 * k / 20000.0;
        CHECK(got >= w * std::log(x) - price * x - 1e-12);
      }
    }
  }
}

TEST_CASE("compression at a fixed rate") {
  CHECK(compression_given_rate(0.5, 1.0) == 2.0);
  CHECK(compression_given_rate(2.0, 1.0) == 1.0);
  CHECK(compression_given_rate(1.0, 1.0) == 1.0);
  CHECK_THROWS_AS(compression_given_rate(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(compression_given_rate(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(compression_given_rate(1.0, -1.0), DomainError);
}

TEST_CASE("compression at a fixed rate maximizes V on alpha >= c") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const double K = testing::uniform(rng, 0.1, 10.0);
    const double c = testing::uniform(rng, 0.1, 10.0);
    const double a = compression_given_rate(K, c);
    CHECK(a >= c);
    const double got = V(K, a, c - a);
    for (double t = c; t <= c + 20.0; t += 0.01) {
      CHECK(got >= V(K, t, c - t) - 1e-12);
    }
  }
}

TEST_CASE("operating point") {
  // alpha = c = 1 and H(0.5) = 1, so s_eff = c / H(p) = 1.
  OperatingPoint op = operating_point(0.5, 2.0, 1.0);
  CHECK(op.s_eff == doctest::Approx(1.0));
  CHECK(op.distortion == 0.0);
  op = operating_point(0.5, 0.5, 1.0);
  CHECK(op.s_eff == doctest::Approx(2.0));
  CHECK(op.distortion == doctest::Approx(0.110028).epsilon(1e-5));
  op = operating_point(0.5, 1.0, 1.0);
  CHECK(op.s_eff == doctest::Approx(1.0));
  CHECK(op.distortion == 0.0);
  CHECK_THROWS_AS(operating_point(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(operating_point(1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("operating point spends exactly the rate c") {
  for (double p : {0.1, 0.25, 0.5}) {
    for (double c = 0.05; c < 3.0; c += 0.05) {
      const double K = 0.7;
      const OperatingPoint op = operating_point(p, K, c);
      // s_eff (H(p) - H(D)) = c.
      const double spent = op.s_eff * (testing::ref_entropy(p) -
                                       testing::ref_entropy(op.distortion));
      CHECK(spent == doctest::Approx(c).epsilon(1e-9));
    }
  }
}

TEST_CASE("utility evaluation") {
  CHECK(evaluate_V(LogLinear{2.0}, 1.0, -0.5) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(evaluate_V(LogLinear{1.0}, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(evaluate_V(LinearEntropyPenalty{1.0}, 1.0, 0.0), UnsupportedError);
  CHECK(evaluate_U(LogRate{2.0}, std::exp(1.0)) == doctest::Approx(2.0));
  CHECK(evaluate_U(ZeroUtility{}, 5.0) == 0.0);
  CHECK_THROWS_AS(evaluate_U(LogRate{1.0}, 0.0), DomainError);
}

TEST_CASE("utility and cap validation") {
  CHECK_THROWS_AS(validate(UtilityV{LogLinear{0.0}}), DomainError);
  CHECK_THROWS_AS(validate(UtilityV{LinearEntropyPenalty{-1.0}}), DomainError);
  CHECK_THROWS_AS(validate(UtilityU{LogRate{0.0}}), DomainError);
  CHECK_THROWS_AS(validate(SolverCaps{0.0, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(SolverCaps{1.0, 1.0, 1.0}), DomainError);
  CHECK_NOTHROW(validate(SolverCaps{}));
}

}  // namespace
}  // namespace rdnc
