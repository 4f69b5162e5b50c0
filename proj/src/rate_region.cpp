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

#include "rdnc/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "rdnc/errors.hpp"

namespace rdnc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_dimension(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + ": expected dimension " +
                         std::to_string(expected) + ", got " +
                         std::to_string(got));
  }
}

void check_weights(std::span<const double> weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) {
      throw DomainError("max_weight: weight " + std::to_string(i) +
                        " must be >= 0, got " + std::to_string(weights[i]));
    }
  }
}

// Dense tableau simplex for  min c.x  s.t.  A x = b, x >= 0, b >= 0, with a
// feasible starting basis supplied by the caller. Bland's rule, so it
// terminates on degenerate problems.
class Tableau {
 public:
  Tableau(std::vector<std::vector<double>> a, std::vector<double> b,
          std::vector<double> c, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
        basis_(std::move(basis)) {}

  double minimize() {
    constexpr double kEps = 1e-13;
    const std::size_t rows = a_.size();
    const std::size_t cols = c_.size();
    for (int iter = 0; iter < 100000; ++iter) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (reduced_cost(j) < -kEps) {
          enter = j;
          break;
        }
      }
      if (enter == cols) break;
      std::size_t leave = rows;
      double best_ratio = 0.0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (a_[r][enter] > kEps) {
          const double ratio = b_[r] / a_[r][enter];
          if (leave == rows || ratio < best_ratio ||
              (ratio == best_ratio && basis_[r] < basis_[leave])) {
            leave = r;
            best_ratio = ratio;
          }
        }
      }
      if (leave == rows) break;  // unbounded; cannot happen for c >= 0
      pivot(leave, enter);
    }
    double value = 0.0;
    for (std::size_t r = 0; r < rows; ++r) value += c_[basis_[r]] * b_[r];
    return value;
  }

 private:
  double reduced_cost(std::size_t j) const {
    double z = c_[j];
    for (std::size_t r = 0; r < a_.size(); ++r) z -= c_[basis_[r]] * a_[r][j];
    return z;
  }

  void pivot(std::size_t row, std::size_t col) {
    const double piv = a_[row][col];
    for (double& v : a_[row]) v /= piv;
    b_[row] /= piv;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (r == row) continue;
      const double f = a_[r][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < a_[r].size(); ++j) a_[r][j] -= f * a_[row][j];
      b_[r] -= f * b_[row];
      if (b_[r] < 0.0 && b_[r] > -1e-15) b_[r] = 0.0;
    }
    basis_[row] = col;
  }

  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<double> c_;
  std::vector<std::size_t> basis_;
};

}  // namespace

double capacity_C(double power, double noise) {
  if (!(noise > 0.0)) {
    throw DomainError("capacity_C: noise must be > 0, got " +
                      std::to_string(noise));
  }
  if (!(power >= 0.0)) {
    throw DomainError("capacity_C: power must be >= 0, got " +
                      std::to_string(power));
  }
  return 0.5 * std::log2(1.0 + power / noise);
}

void validate(const RateRegion& region) {
  std::visit(
      Overloaded{
          [](const BoxRegion& box) {
            if (box.caps.empty()) throw DomainError("box region: no links");
            for (double c : box.caps) {
              if (!(c >= 0.0) || !std::isfinite(c)) {
                throw DomainError("box region: caps must be finite and >= 0");
              }
            }
          },
          [](const GaussianMacRegion& mac) {
            if (mac.powers.empty()) throw DomainError("mac region: no users");
            if (mac.powers.size() > kMaxMacUsers) {
              throw DomainError("mac region: at most 16 users supported");
            }
            for (double p : mac.powers) {
              if (!(p >= 0.0) || !std::isfinite(p)) {
                throw DomainError("mac region: powers must be finite and >= 0");
              }
            }
            if (!(mac.noise > 0.0)) {
              throw DomainError("mac region: noise must be > 0");
            }
          },
          [](const VertexRegion& vr) {
            if (vr.vertices.empty()) {
              throw DomainError("vertex region: no vertices");
            }
            const std::size_t n = vr.vertices.front().size();
            if (n == 0) throw DomainError("vertex region: empty vertex");
            for (const auto& v : vr.vertices) {
              check_dimension(n, v.size(), "vertex region");
              for (double x : v) {
                if (!(x >= 0.0) || !std::isfinite(x)) {
                  throw DomainError(
                      "vertex region: coordinates must be finite and >= 0");
                }
              }
            }
          }},
      region);
}

std::size_t dimension(const RateRegion& region) {
  return std::visit(
      Overloaded{
          [](const BoxRegion& b) { return b.caps.size(); },
          [](const GaussianMacRegion& m) { return m.powers.size(); },
          [](const VertexRegion& v) {
            return v.vertices.empty() ? std::size_t{0}
                                      : v.vertices.front().size();
          }},
      region);
}

double hull_distance_l1(const std::vector<std::vector<double>>& vertices,
                        std::span<const double> point) {
  if (vertices.empty()) throw DomainError("hull_distance_l1: no vertices");
  const std::size_t n = point.size();
  const std::size_t m = vertices.size();
  for (const auto& v : vertices) check_dimension(n, v.size(), "in_convex_hull");

  // Substitute w_0 = 1 - sum_{j>0} w_j; w_0 becomes the slack of the
  // simplex row. Residuals p_k - q_k absorb the coordinate mismatch.
  // Columns: w_1..w_{m-1}, p_0..p_{n-1}, q_0..q_{n-1}, w_0.
  const std::size_t cols = (m - 1) + 2 * n + 1;
  std::vector<std::vector<double>> a(n + 1, std::vector<double>(cols, 0.0));
  std::vector<double> b(n + 1, 0.0);
  std::vector<double> c(cols, 0.0);
  std::vector<std::size_t> basis(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double rhs = point[k] - vertices[0][k];
    const double sign = rhs >= 0.0 ? 1.0 : -1.0;
    for (std::size_t j = 1; j < m; ++j) {
      a[k][j - 1] = sign * (vertices[j][k] - vertices[0][k]);
    }
    const std::size_t p_col = (m - 1) + k;
    const std::size_t q_col = (m - 1) + n + k;
    a[k][p_col] = sign;
    a[k][q_col] = -sign;
    b[k] = sign * rhs;
    basis[k] = sign > 0.0 ? p_col : q_col;
    c[p_col] = 1.0;
    c[q_col] = 1.0;
  }
  for (std::size_t j = 1; j < m; ++j) a[n][j - 1] = 1.0;
  a[n][cols - 1] = 1.0;
  b[n] = 1.0;
  basis[n] = cols - 1;

  Tableau tableau(std::move(a), std::move(b), std::move(c), std::move(basis));
  return std::max(tableau.minimize(), 0.0);
}

double violation(const RateRegion& region, std::span<const double> rates) {
  check_dimension(dimension(region), rates.size(), "violation");
  double worst = 0.0;
  for (double r : rates) worst = std::max(worst, -r);
  const double defining = std::visit(
      Overloaded{
          [&](const BoxRegion& box) {
            double v = 0.0;
            for (std::size_t i = 0; i < rates.size(); ++i) {
              v = std::max(v, rates[i] - box.caps[i]);
            }
            return v;
          },
          [&](const GaussianMacRegion& mac) {
            const std::size_t n = mac.powers.size();
            if (n > kMaxMacUsers) {
              throw DomainError("violation: at most 16 MAC users supported");
            }
            double v = 0.0;
            const std::uint32_t subsets = std::uint32_t{1} << n;
            for (std::uint32_t mask = 1; mask < subsets; ++mask) {
              double rate_sum = 0.0;
              double power_sum = 0.0;
              for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint32_t{1} << i)) {
                  rate_sum += rates[i];
                  power_sum += mac.powers[i];
                }
              }
              v = std::max(v, rate_sum - capacity_C(power_sum, mac.noise));
            }
            return v;
          },
          [&](const VertexRegion& vr) {
            return hull_distance_l1(vr.vertices, rates);
          }},
      region);
  return std::max(worst, defining);
}

bool contains(const RateRegion& region, std::span<const double> rates,
              double tol) {
  return violation(region, rates) <= tol;
}

std::vector<std::size_t> service_order(std::span<const double> weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return weights[x] > weights[y];
                   });
  return order;
}

std::vector<double> mac_vertex(const GaussianMacRegion& mac,
                               std::span<const std::size_t> order) {
  check_dimension(mac.powers.size(), order.size(), "mac_vertex");
  std::vector<double> rates(mac.powers.size(), 0.0);
  double served_power = 0.0;
  double served_capacity = 0.0;
  for (std::size_t user : order) {
    served_power += mac.powers.at(user);
    const double cap = capacity_C(served_power, mac.noise);
    rates[user] = cap - served_capacity;
    served_capacity = cap;
  }
  return rates;
}

std::vector<double> max_weight(const RateRegion& region,
                               std::span<const double> weights) {
  check_dimension(dimension(region), weights.size(), "max_weight");
  check_weights(weights);
  return std::visit(
      Overloaded{
          [&](const BoxRegion& box) { return box.caps; },
          [&](const GaussianMacRegion& mac) {
            const auto order = service_order(weights);
            return mac_vertex(mac, order);
          },
          [&](const VertexRegion& vr) {
            std::size_t best = 0;
            double best_value = 0.0;
            for (std::size_t j = 0; j < vr.vertices.size(); ++j) {
              double value = 0.0;
              for (std::size_t i = 0; i < weights.size(); ++i) {
                value += weights[i] * vr.vertices[j][i];
              }
              if (j == 0 || value > best_value) {
                best = j;
                best_value = value;
              }
            }
            return vr.vertices[best];
          }},
      region);
}

}  // namespace rdnc
