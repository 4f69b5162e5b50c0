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

#include "rdnc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <numeric>
#include <string>

#include "rdnc/errors.hpp"

namespace rdnc {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLogFloor = 1e-12;

double shannon(double power, double noise) {
  return 0.5 * std::log2(1.0 + power / noise);
}

struct SourceTerms {
  double K = 1.0;
  double w = 0.0;  // 0 for the zero utility
  bool log_rate = false;
};

SourceTerms terms_of(const SourceSpec& src) {
  const auto* v = std::get_if<LogLinear>(&src.V);
  if (v == nullptr) {
    throw UnsupportedError("oracle: only the log-linear utility is supported");
  }
  SourceTerms t;
  t.K = v->K;
  if (const auto* u = std::get_if<LogRate>(&src.U)) {
    t.w = u->w;
    t.log_rate = true;
  }
  return t;
}

// Link-rate vectors the scan considers.
std::vector<std::vector<double>> rate_candidates(const Scenario& scn,
                                                 std::size_t mixture_points) {
  if (const auto* box = std::get_if<BoxRegion>(&scn.region)) {
    return {box->caps};
  }
  const auto* mac = std::get_if<GaussianMacRegion>(&scn.region);
  if (mac == nullptr) {
    throw UnsupportedError("oracle: region must be a box or a Gaussian MAC");
  }
  if (mac->powers.size() == 1) {
    return {{shannon(mac->powers[0], mac->noise)}};
  }
  const double c1 = shannon(mac->powers[0], mac->noise);
  const double c2 = shannon(mac->powers[1], mac->noise);
  const double c12 = shannon(mac->powers[0] + mac->powers[1], mac->noise);
  const double a[2] = {c1, c12 - c1};  // user 0 decoded last
  const double b[2] = {c12 - c2, c2};  // user 1 decoded last
  if (mixture_points < 2) {
    throw DomainError("oracle: mixture grid needs at least 2 points");
  }
  std::vector<std::vector<double>> out;
  out.reserve(mixture_points);
  for (std::size_t k = 0; k < mixture_points; ++k) {
    const double theta =
        static_cast<double>(k) / static_cast<double>(mixture_points - 1);
    out.push_back({theta * a[0] + (1.0 - theta) * b[0],
                   theta * a[1] + (1.0 - theta) * b[1]});
  }
  return out;
}

void check_preconditions(const Scenario& scn, const GridSpec& grid) {
  validate(scn);
  if (scn.size() > 2) throw UnsupportedError("oracle: at most 2 sources");
  if (grid.sources.size() != scn.size()) {
    throw DimensionError("oracle: grid does not match scenario size");
  }
  for (const auto& g : grid.sources) {
    if (g.alpha.steps < 2 || g.c.steps < 2) {
      throw DomainError("oracle: every grid axis needs at least 2 steps");
    }
  }
  for (const auto& src : scn.sources) (void)terms_of(src);
}

struct RowBest {
  double value = kNegInf;
  double alpha = 0.0;
  double c = 0.0;
};

// Best c on one alpha row for one source and one link rate. Each grid point
// is first projected onto the rate and sign constraints: c is clipped at the
// link rate and alpha raised to c, so binding constraints are hit exactly.
RowBest scan_row(const SourceTerms& t, const SolverCaps& caps,
                 const GridAxis& c_axis, double alpha_grid, double rate) {
  RowBest best;
  for (std::size_t j = 0; j < c_axis.steps; ++j) {
    const double c = std::min({c_axis.at(j), rate, caps.c_max});
    if (c < caps.c_min || c < 0.0) continue;
    if (t.log_rate && !(c > 0.0)) continue;
    const double alpha = std::max(alpha_grid, c);  // beta = c - alpha <= 0
    if (!(alpha > 0.0) || alpha > caps.alpha_max) continue;
    double value = std::log(alpha) + t.K * (c - alpha);
    if (t.log_rate) value += t.w * std::log(c);
    if (value > best.value) best = {value, alpha, c};
  }
  return best;
}

GridResult assemble(const Scenario& scn, const GridSpec& grid,
                    const std::vector<std::vector<double>>& candidates,
                    const std::vector<RowBest>& rows) {
  const std::size_t n = scn.size();
  GridResult out;
  out.points = grid_points(scn, grid);
  std::size_t row = 0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    double total = 0.0;
    bool feasible = true;
    PrimalAllocation point = PrimalAllocation::zeros(n);
    point.r = candidates[k];
    for (std::size_t i = 0; i < n; ++i) {
      const SourceGrid& g = grid.sources[i];
      RowBest best;
      for (std::size_t a = 0; a < g.alpha.steps; ++a, ++row) {
        if (rows[row].value > best.value) best = rows[row];
      }
      if (best.value == kNegInf) {
        feasible = false;
        continue;
      }
      total += best.value;
      point.alpha[i] = best.alpha;
      point.c[i] = best.c;
      point.beta[i] = point.c[i] - point.alpha[i];
    }
    if (feasible && (!out.found || total > out.objective)) {
      out.found = true;
      out.objective = total;
      out.best = std::move(point);
    }
  }
  return out;
}

struct RowIndex {
  std::size_t candidate;
  std::size_t source;
  std::size_t alpha;
};

std::vector<RowIndex> row_layout(const GridSpec& grid, std::size_t candidates) {
  std::vector<RowIndex> layout;
  for (std::size_t k = 0; k < candidates; ++k) {
    for (std::size_t i = 0; i < grid.sources.size(); ++i) {
      for (std::size_t a = 0; a < grid.sources[i].alpha.steps; ++a) {
        layout.push_back({k, i, a});
      }
    }
  }
  return layout;
}

double maximize_concave_in_log(auto&& f, double lo, double hi) {
  lo = std::max(lo, kLogFloor);
  if (!(hi > lo)) return f(lo);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::log(lo);
  double b = std::log(hi);
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(std::exp(x1));
  double f2 = f(std::exp(x2));
  for (int it = 0; it < 200; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(std::exp(x1));
    }
  }
  return std::max({f1, f2, f(lo), f(hi)});
}

}  // namespace

GridSpec default_grid(const Scenario& scn, std::size_t steps) {
  validate(scn);
  if (steps < 2) throw DomainError("default_grid: steps must be >= 2");
  const std::size_t n = scn.size();
  std::vector<double> top(n, 0.0);
  if (const auto* box = std::get_if<BoxRegion>(&scn.region)) {
    top = box->caps;
  } else if (const auto* mac = std::get_if<GaussianMacRegion>(&scn.region)) {
    for (std::size_t i = 0; i < n; ++i) top[i] = shannon(mac->powers[i], mac->noise);
  } else {
    throw UnsupportedError("oracle: region must be a box or a Gaussian MAC");
  }
  const SolverCaps& caps = scn.options.caps;
  GridSpec grid;
  for (std::size_t i = 0; i < n; ++i) {
    const SourceTerms t = terms_of(scn.sources[i]);
    double c_hi = std::min(top[i], caps.c_max);
    double c_lo = caps.c_min > 0.0 ? caps.c_min : 1e-6 * std::max(c_hi, 1.0);
    if (!(c_hi > c_lo)) c_hi = c_lo * 2.0;
    double a_hi = std::min(caps.alpha_max, std::max(c_hi, 1.0 / t.K));
    if (!(a_hi > c_lo)) a_hi = c_lo * 2.0;
    grid.sources.push_back({GridAxis{c_lo, a_hi, steps}, GridAxis{c_lo, c_hi, steps}});
  }
  return grid;
}

GridSpec refine(const GridSpec& grid) {
  GridSpec out = grid;
  for (auto& g : out.sources) {
    g.alpha.steps = 2 * g.alpha.steps - 1;
    g.c.steps = 2 * g.c.steps - 1;
  }
  out.mixture_points = 2 * grid.mixture_points - 1;
  return out;
}

std::size_t grid_points(const Scenario& scn, const GridSpec& grid) {
  std::size_t candidates = 1;
  if (const auto* mac = std::get_if<GaussianMacRegion>(&scn.region)) {
    if (mac->powers.size() == 2) candidates = grid.mixture_points;
  }
  std::size_t per_candidate = 0;
  for (const auto& g : grid.sources) per_candidate += g.alpha.steps * g.c.steps;
  return candidates * per_candidate;
}

GridResult grid_search_num_serial(const Scenario& scn, const GridSpec& grid) {
  check_preconditions(scn, grid);
  if (grid_points(scn, grid) > kMaxGridPoints) {
    throw DomainError("grid_search_num: grid exceeds 1e8 points");
  }
  const auto candidates = rate_candidates(scn, grid.mixture_points);
  const auto layout = row_layout(grid, candidates.size());
  std::vector<RowBest> rows(layout.size());
  for (std::size_t k = 0; k < layout.size(); ++k) {
    const RowIndex& idx = layout[k];
    const SourceGrid& g = grid.sources[idx.source];
    rows[k] = scan_row(terms_of(scn.sources[idx.source]), scn.options.caps, g.c,
                       g.alpha.at(idx.alpha), candidates[idx.candidate][idx.source]);
  }
  return assemble(scn, grid, candidates, rows);
}

GridResult grid_search_num(const Scenario& scn, const GridSpec& grid) {
  check_preconditions(scn, grid);
  if (grid_points(scn, grid) > kMaxGridPoints) {
    throw DomainError("grid_search_num: grid exceeds 1e8 points");
  }
  const auto candidates = rate_candidates(scn, grid.mixture_points);
  const auto layout = row_layout(grid, candidates.size());
  std::vector<SourceTerms> terms;
  for (const auto& src : scn.sources) terms.push_back(terms_of(src));

  std::vector<RowBest> rows(layout.size());
  const auto count = static_cast<std::ptrdiff_t>(layout.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const RowIndex& idx = layout[k];
    const SourceGrid& g = grid.sources[idx.source];
    rows[k] = scan_row(terms[idx.source], scn.options.caps, g.c,
                       g.alpha.at(idx.alpha), candidates[idx.candidate][idx.source]);
  }
  return assemble(scn, grid, candidates, rows);
}

double KktReport::max_residual() const {
  return std::max({slackness_mu, slackness_lambda, compression_margin,
                   congestion_margin, scheduling_margin});
}

KktReport kkt_residuals(const PrimalAllocation& primal, const DualState& dual,
                        const Scenario& scn) {
  validate(scn);
  const std::size_t n = scn.size();
  if (max_violation(primal, scn) > 1e-6) {
    throw DomainError("kkt_residuals: primal point is not feasible within 1e-6");
  }
  if (dual.mu.size() != n || dual.lambda.size() != n) {
    throw DimensionError("kkt_residuals: dual size mismatch");
  }
  const SolverCaps& caps = scn.options.caps;
  KktReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    const SourceTerms t = terms_of(scn.sources[i]);
    const double mu = dual.mu[i];
    const double lambda = dual.lambda[i];
    const double a = primal.alpha[i];
    const double b = primal.beta[i];
    const double c = primal.c[i];
    rep.slackness_mu = std::max(rep.slackness_mu, std::fabs(mu * (a + b - c)));
    rep.slackness_lambda =
        std::max(rep.slackness_lambda, std::fabs(lambda * (c - primal.r[i])));

    // Linear in beta on [-alpha, 0]: the optimum sits at an endpoint.
    const double keep_offset = maximize_concave_in_log(
        [&](double x) { return std::log(x) - mu * x; }, kLogFloor, caps.alpha_max);
    const double full_offset = maximize_concave_in_log(
        [&](double x) { return std::log(x) - t.K * x; }, kLogFloor, caps.alpha_max);
    const double comp_at = std::log(a) + t.K * b - mu * (a + b);
    rep.compression_margin = std::max(
        rep.compression_margin, std::max(keep_offset, full_offset) - comp_at);

    const double price = lambda - mu;
    double cong_opt;
    double cong_at;
    if (t.log_rate) {
      cong_opt = maximize_concave_in_log(
          [&](double x) { return t.w * std::log(x) - price * x; },
          std::max(caps.c_min, kLogFloor), caps.c_max);
      cong_at = t.w * std::log(c) - price * c;
    } else {
      cong_opt = std::max(-price * caps.c_min, -price * caps.c_max);
      cong_at = -price * c;
    }
    rep.congestion_margin = std::max(rep.congestion_margin, cong_opt - cong_at);
  }

  double sched_at = 0.0;
  for (std::size_t i = 0; i < n; ++i) sched_at += dual.lambda[i] * primal.r[i];
  double sched_opt = kNegInf;
  if (const auto* box = std::get_if<BoxRegion>(&scn.region)) {
    sched_opt = 0.0;
    for (std::size_t i = 0; i < n; ++i) sched_opt += dual.lambda[i] * box->caps[i];
  } else if (const auto* mac = std::get_if<GaussianMacRegion>(&scn.region)) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      double served_power = 0.0;
      double prev = 0.0;
      double value = 0.0;
      for (std::size_t user : order) {
        served_power += mac->powers[user];
        const double cap = shannon(served_power, mac->noise);
        value += dual.lambda[user] * (cap - prev);
        prev = cap;
      }
      sched_opt = std::max(sched_opt, value);
    } while (std::next_permutation(order.begin(), order.end()));
  } else if (const auto* vr = std::get_if<VertexRegion>(&scn.region)) {
    for (const auto& v : vr->vertices) {
      double value = 0.0;
      for (std::size_t i = 0; i < n; ++i) value += dual.lambda[i] * v[i];
      sched_opt = std::max(sched_opt, value);
    }
  }
  rep.scheduling_margin = std::max(0.0, sched_opt - sched_at);
  return rep;
}

}  // namespace rdnc
