// Copyright 2026 The disclose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disclose/oracles.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <limits>

#include "disclose/detail/rational_forms.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/error.hpp"
#include "disclose/parallel.hpp"
#include "disclose/rng.hpp"
#include "disclose/robust.hpp"
#include "disclose/simd/kernels.hpp"
#include "disclose/welfare.hpp"

namespace disclose {

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const std::string tmp(s);
  std::size_t used = 0;
  try {
    v = std::stod(tmp, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad number in grid: '" + tmp + "'");
  }
  if (used != tmp.size()) throw InvalidArgument("bad number in grid: '" + tmp + "'");
  return v;
}

Estimate estimate(std::span<const double> samples) {
  const double n = static_cast<double>(samples.size());
  const double mean = pairwise_sum(samples) / n;
  std::vector<double> sq(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - mean;
    sq[i] = d * d;
  }
  const double var = samples.size() > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
  return Estimate{mean, std::sqrt(var / n)};
}

bool strictly_better(double candidate, double incumbent, OptSense sense) {
  const double slack = 1e-12 * std::max({1.0, std::abs(candidate), std::abs(incumbent)});
  return sense == OptSense::Maximize ? candidate > incumbent + slack
                                     : candidate < incumbent - slack;
}

}  // namespace

void GridSpec::validate(std::size_t min_points) const {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("grid bounds must be finite");
  if (points == 0) throw InvalidArgument("grid is empty");
  if (points < min_points) {
    throw InvalidArgument("grid needs at least " + std::to_string(min_points) + " points");
  }
  if (!(hi > lo)) throw InvalidArgument("grid requires hi > lo");
  if (lo < 0.0) throw InvalidArgument("grid values must be >= 0");
  if (log_spaced && !(lo > 0.0)) throw InvalidArgument("log grid requires lo > 0");
}

std::vector<double> GridSpec::values() const {
  validate();
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  const double n1 = static_cast<double>(points - 1);
  if (log_spaced) {
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i) out[i] = std::exp(a + (b - a) * (static_cast<double>(i) / n1));
  } else {
    for (std::size_t i = 0; i < points; ++i) out[i] = lo + (hi - lo) * (static_cast<double>(i) / n1);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

GridSpec GridSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw InvalidArgument("grid must look like lo:hi:n or lo:hi:n:log");
  }
  GridSpec g;
  g.lo = parse_double(parts[0]);
  g.hi = parse_double(parts[1]);
  long long n = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || n < 0) {
    throw InvalidArgument("grid point count must be a nonnegative integer");
  }
  g.points = static_cast<std::size_t>(n);
  g.log_spaced = false;
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.log_spaced = true;
    } else if (parts[3] != "lin") {
      throw InvalidArgument("grid spacing must be 'log' or 'lin'");
    }
  }
  g.validate();
  return g;
}

std::string GridSpec::to_string() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g:%.17g:%zu%s", lo, hi, points, log_spaced ? ":log" : "");
  return buf;
}

void OracleConfig::validate() const {
  if (n_agents < 10000) throw InvalidArgument("n_agents must be >= 10000");
  if (n_draws < 2) throw InvalidArgument("n_draws must be >= 2");
  grid.validate(100);
  if (!(fd_step > 0.0) || !std::isfinite(fd_step)) throw InvalidArgument("fd_step must be > 0");
}

McMoments mc_moments(const ModelParams& p, double tau_x, double tau_y, const OracleConfig& cfg) {
  p.validate();
  cfg.validate();
  if (!(tau_x >= 0.0) || !(tau_y >= 0.0) || std::isinf(tau_x) || std::isinf(tau_y)) {
    throw InvalidArgument("precisions must be finite and >= 0");
  }
  const EquilibriumCoefficients eq = equilibrium_coefficients(p, tau_x, tau_y);
  const std::size_t n = cfg.n_agents;
  const std::size_t reps = cfg.n_draws;
  const double nd = static_cast<double>(n);
  const bool project = tau_x > 0.0 && tau_y > 0.0;

  std::vector<double> var_r(reps), cov_r(reps), pairs_r(reps), covt_r(reps), ident_r(reps),
      disp_r(reps);
  // Per-replication pieces of the pooled normal equations.
  std::vector<double> sxx_r(reps), sxy_r(reps), syy_r(reps), sxt_r(reps), syt_r(reps);

  parallel_for(reps, [&](std::size_t r) {
    double shocks[2];
    fill_normals(cfg.seed, r, 0, shocks);
    const double theta = shocks[0] / std::sqrt(p.tau_theta);
    // With tau_y = 0 the public signal carries no weight and is never used.
    const double y = tau_y > 0.0 ? theta + shocks[1] / std::sqrt(tau_y) : 0.0;
    std::vector<double> z(n);
    fill_normals(cfg.seed, r, 1, z);
    simd::ActionParams ap;
    ap.theta_dev = theta;
    ap.noise_scale = tau_x > 0.0 ? 1.0 / std::sqrt(tau_x) : 0.0;
    ap.b_x = eq.b_x;
    ap.public_part = eq.b_y * y;
    const simd::ActionSums s = simd::action_sums(z, ap);

    const double avg = eq.b_x * theta + eq.b_y * y;  // exact continuum average
    var_r[r] = s.aa / nd;
    cov_r[r] = avg * avg;
    pairs_r[r] = (s.a * s.a - s.aa) / (nd * (nd - 1.0));
    covt_r[r] = theta * s.a / nd;
    ident_r[r] = var_r[r] - p.alpha * cov_r[r] - p.beta * covt_r[r];
    disp_r[r] = var_r[r] - cov_r[r];

    const double target = p.alpha * avg + p.beta * theta;
    sxx_r[r] = s.xx;
    sxy_r[r] = y * s.x;
    syy_r[r] = nd * y * y;
    sxt_r[r] = target * s.x;
    syt_r[r] = nd * y * target;
  });

  McMoments out;
  out.var_i = estimate(var_r);
  out.cov_ij = estimate(cov_r);
  out.cov_ij_pairs = estimate(pairs_r);
  out.cov_itheta = estimate(covt_r);
  out.identity = estimate(ident_r);
  out.dispersion = estimate(disp_r);
  out.b_x = eq.b_x;
  out.b_y = eq.b_y;
  out.seed = cfg.seed;
  out.n_agents = n;
  out.n_draws = reps;

  if (project) {
    // Solve the 2x2 normal equations on all replications, and on ten
    // contiguous batches for a standard error.
    auto solve = [&](std::size_t lo, std::size_t hi) {
      const auto span = [&](const std::vector<double>& v) {
        return pairwise_sum(std::span<const double>(v).subspan(lo, hi - lo));
      };
      const double a = span(sxx_r), b = span(sxy_r), d = span(syy_r);
      const double e = span(sxt_r), f = span(syt_r);
      const double det = a * d - b * b;
      return std::pair<double, double>{(d * e - b * f) / det, (a * f - b * e) / det};
    };
    const auto full = solve(0, reps);
    const std::size_t batches = std::min<std::size_t>(10, reps / 2);
    std::vector<double> bx(batches), by(batches);
    for (std::size_t k = 0; k < batches; ++k) {
      const auto est = solve(k * reps / batches, (k + 1) * reps / batches);
      bx[k] = est.first;
      by[k] = est.second;
    }
    // Batch means have standard error sd / sqrt(batches); the pooled fit is
    // reported with that uncertainty.
    out.best_response_b_x = Estimate{full.first, estimate(bx).std_error};
    out.best_response_b_y = Estimate{full.second, estimate(by).std_error};
  }
  return out;
}

Estimate mc_marginal_benefit(const ModelParams& p, double tau_x, double tau_y,
                             const OracleConfig& cfg) {
  p.validate();
  cfg.validate();
  const double h = 0.02 * (tau_x + tau_y + p.tau_theta);
  if (!(tau_x > h) && !(tau_y > 0.0)) {
    throw InvalidArgument("need tau_y > 0 or tau_x large enough for the stencil");
  }
  const double lo_prec = std::max(tau_x - h, 0.0);
  const double hi_prec = tau_x + h;
  const EquilibriumCoefficients eq = equilibrium_coefficients(p, tau_x, tau_y);
  const std::size_t n = cfg.n_agents;
  const std::size_t reps = cfg.n_draws;
  const double nd = static_cast<double>(n);

  struct Rep {
    double y = 0.0, t = 0.0;
    double sx[2] = {0.0, 0.0};
    double sxx[2] = {0.0, 0.0};
  };
  std::vector<Rep> rows(reps);
  parallel_for(reps, [&](std::size_t r) {
    double shocks[2];
    fill_normals(cfg.seed, r, 0, shocks);
    const double theta = shocks[0] / std::sqrt(p.tau_theta);
    const double y = tau_y > 0.0 ? theta + shocks[1] / std::sqrt(tau_y) : 0.0;
    std::vector<double> z(n);
    fill_normals(cfg.seed, r, 1, z);
    Rep& row = rows[r];
    row.y = y;
    row.t = p.alpha * (eq.b_x * theta + eq.b_y * y) + p.beta * theta;
    const double precs[2] = {lo_prec, hi_prec};
    for (int k = 0; k < 2; ++k) {
      simd::ActionParams ap;
      ap.theta_dev = theta;
      ap.noise_scale = precs[k] > 0.0 ? 1.0 / std::sqrt(precs[k]) : 0.0;
      const simd::ActionSums sums = simd::action_sums(z, ap);
      row.sx[k] = sums.x;
      row.sxx[k] = sums.xx;
    }
  });

  // Residual variance of the projection of t on (x, y) over replications
  // [lo, hi) for the k-th precision.
  auto residual = [&](std::size_t lo, std::size_t hi, int k) {
    const std::size_t m = hi - lo;
    std::vector<double> a(m), b(m), d(m), e(m), f(m), g(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Rep& row = rows[lo + i];
      a[i] = row.sxx[k];
      b[i] = row.y * row.sx[k];
      d[i] = nd * row.y * row.y;
      e[i] = row.t * row.sx[k];
      f[i] = nd * row.y * row.t;
      g[i] = nd * row.t * row.t;
    }
    const double sxx = pairwise_sum(a), sxy = pairwise_sum(b), syy = pairwise_sum(d);
    const double sxt = pairwise_sum(e), syt = pairwise_sum(f), stt = pairwise_sum(g);
    double explained = 0.0;
    if (tau_y > 0.0) {
      const double det = sxx * syy - sxy * sxy;
      const double bx = (syy * sxt - sxy * syt) / det;
      const double by = (sxx * syt - sxy * sxt) / det;
      explained = bx * sxt + by * syt;
    } else {
      explained = sxt * sxt / sxx;
    }
    return (stt - explained) / (nd * static_cast<double>(m));
  };
  auto derivative = [&](std::size_t lo, std::size_t hi) {
    return -(residual(lo, hi, 1) - residual(lo, hi, 0)) / (hi_prec - lo_prec);
  };
  const std::size_t batches = std::min<std::size_t>(10, reps / 2);
  std::vector<double> per_batch(batches);
  for (std::size_t k = 0; k < batches; ++k) {
    per_batch[k] = derivative(k * reps / batches, (k + 1) * reps / batches);
  }
  return Estimate{derivative(0, reps), estimate(per_batch).std_error};
}

FdResult fd_along_path(const ModelParams& p, const CostSpec& cost, double tau_y, double fd_step,
                       const std::function<double(double, double)>& g) {
  p.validate();
  if (!(tau_y >= 0.0) || std::isinf(tau_y)) throw InvalidArgument("tau_y must be finite and >= 0");
  if (!(fd_step > 0.0)) throw InvalidArgument("fd_step must be > 0");
  const double h = fd_step * (tau_y + p.tau_theta);
  auto eval = [&](double ty) {
    const double tx = solve_private_precision(p, cost, ty);
    return std::pair<double, double>{tx, g(tx, ty)};
  };
  const auto mid = eval(tau_y);
  FdResult out;
  out.step = h;
  auto forward = [&] {
    const double f1 = eval(tau_y + h).second;
    const double f2 = eval(tau_y + 2.0 * h).second;
    out.one_sided = true;
    out.value = (-3.0 * mid.second + 4.0 * f1 - f2) / (2.0 * h);
    return out;
  };
  if (tau_y - h < 0.0) return forward();
  const auto lo = eval(tau_y - h);
  const auto hi = eval(tau_y + h);
  const bool interior = mid.first > 0.0;
  if (interior && lo.first == 0.0 && hi.first > 0.0) return forward();
  if (interior && hi.first == 0.0 && lo.first > 0.0) {
    const double f2 = eval(tau_y - 2.0 * h).second;
    out.one_sided = true;
    out.value = (3.0 * mid.second - 4.0 * lo.second + f2) / (2.0 * h);
    return out;
  }
  if (!interior && (lo.first > 0.0) != (hi.first > 0.0)) {
    // Corner point next to an interior stretch: stay on the corner side.
    if (lo.first == 0.0) {
      const double f2 = eval(tau_y - 2.0 * h).second;
      out.one_sided = true;
      out.value = (3.0 * mid.second - 4.0 * lo.second + f2) / (2.0 * h);
      return out;
    }
    return forward();
  }
  out.value = (hi.second - lo.second) / (2.0 * h);
  return out;
}

FdResult fd_social_value(const ModelParams& p, const WelfareCoefficients& wc,
                         const CostSpec& cost, double tau_y, const OracleConfig& cfg) {
  return fd_along_path(p, cost, tau_y, cfg.fd_step, [&](double tx, double ty) {
    return welfare(p, wc, cost, tx, ty);
  });
}

GridOptimum grid_argopt(std::span<const double> xs, std::span<const double> ys, OptSense sense,
                        std::optional<double> limit_value) {
  if (xs.size() != ys.size()) throw InvalidArgument("grid and values differ in length");
  if (xs.empty()) throw InvalidArgument("grid is empty");
  std::size_t best = 0;
  for (std::size_t i = 1; i < ys.size(); ++i) {
    const bool better = sense == OptSense::Maximize ? ys[i] > ys[best] : ys[i] < ys[best];
    if (better) best = i;
  }
  GridOptimum out;
  out.index = best;
  out.value = ys[best];
  out.arg = PrecisionChoice::finite(xs[best]);
  const double left = best > 0 ? xs[best] - xs[best - 1] : 0.0;
  const double right = best + 1 < xs.size() ? xs[best + 1] - xs[best] : 0.0;
  out.step = std::max(left, right);
  if (limit_value && strictly_better(*limit_value, ys[best], sense)) {
    out.index = xs.size();
    out.value = *limit_value;
    out.arg = PrecisionChoice::infinite();
    out.at_limit = true;
    out.step = std::numeric_limits<double>::infinity();
  }
  return out;
}

std::vector<double> tau_y_grid(const GridSpec& grid) {
  std::vector<double> xs = grid.values();
  if (xs.front() > 0.0) xs.insert(xs.begin(), 0.0);
  return xs;
}

GridOptimum argmax_equilibrium_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                                       const CostSpec& cost, const GridSpec& grid, bool gross) {
  p.validate();
  const std::vector<double> xs = tau_y_grid(grid);
  std::vector<double> ys(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double tx = solve_private_precision(p, cost, xs[i]);
    ys[i] = gross ? gross_welfare(p, wc, cost, tx, xs[i]) : welfare(p, wc, cost, tx, xs[i]);
  });
  // Either welfare tends to eta * V_lim: D and C(phi) vanish as tau_y grows.
  return grid_argopt(xs, ys, OptSense::Maximize, wc.eta * p.volatility_limit());
}

GridOptimum argmax_worst_case(const ModelParams& p, const WelfareCoefficients& wc,
                              PrecisionChoice kappa, const GridSpec& grid) {
  p.validate();
  const std::vector<double> xs = tau_y_grid(grid);
  std::vector<double> ys(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    ys[i] = worst_case_welfare(p, wc, xs[i], kappa).value;
  });
  return grid_argopt(xs, ys, OptSense::Maximize, w0_limit(p, wc));
}

GridOptimum argmin_linear_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                                  double tau_y, PrecisionChoice kappa, std::size_t points) {
  p.validate();
  if (points < 2) throw InvalidArgument("need at least two points");
  std::vector<double> xs(points);
  std::optional<double> limit;
  if (kappa.is_finite()) {
    const double k = kappa.value();
    const double n1 = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) xs[i] = k * (static_cast<double>(i) / n1);
    xs.back() = k;
  } else {
    const double scale = tau_y + p.tau_theta;
    const double a = std::log(1e-8 * scale);
    const double b = std::log(1e8 * scale);
    const double n2 = static_cast<double>(points - 2);
    xs[0] = 0.0;
    for (std::size_t i = 1; i < points; ++i) {
      xs[i] = std::exp(a + (b - a) * (static_cast<double>(i - 1) / n2));
    }
    limit = w0_limit(p, wc);
  }
  const detail::RationalTerms terms = detail::make_rational_terms(p.alpha, p.beta, p.tau_theta, tau_y);
  std::vector<double> ys(points);
  constexpr std::size_t kChunk = 1 << 14;
  const std::size_t chunks = (points + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t lo = c * kChunk;
    const std::size_t len = std::min(kChunk, points - lo);
    simd::linear_welfare(std::span<const double>(xs).subspan(lo, len), terms, wc.eta,
                         wc.zeta - 1.0, std::span<double>(ys).subspan(lo, len));
  });
  return grid_argopt(xs, ys, OptSense::Minimize, limit);
}

}  // namespace disclose
