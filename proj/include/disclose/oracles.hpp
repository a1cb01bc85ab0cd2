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

#pragma once

// Independent numerical checks of the closed forms: finite-agent Monte Carlo
// moments, finite differences along the equilibrium path, and grid searches.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disclose/model.hpp"

namespace disclose {

struct GridSpec {
  double lo = 1e-4;
  double hi = 1e4;
  std::size_t points = 400;
  bool log_spaced = true;

  /// Throws InvalidArgument on an empty or malformed grid.
  void validate(std::size_t min_points = 2) const;
  std::vector<double> values() const;
  /// "lo:hi:n" or "lo:hi:n:log".
  static GridSpec parse(std::string_view text);
  std::string to_string() const;
};

struct OracleConfig {
  std::size_t n_agents = 100000;
  std::size_t n_draws = 200;
  std::uint64_t seed = 7;
  GridSpec grid;
  double fd_step = 1e-5;  // relative to tau_y + tau_theta

  /// n_agents >= 1e4, grid.points >= 100, fd_step > 0.
  void validate() const;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct McMoments {
  Estimate var_i;         // var[sigma_i]
  Estimate cov_ij;        // cov[sigma_i, sigma_j] from the exact average action
  Estimate cov_ij_pairs;  // same, from distinct pairs of sampled agents
  Estimate cov_itheta;    // cov[sigma_i, theta]
  Estimate dispersion;    // var - cov, replication by replication
  Estimate identity;      // var - alpha cov - beta cov_theta
  // Least-squares projection of alpha * average + beta * theta on the agent's
  // signals: the best response to the simulated profile. Absent when either
  // precision is zero.
  std::optional<Estimate> best_response_b_x;
  std::optional<Estimate> best_response_b_y;
  double b_x = 0.0;
  double b_y = 0.0;
  std::uint64_t seed = 0;
  std::size_t n_agents = 0;
  std::size_t n_draws = 0;
};

/// Simulates n_draws independent economies of n_agents agents playing the
/// linear equilibrium strategy. Replication r uses random stream r of the
/// seed, so the result is bit-identical for a given configuration.
McMoments mc_moments(const ModelParams& p, double tau_x, double tau_y, const OracleConfig& cfg);

/// Marginal value of private precision for one agent whose opponents use
/// precision tau_x: minus the derivative in the agent's own precision of the
/// simulated prediction error var[alpha * average + beta * theta | x_i, y].
/// The error is the residual variance of a least-squares projection on the
/// agent's signals, evaluated at tau_x -/+ h with common random numbers,
/// h = 0.02 (tau_x + tau_y + tau_theta). Requires tau_y > 0 or tau_x > h.
Estimate mc_marginal_benefit(const ModelParams& p, double tau_x, double tau_y,
                             const OracleConfig& cfg);

struct FdResult {
  double value = 0.0;
  double step = 0.0;
  bool one_sided = false;
};

/// Derivative in tau_y of g(phi(tau_y), tau_y). Central difference with step
/// fd_step * (tau_y + tau_theta); a one-sided second-order stencil is used
/// (and flagged) near tau_y = 0 or when the stencil crosses a corner.
FdResult fd_along_path(const ModelParams& p, const CostSpec& cost, double tau_y, double fd_step,
                       const std::function<double(double tau_x, double tau_y)>& g);

/// dW(phi(tau_y), tau_y) / dtau_y.
FdResult fd_social_value(const ModelParams& p, const WelfareCoefficients& wc,
                         const CostSpec& cost, double tau_y, const OracleConfig& cfg);

enum class OptSense { Maximize, Minimize };

struct GridOptimum {
  PrecisionChoice arg = PrecisionChoice::finite(0.0);
  double value = 0.0;
  std::size_t index = 0;  // index into the scanned points (== size when at the limit)
  bool at_limit = false;
  double step = 0.0;      // distance to the farther neighbour of the selected point
};

/// Scans (xs, ys) and, when given, the value at infinity. Infinity wins only
/// when it is strictly better than every finite value by more than a
/// relative 1e-12. Ties between grid points go to the first one.
GridOptimum grid_argopt(std::span<const double> xs, std::span<const double> ys, OptSense sense,
                        std::optional<double> limit_value);

/// tau_y grid with 0 prepended when lo > 0.
std::vector<double> tau_y_grid(const GridSpec& grid);

/// argmax over tau_y of W(phi(tau_y), tau_y) (or gross welfare) on the grid
/// plus the analytic value at tau_y = infinity.
GridOptimum argmax_equilibrium_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                                       const CostSpec& cost, const GridSpec& grid, bool gross);

/// argmax over tau_y of the worst-case welfare F_kappa.
GridOptimum argmax_worst_case(const ModelParams& p, const WelfareCoefficients& wc,
                              PrecisionChoice kappa, const GridSpec& grid);

/// Brute-force min over tau_x in [0, kappa] of eta V + (zeta - 1) D. Finite
/// kappa uses `points` evenly spaced points; kappa = infinity uses 0, a log
/// grid spanning [1e-8, 1e8] * (tau_y + tau_theta) and the analytic limit.
GridOptimum argmin_linear_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                                  double tau_y, PrecisionChoice kappa,
                                  std::size_t points = 1000000);

}  // namespace disclose
