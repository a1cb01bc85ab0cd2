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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disclose/model.hpp"
#include "disclose/oracles.hpp"

namespace disclose {

// Optimal precision of public information under a known cost. For costs with
// constant elasticity lambda the (zeta, eta) plane splits into four regions
// by comparing eta with 0 and with eta_lower(zeta, lambda):
//   I    eta > max(eta_lower, 0)   welfare increases: full disclosure
//   II   0 < eta < eta_lower       U-shaped: compare tau_y = 0 with infinity
//   III  eta < min(eta_lower, 0)   welfare decreases: no disclosure
//   IV   eta_lower < eta < 0       hump-shaped: interior optimum tau_bar_y
enum class Region { I, II, III, IV, Boundary };

std::string_view to_string(Region r);
/// Accepts the names produced by to_string.
Region region_from_string(std::string_view s);

/// Equalities (within a relative 1e-12) give Region::Boundary.
Region classify_region(const ModelParams& p, const WelfareCoefficients& wc, double lambda);

struct TauBar {
  std::optional<double> tau_x;  // absent for lambda = 0
  double tau_z = 0.0;
  double tau_y = 0.0;  // tau_z - tau_theta
};

/// Stationary point of welfare along the equilibrium path. Parameters outside
/// region II or IV throw NoInteriorStationaryPoint; a tabulated cost throws
/// InvalidArgument.
TauBar tau_bar(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost);

struct DisclosureVerdict {
  Region region = Region::Boundary;
  // Absent on a tie between tau_y = 0 and infinity and on a boundary.
  std::optional<PrecisionChoice> optimal_tau_y;
  std::vector<PrecisionChoice> candidates;
  bool tie = false;
  std::optional<double> tau_bar_x;
  std::optional<double> tau_bar_z;
  std::optional<double> tau_bar_y;
  double welfare_at_zero = 0.0;      // W(phi(0), 0)
  double welfare_at_infinity = 0.0;  // eta beta^2 / ((1-alpha)^2 tau_theta)
  std::optional<double> lambda;
  std::optional<double> eta_lower;
  bool gross = false;
  bool constant_dropped = true;
  std::string method = "analytic";  // "analytic", "numeric-only" or "grid"
  std::string note;
};

/// Linear and isoelastic costs are solved analytically; tabulated costs fall
/// back to a grid search on `grid` (method "numeric-only"), as do boundary
/// parameters (method "grid", with the grid answer as a refinement hint).
DisclosureVerdict optimal_precision(const ModelParams& p, const WelfareCoefficients& wc,
                                    const CostSpec& cost, const GridSpec& grid = GridSpec{});

/// Same for gross welfare (welfare plus the information cost), which at an
/// isoelastic equilibrium equals welfare with zeta replaced by
/// zeta + 1 / (lambda + 1).
DisclosureVerdict gross_optimal_precision(const ModelParams& p, const WelfareCoefficients& wc,
                                          const CostSpec& cost, const GridSpec& grid = GridSpec{});

}  // namespace disclose
