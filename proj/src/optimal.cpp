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

#include "disclose/optimal.hpp"

#include <cmath>

#include "disclose/equilibrium.hpp"
#include "disclose/error.hpp"
#include "disclose/mwd.hpp"
#include "disclose/welfare.hpp"

namespace disclose {

namespace {

bool near(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

DisclosureVerdict grid_verdict(const ModelParams& p, const WelfareCoefficients& wc,
                               const CostSpec& cost, const GridSpec& grid, bool gross,
                               DisclosureVerdict v) {
  const GridOptimum best = argmax_equilibrium_welfare(p, wc, cost, grid, gross);
  v.optimal_tau_y = best.arg;
  v.candidates = {best.arg};
  return v;
}

DisclosureVerdict solve(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
                        const GridSpec& grid, bool gross) {
  p.validate();
  DisclosureVerdict v;
  v.gross = gross;
  const PrecisionChoice zero = PrecisionChoice::finite(0.0);
  const PrecisionChoice inf = PrecisionChoice::infinite();
  v.welfare_at_zero = gross ? equilibrium_gross_welfare(p, wc, cost, zero)
                            : equilibrium_welfare(p, wc, cost, zero);
  v.welfare_at_infinity = wc.eta * p.volatility_limit();

  if (!cost.has_constant_elasticity()) {
    v.method = "numeric-only";
    v.note = "cost has no constant elasticity; grid search over " + grid.to_string();
    return grid_verdict(p, wc, cost, grid, gross, std::move(v));
  }

  const double lambda = cost.constant_elasticity();
  WelfareCoefficients eff = wc;
  if (gross) eff.zeta = wc.zeta + 1.0 / (lambda + 1.0);
  v.lambda = lambda;
  v.eta_lower = eta_lower(p, eff.zeta, lambda);
  v.region = classify_region(p, eff, lambda);

  switch (v.region) {
    case Region::I:
      v.optimal_tau_y = inf;
      v.candidates = {inf};
      return v;
    case Region::III:
      v.optimal_tau_y = zero;
      v.candidates = {zero};
      return v;
    case Region::IV: {
      const TauBar tb = tau_bar(p, eff, cost);
      v.tau_bar_x = tb.tau_x;
      v.tau_bar_z = tb.tau_z;
      v.tau_bar_y = tb.tau_y;
      v.optimal_tau_y = PrecisionChoice::finite(std::max(0.0, tb.tau_y));
      v.candidates = {*v.optimal_tau_y};
      return v;
    }
    case Region::II: {
      const TauBar tb = tau_bar(p, eff, cost);
      v.tau_bar_x = tb.tau_x;
      v.tau_bar_z = tb.tau_z;
      v.tau_bar_y = tb.tau_y;
      if (p.tau_theta >= tb.tau_z) {
        v.optimal_tau_y = inf;
        v.candidates = {inf};
        return v;
      }
      v.candidates = {zero, inf};
      v.note = "welfare falls then rises; the optimum is whichever endpoint is larger";
      if (near(v.welfare_at_zero, v.welfare_at_infinity)) {
        v.tie = true;
        v.note = "tie: tau_y = 0 and tau_y = inf give equal welfare";
      } else {
        v.optimal_tau_y = v.welfare_at_infinity > v.welfare_at_zero ? inf : zero;
      }
      return v;
    }
    case Region::Boundary:
      break;
  }
  v.method = "grid";
  v.note = "parameters lie on a region boundary; grid answer shown, refine the grid to confirm";
  v.candidates = {zero, inf};
  DisclosureVerdict g = grid_verdict(p, wc, cost, grid, gross, v);
  g.candidates = {zero, inf};
  if (g.optimal_tau_y && g.optimal_tau_y->is_finite() && g.optimal_tau_y->value() > 0.0) {
    g.candidates.push_back(*g.optimal_tau_y);
  }
  return g;
}

}  // namespace

std::string_view to_string(Region r) {
  switch (r) {
    case Region::I:
      return "I_full";
    case Region::II:
      return "II_corner_compare";
    case Region::III:
      return "III_none";
    case Region::IV:
      return "IV_interior";
    case Region::Boundary:
      return "boundary";
  }
  return "unknown";
}

Region region_from_string(std::string_view s) {
  for (Region r : {Region::I, Region::II, Region::III, Region::IV, Region::Boundary}) {
    if (to_string(r) == s) return r;
  }
  throw InvalidArgument("unknown region: " + std::string(s));
}

Region classify_region(const ModelParams& p, const WelfareCoefficients& wc, double lambda) {
  p.validate();
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  const double lower = eta_lower(p, wc.zeta, lambda);
  const double eta = wc.eta;
  if (near(eta, lower) || near(eta, 0.0)) return Region::Boundary;
  if (eta > std::max(lower, 0.0)) return Region::I;
  if (eta < std::min(lower, 0.0)) return Region::III;
  return eta > 0.0 ? Region::II : Region::IV;
}

TauBar tau_bar(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost) {
  p.validate();
  if (!cost.has_constant_elasticity()) {
    throw InvalidArgument("tau_bar needs a linear or isoelastic cost");
  }
  const double lambda = cost.constant_elasticity();
  const Region region = classify_region(p, wc, lambda);
  if (region != Region::II && region != Region::IV) {
    throw NoInteriorStationaryPoint("no interior stationary point in region " +
                                    std::string(to_string(region)));
  }
  const double a1 = p.one_minus_alpha();
  const double c = cost.scale();
  const double eta = wc.eta;
  TauBar out;
  if (lambda == 0.0) {
    out.tau_z = p.beta / std::sqrt(c);
  } else {
    const double denom = 2.0 * std::sqrt(c) * a1 *
                         (a1 * ((1.0 + lambda) * wc.zeta - 1.0) - (1.0 + lambda) * eta);
    const double tx = std::pow(p.beta * lambda * eta / denom, 2.0 / (lambda + 2.0));
    const double lower = eta_lower(p, wc.zeta, lambda);
    out.tau_x = tx;
    out.tau_z = tx * a1 * (3.0 * lambda + 2.0) * (lower - eta) / (eta * lambda);
  }
  out.tau_y = out.tau_z - p.tau_theta;
  return out;
}

DisclosureVerdict optimal_precision(const ModelParams& p, const WelfareCoefficients& wc,
                                    const CostSpec& cost, const GridSpec& grid) {
  return solve(p, wc, cost, grid, false);
}

DisclosureVerdict gross_optimal_precision(const ModelParams& p, const WelfareCoefficients& wc,
                                          const CostSpec& cost, const GridSpec& grid) {
  return solve(p, wc, cost, grid, true);
}

}  // namespace disclose
