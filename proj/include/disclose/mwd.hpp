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

#include "disclose/model.hpp"

namespace disclose {

// Marginal welfare (MWD) and marginal volatility (MVD) with respect to
// dispersion along the equilibrium path. MWD shares the sign of
// dW(phi(tau_y), tau_y)/dtau_y and is defined only where phi(tau_y) > 0.

struct MvdBreakdown {
  double mvd = 0.0;
  double mvd0 = 0.0;      // linear cost
  double mvd_star = 0.0;  // private precision held fixed
  double rho = 0.0;       // elasticity of marginal cost at phi(tau_y)
  double phi = 0.0;
};

struct MwdBreakdown {
  double mwd = 0.0;   // weighted-average form
  double mwd0 = 0.0;
  double mwd_star = 0.0;
  double mvd = 0.0;
  double mvd0 = 0.0;
  double mvd_star = 0.0;
  double rho = 0.0;
  double phi = 0.0;
  double mwd_via_mvd = 0.0;   // eta * MVD - zeta + 1 / (1 + rho)
  double weight_check = 0.0;  // |mwd - mwd_via_mvd|
};

/// eta / (1 - alpha) - zeta + 1.
double mwd0(const ModelParams& p, const WelfareCoefficients& wc);

/// eta (3 (1-alpha) phi + tau_y + tau_theta) / (2 (1-alpha)^2 phi) - zeta.
/// Throws CornerError when phi_val == 0.
double mwd_star(const ModelParams& p, const WelfareCoefficients& wc, double phi_val, double tau_y);

/// Throws CornerError at a corner.
MvdBreakdown mvd(const ModelParams& p, const CostSpec& cost, double tau_y);

/// Throws CornerError at a corner; the error carries
/// eta * dV(0, tau_y)/dtau_y, the welfare slope along the corner path.
MwdBreakdown mwd(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
                 double tau_y);

/// 2 (1-alpha) ((1+rho) zeta - 1) / (3 rho + 2); rho = +inf gives
/// 2 (1-alpha) zeta / 3.
double eta_lower(const ModelParams& p, double zeta, double rho);

/// dD(phi(tau_y), tau_y)/dtau_y = (1 + rho) C'(phi) phi'(tau_y). Interior only.
double dispersion_path_slope(const ModelParams& p, const CostSpec& cost, double tau_y);

/// eta * dV(0, tau_y)/dtau_y: slope of W along a corner stretch of the path.
double corner_welfare_slope(const ModelParams& p, const WelfareCoefficients& wc, double tau_y);

}  // namespace disclose
