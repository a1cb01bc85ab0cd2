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

#include "disclose/equilibrium.hpp"
#include "disclose/model.hpp"

namespace disclose {

/// One point on the equilibrium path. W and W_gross are net of the dropped
/// additive constant (constant_dropped is always true).
struct EquilibriumSolution {
  PrecisionChoice tau_y = PrecisionChoice::finite(0.0);
  double tau_x = 0.0;
  double b_x = 0.0;
  double b_y = 0.0;
  double V = 0.0;
  double D = 0.0;
  double cost = 0.0;
  double W = 0.0;
  double W_gross = 0.0;
  bool constant_dropped = true;
};

/// Variance of the average action (= cov of two agents' actions).
double volatility(const ModelParams& p, double tau_x, double tau_y);
/// Variance of an action around the average action.
double dispersion(const ModelParams& p, double tau_x, double tau_y);
/// cov[sigma_i, theta] = (b_x + b_y) / tau_theta.
double covariance_with_state(const ModelParams& p, double tau_x, double tau_y);

/// zeta D + eta V - C(tau_x), up to the dropped constant.
double welfare(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
               double tau_x, double tau_y);
/// zeta D + eta V.
double gross_welfare(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
                     double tau_x, double tau_y);

/// Evaluates the full equilibrium row at tau_y, with tau_x = phi(tau_y).
/// tau_y = infinity goes through the analytic limits, never a large proxy.
EquilibriumSolution solve_equilibrium(const ModelParams& p, const WelfareCoefficients& wc,
                                      const CostSpec& cost, PrecisionChoice tau_y);

/// W(phi(tau_y), tau_y) and its gross counterpart; tau_y may be infinite.
double equilibrium_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                           const CostSpec& cost, PrecisionChoice tau_y);
double equilibrium_gross_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                                 const CostSpec& cost, PrecisionChoice tau_y);

/// |C(phi) - D(phi, tau_y) / (lambda + 1)| for an isoelastic (or linear) cost.
double cost_dispersion_identity_check(const ModelParams& p, const CostSpec& cost, double tau_y);

}  // namespace disclose
