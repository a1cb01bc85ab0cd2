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

/// Linear equilibrium strategy of the action stage:
///   sigma_i(x_i, y) = b_x (x_i - theta_bar) + b_y (y - theta_bar) + intercept.
struct EquilibriumCoefficients {
  double b_x = 0.0;
  double b_y = 0.0;
  double intercept = 0.0;
};

EquilibriumCoefficients equilibrium_coefficients(const ModelParams& p, double tau_x, double tau_y);

/// Marginal benefit of private precision at the symmetric profile,
/// beta^2 / ((1-alpha) tau_x + tau_y + tau_theta)^2.
double marginal_benefit(const ModelParams& p, double tau_x, double tau_y);

/// Equilibrium private precision phi(tau_y). Zero when C'(0) already exceeds
/// the marginal benefit at tau_x = 0. Linear costs use the closed form; every
/// other cost brackets and bisects the first-order condition.
double solve_private_precision(const ModelParams& p, const CostSpec& cost, double tau_y);
double solve_private_precision(const ModelParams& p, const CostSpec& cost, PrecisionChoice tau_y);

/// Same as solve_private_precision but always uses bisection, even for linear
/// costs. Exposed so the closed form can be checked against it.
double solve_private_precision_bisection(const ModelParams& p, const CostSpec& cost, double tau_y);

/// Closed form for a linear cost with marginal cost c.
double linear_private_precision(const ModelParams& p, double c, double tau_y);

/// Inverse of phi on tau_x > 0. Negative results mean no tau_y >= 0 induces tau_x.
double phi_inverse(const ModelParams& p, const CostSpec& cost, double tau_x);

/// d phi / d tau_y at an interior equilibrium; throws CornerError when phi = 0.
double crowding_out_slope(const ModelParams& p, const CostSpec& cost, double tau_y);

}  // namespace disclose
