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

#include "disclose/welfare.hpp"

#include <cmath>

#include "disclose/detail/rational_forms.hpp"
#include "disclose/error.hpp"

namespace disclose {

namespace {

detail::RationalTerms terms(const ModelParams& p, double tau_x, double tau_y) {
  p.validate();
  if (!std::isfinite(tau_x) || tau_x < 0.0 || !std::isfinite(tau_y) || tau_y < 0.0) {
    throw InvalidArgument("precisions must be finite and >= 0");
  }
  return detail::make_rational_terms(p.alpha, p.beta, p.tau_theta, tau_y);
}

}  // namespace

double volatility(const ModelParams& p, double tau_x, double tau_y) {
  return detail::volatility_form(terms(p, tau_x, tau_y), tau_x);
}

double dispersion(const ModelParams& p, double tau_x, double tau_y) {
  return detail::dispersion_form(terms(p, tau_x, tau_y), tau_x);
}

double covariance_with_state(const ModelParams& p, double tau_x, double tau_y) {
  const auto t = terms(p, tau_x, tau_y);
  const double ax = t.one_minus_alpha * tau_x;
  const double d = ax + t.tau_z;
  return p.beta * (ax + tau_y) / (t.one_minus_alpha * d * p.tau_theta);
}

double welfare(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
               double tau_x, double tau_y) {
  return gross_welfare(p, wc, cost, tau_x, tau_y) - cost.eval(tau_x).cost;
}

double gross_welfare(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec&,
                     double tau_x, double tau_y) {
  const auto t = terms(p, tau_x, tau_y);
  return wc.zeta * detail::dispersion_form(t, tau_x) + wc.eta * detail::volatility_form(t, tau_x);
}

EquilibriumSolution solve_equilibrium(const ModelParams& p, const WelfareCoefficients& wc,
                                      const CostSpec& cost, PrecisionChoice tau_y) {
  p.validate();
  EquilibriumSolution s;
  s.tau_y = tau_y;
  if (tau_y.is_infinite()) {
    s.tau_x = 0.0;
    s.b_x = 0.0;
    s.b_y = p.beta / p.one_minus_alpha();
    s.V = p.volatility_limit();
    s.D = 0.0;
    s.cost = 0.0;
    s.W_gross = wc.eta * s.V;
    s.W = s.W_gross;
    return s;
  }
  const double ty = tau_y.value();
  s.tau_x = solve_private_precision(p, cost, ty);
  const auto coef = equilibrium_coefficients(p, s.tau_x, ty);
  s.b_x = coef.b_x;
  s.b_y = coef.b_y;
  s.V = volatility(p, s.tau_x, ty);
  s.D = dispersion(p, s.tau_x, ty);
  s.cost = cost.eval(s.tau_x).cost;
  s.W_gross = wc.zeta * s.D + wc.eta * s.V;
  s.W = s.W_gross - s.cost;
  return s;
}

double equilibrium_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                           const CostSpec& cost, PrecisionChoice tau_y) {
  return solve_equilibrium(p, wc, cost, tau_y).W;
}

double equilibrium_gross_welfare(const ModelParams& p, const WelfareCoefficients& wc,
                                 const CostSpec& cost, PrecisionChoice tau_y) {
  return solve_equilibrium(p, wc, cost, tau_y).W_gross;
}

double cost_dispersion_identity_check(const ModelParams& p, const CostSpec& cost, double tau_y) {
  const double lambda = cost.constant_elasticity();
  const double phi = solve_private_precision(p, cost, tau_y);
  if (phi == 0.0) return 0.0;
  return std::abs(cost.eval(phi).cost - dispersion(p, phi, tau_y) / (lambda + 1.0));
}

}  // namespace disclose
