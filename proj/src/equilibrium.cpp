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

#include "disclose/equilibrium.hpp"

#include <cmath>

#include "disclose/error.hpp"

namespace disclose {

namespace {

constexpr int kMaxBisectionIterations = 200;
constexpr int kMaxBracketSteps = 2200;  // enough to walk the whole double exponent range
constexpr double kRelativeTolerance = 1e-12;

void check_precision(double tau, const char* name) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidArgument(std::string(name) + " must be finite and >= 0");
  }
}

double denominator(const ModelParams& p, double tau_x, double tau_y) {
  return p.one_minus_alpha() * tau_x + tau_y + p.tau_theta;
}

// First-order condition residual: marginal benefit minus marginal cost.
// Strictly decreasing in tau_x.
double foc_residual(const ModelParams& p, const CostSpec& cost, double tau_x, double tau_y) {
  return marginal_benefit(p, tau_x, tau_y) - cost.marginal(tau_x);
}

bool at_corner(const ModelParams& p, const CostSpec& cost, double tau_y) {
  const double z = tau_y + p.tau_theta;
  return cost.marginal(0.0) >= p.beta * p.beta / (z * z);
}

double bisect_interior(const ModelParams& p, const CostSpec& cost, double tau_y) {
  const double a1 = p.one_minus_alpha();
  const double c0 = cost.marginal(0.0);

  double hi;
  if (c0 > 0.0) {
    // Interior root of the linear cost with slope C'(0) bounds the true root.
    hi = (p.beta / std::sqrt(c0) - tau_y - p.tau_theta) / a1;
  } else {
    const double c_eps = cost.marginal(1e-12);
    hi = c_eps > 0.0 ? p.beta / (std::sqrt(c_eps) * a1) : 1.0;
  }
  if (!std::isfinite(hi) || !(hi > 0.0)) hi = 1.0;

  int steps = 0;
  double r_hi = foc_residual(p, cost, hi, tau_y);
  while (r_hi > 0.0) {
    hi *= 2.0;
    r_hi = foc_residual(p, cost, hi, tau_y);
    if (++steps > kMaxBracketSteps || !std::isfinite(hi)) {
      throw ConvergenceError("could not bracket the first-order condition", 0.0, hi);
    }
  }
  if (r_hi == 0.0) return hi;

  // Shrink the bracket to within a factor of two before bisecting so that
  // tiny roots do not eat the bisection budget.
  double lo = 0.0;
  steps = 0;
  while (true) {
    const double half = 0.5 * hi;
    const double r_half = foc_residual(p, cost, half, tau_y);
    if (r_half > 0.0) {
      lo = half;
      break;
    }
    if (r_half == 0.0) return half;
    hi = half;
    if (++steps > kMaxBracketSteps || hi == 0.0) {
      throw ConvergenceError("bracket collapsed onto zero", 0.0, hi);
    }
  }

  for (int it = 0; it < kMaxBisectionIterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) return mid;  // bracket is a pair of adjacent doubles
    const double r = foc_residual(p, cost, mid, tau_y);
    if (r > 0.0) {
      lo = mid;
    } else if (r < 0.0) {
      hi = mid;
    } else {
      return mid;
    }
  }
  if (hi - lo > kRelativeTolerance * hi) {
    throw ConvergenceError("bisection did not converge", lo, hi);
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace

EquilibriumCoefficients equilibrium_coefficients(const ModelParams& p, double tau_x, double tau_y) {
  p.validate();
  check_precision(tau_x, "tau_x");
  check_precision(tau_y, "tau_y");
  const double d = denominator(p, tau_x, tau_y);
  EquilibriumCoefficients e;
  e.b_x = p.beta * tau_x / d;
  e.b_y = p.beta * tau_y / (p.one_minus_alpha() * d);
  e.intercept = p.beta * p.theta_bar / p.one_minus_alpha();
  return e;
}

double marginal_benefit(const ModelParams& p, double tau_x, double tau_y) {
  const double d = denominator(p, tau_x, tau_y);
  return p.beta * p.beta / (d * d);
}

double linear_private_precision(const ModelParams& p, double c, double tau_y) {
  p.validate();
  check_precision(tau_y, "tau_y");
  if (!(c > 0.0)) throw InvalidArgument("cost scale c must be > 0");
  const double z = tau_y + p.tau_theta;
  if (c >= p.beta * p.beta / (z * z)) return 0.0;
  return (p.beta / std::sqrt(c) - z) / p.one_minus_alpha();
}

double solve_private_precision_bisection(const ModelParams& p, const CostSpec& cost, double tau_y) {
  p.validate();
  check_precision(tau_y, "tau_y");
  if (at_corner(p, cost, tau_y)) return 0.0;
  return bisect_interior(p, cost, tau_y);
}

double solve_private_precision(const ModelParams& p, const CostSpec& cost, double tau_y) {
  if (cost.kind() == CostKind::Linear) return linear_private_precision(p, cost.scale(), tau_y);
  return solve_private_precision_bisection(p, cost, tau_y);
}

double solve_private_precision(const ModelParams& p, const CostSpec& cost, PrecisionChoice tau_y) {
  // The marginal benefit vanishes as tau_y grows, so phi(inf) = 0.
  if (tau_y.is_infinite()) return 0.0;
  return solve_private_precision(p, cost, tau_y.value());
}

double phi_inverse(const ModelParams& p, const CostSpec& cost, double tau_x) {
  p.validate();
  if (!(tau_x > 0.0) || !std::isfinite(tau_x)) throw InvalidArgument("phi_inverse needs tau_x > 0");
  return -p.one_minus_alpha() * tau_x - p.tau_theta + p.beta / std::sqrt(cost.marginal(tau_x));
}

double crowding_out_slope(const ModelParams& p, const CostSpec& cost, double tau_y) {
  const double phi = solve_private_precision(p, cost, tau_y);
  if (phi == 0.0) throw CornerError("slope undefined at corner");
  const CostValues v = cost.eval(phi);
  const double dinv =
      -p.one_minus_alpha() - p.beta * v.curvature / (2.0 * v.marginal * std::sqrt(v.marginal));
  return 1.0 / dinv;
}

}  // namespace disclose
