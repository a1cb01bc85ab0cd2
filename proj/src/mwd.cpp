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

#include "disclose/mwd.hpp"

#include <cmath>

#include "disclose/equilibrium.hpp"
#include "disclose/error.hpp"

namespace disclose {

double mwd0(const ModelParams& p, const WelfareCoefficients& wc) {
  p.validate();
  return wc.eta / p.one_minus_alpha() - wc.zeta + 1.0;
}

double mwd_star(const ModelParams& p, const WelfareCoefficients& wc, double phi_val, double tau_y) {
  p.validate();
  if (phi_val == 0.0) throw CornerError("MWD* undefined at corner");
  if (!(phi_val > 0.0)) throw InvalidArgument("phi must be > 0");
  const double a1 = p.one_minus_alpha();
  return wc.eta * (3.0 * a1 * phi_val + tau_y + p.tau_theta) / (2.0 * a1 * a1 * phi_val) - wc.zeta;
}

double corner_welfare_slope(const ModelParams& p, const WelfareCoefficients& wc, double tau_y) {
  p.validate();
  const double a1 = p.one_minus_alpha();
  const double z = tau_y + p.tau_theta;
  return wc.eta * p.beta * p.beta / (a1 * a1 * z * z);
}

MvdBreakdown mvd(const ModelParams& p, const CostSpec& cost, double tau_y) {
  const double phi = solve_private_precision(p, cost, tau_y);
  if (phi == 0.0) throw CornerError("MVD undefined at corner");
  const double a1 = p.one_minus_alpha();
  const CostValues v = cost.eval(phi);
  MvdBreakdown out;
  out.phi = phi;
  out.rho = v.elasticity;
  out.mvd0 = 1.0 / a1;
  out.mvd_star = 1.0 / a1 + p.beta / (2.0 * a1 * a1 * phi * std::sqrt(v.marginal));
  // Strictly above 3 / (2 (1-alpha)) at any equilibrium; a violation beyond
  // rounding means phi is not an equilibrium.
  if (out.mvd_star < 1.5 / a1 * (1.0 - 1e-12)) {
    throw Error("MVD* fell below 3/(2(1-alpha)); phi is not an equilibrium");
  }
  out.mvd = (out.mvd0 + out.rho * out.mvd_star) / (1.0 + out.rho);
  return out;
}

MwdBreakdown mwd(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
                 double tau_y) {
  const double phi = solve_private_precision(p, cost, tau_y);
  if (phi == 0.0) {
    throw CornerError("MWD undefined at corner", corner_welfare_slope(p, wc, tau_y));
  }
  const MvdBreakdown v = mvd(p, cost, tau_y);
  MwdBreakdown out;
  out.phi = phi;
  out.rho = v.rho;
  out.mvd = v.mvd;
  out.mvd0 = v.mvd0;
  out.mvd_star = v.mvd_star;
  out.mwd0 = mwd0(p, wc);
  out.mwd_star = mwd_star(p, wc, phi, tau_y);
  out.mwd = (out.mwd0 + out.rho * out.mwd_star) / (1.0 + out.rho);
  out.mwd_via_mvd = wc.eta * out.mvd - wc.zeta + 1.0 / (1.0 + out.rho);
  out.weight_check = std::abs(out.mwd - out.mwd_via_mvd);
  return out;
}

double eta_lower(const ModelParams& p, double zeta, double rho) {
  p.validate();
  if (std::isnan(rho) || rho < 0.0) throw InvalidArgument("rho must be >= 0 or +inf");
  const double a1 = p.one_minus_alpha();
  if (std::isinf(rho)) return 2.0 * a1 * zeta / 3.0;
  return 2.0 * a1 * ((1.0 + rho) * zeta - 1.0) / (3.0 * rho + 2.0);
}

double dispersion_path_slope(const ModelParams& p, const CostSpec& cost, double tau_y) {
  const double phi = solve_private_precision(p, cost, tau_y);
  if (phi == 0.0) throw CornerError("dispersion slope undefined at corner");
  const CostValues v = cost.eval(phi);
  return (1.0 + v.elasticity) * v.marginal * crowding_out_slope(p, cost, tau_y);
}

}  // namespace disclose
