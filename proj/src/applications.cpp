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

#include "disclose/applications.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "disclose/equilibrium.hpp"
#include "disclose/error.hpp"
#include "disclose/mwd.hpp"
#include "disclose/oracles.hpp"

namespace disclose {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const std::optional<PrecisionChoice>& v) {
  return v ? v->to_string() : std::string("none");
}

// Smallest MWD over interior grid points (corners skipped); +inf if none.
double min_mwd(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
               const std::vector<double>& taus, double* where) {
  double lo = kInf;
  for (double ty : taus) {
    if (solve_private_precision(p, cost, ty) == 0.0) continue;
    const double m = mwd(p, wc, cost, ty).mwd;
    if (m < lo) {
      lo = m;
      if (where) *where = ty;
    }
  }
  return lo;
}

}  // namespace

std::string ApplicationPreset::name() const {
  return kind == PresetKind::Cournot ? "cournot" : "beauty";
}

WelfareCoefficients ApplicationPreset::gross_welfare(double lambda) const {
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  WelfareCoefficients g = welfare;
  g.zeta = welfare.zeta + 1.0 / (lambda + 1.0);
  g.note = "gross welfare: zeta shifted by 1/(lambda+1)";
  return g;
}

ApplicationPreset cournot_preset(double delta, double tau_theta, double theta_bar) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidArgument("delta must be > 0");
  ApplicationPreset out;
  out.kind = PresetKind::Cournot;
  out.parameter = delta;
  out.params = ModelParams{-delta / 2.0, 0.5, tau_theta, theta_bar};
  out.params.validate();
  out.welfare = WelfareCoefficients{1.0, 1.0, WelfareProvenance::Preset, true, "total profit"};
  return out;
}

ApplicationPreset beauty_preset(double r, double tau_theta, double theta_bar,
                                BeautyScaling scaling) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("r must lie in (0, 1)");
  ApplicationPreset out;
  out.kind = PresetKind::Beauty;
  out.parameter = r;
  out.scaling = scaling;
  out.params = ModelParams{r, 1.0 - r, tau_theta, theta_bar};
  out.params.validate();
  if (scaling == BeautyScaling::Default) {
    out.welfare = WelfareCoefficients{1.0 + r, 1.0 - r, WelfareProvenance::Preset, true,
                                      "material benefit -(1-r)(a_i-theta)^2"};
  } else {
    out.welfare = WelfareCoefficients{(1.0 + r) / (1.0 - r), 1.0, WelfareProvenance::Preset, true,
                                      "material benefit -(a_i-theta)^2 (non-default scaling)"};
    out.note = "non-default scaling: cost term not rescaled by (1-r)";
  }
  return out;
}

CournotThresholds cournot_thresholds(double delta, const CostSpec& cost, double tau_theta) {
  const ApplicationPreset preset = cournot_preset(delta, tau_theta);
  if (!cost.has_constant_elasticity()) throw InvalidArgument("thresholds need an isoelastic cost");
  const double lambda = cost.constant_elasticity();
  CournotThresholds out;
  out.phi0 = solve_private_precision(preset.params, cost, 0.0);
  if (lambda == 0.0) {
    out.delta_star = kInf;
    out.delta_double_star = kInf;
    return out;
  }
  const double inv = 1.0 / lambda;
  out.delta_star = 1.0 + 2.0 * inv;
  out.delta_double_star = out.phi0 == 0.0
                              ? kInf
                              : 2.0 * std::sqrt((1.0 + inv) * (1.0 + inv + tau_theta / out.phi0)) +
                                    2.0 * inv;
  return out;
}

BeautyThresholds beauty_thresholds(double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  if (std::isinf(lambda)) return BeautyThresholds{0.5, 0.5};
  return BeautyThresholds{(lambda / 2.0 + 1.0) / (lambda + 1.0), lambda / (2.0 * (lambda + 1.0))};
}

bool CorollaryReport::all_pass() const {
  for (const auto& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

CorollaryReport corollary_checks(const ApplicationPreset& preset, double lambda, double c,
                                 const GridSpec& grid) {
  const ModelParams& p = preset.params;
  const CostSpec cost = CostSpec::isoelastic(c, lambda);
  CorollaryReport rep;
  rep.preset = preset.name();
  rep.parameter = preset.parameter;
  rep.lambda = lambda;
  rep.c = c;
  rep.tau_theta = p.tau_theta;
  rep.optimal = optimal_precision(p, preset.welfare, cost, grid);
  rep.gross_optimal = gross_optimal_precision(p, preset.welfare, cost, grid);
  rep.robust = robust_precision(p, preset.welfare, PrecisionChoice::infinite());

  const std::vector<double> taus = tau_y_grid(grid);
  const GridOptimum grid_net = argmax_equilibrium_welfare(p, preset.welfare, cost, grid, false);
  const GridOptimum grid_gross = argmax_equilibrium_welfare(p, preset.welfare, cost, grid, true);

  auto monotone_claim = [&](const std::string& name, bool below_threshold, double threshold,
                            const WelfareCoefficients& wc, Region region, const GridOptimum& g) {
    ClaimCheck cc;
    cc.name = name;
    double where = 0.0;
    const double lowest = min_mwd(p, wc, cost, taus, &where);
    if (below_threshold) {
      cc.expected = "increasing (region I)";
      cc.observed = std::string(to_string(region));
      cc.pass = region == Region::I && lowest > 0.0 && g.at_limit;
      cc.witness = "min mwd on grid " + fmt(lowest) + "; grid argmax " + g.arg.to_string();
    } else {
      cc.expected = "can decrease (not region I)";
      cc.observed = std::string(to_string(region));
      cc.pass = region != Region::I && region != Region::Boundary;
      cc.witness = lowest < 0.0 ? "mwd " + fmt(lowest) + " < 0 at tau_y = " + fmt(where)
                                : "no negative mwd on this grid for this cost";
    }
    cc.witness += "; threshold " + fmt(threshold);
    return cc;
  };

  if (preset.kind == PresetKind::Cournot) {
    const CournotThresholds th = cournot_thresholds(preset.parameter, cost, p.tau_theta);
    const double delta = preset.parameter;
    rep.claims.push_back(monotone_claim("profit_increasing_below_delta_star",
                                        lambda == 0.0 || delta < th.delta_star, th.delta_star,
                                        preset.welfare, rep.optimal.region, grid_net));
    ClaimCheck opt;
    opt.name = "optimal_full_below_delta_double_star";
    const bool full = delta < th.delta_double_star;
    opt.expected = full ? "inf" : "0";
    opt.observed = fmt(rep.optimal.optimal_tau_y);
    const PrecisionChoice want = full ? PrecisionChoice::infinite() : PrecisionChoice::finite(0.0);
    opt.pass = rep.optimal.optimal_tau_y == want && grid_net.arg == want;
    opt.witness = "delta** " + fmt(th.delta_double_star) + "; phi(0) " + fmt(th.phi0) +
                  "; grid argmax " + grid_net.arg.to_string();
    rep.claims.push_back(opt);
  } else if (preset.scaling == BeautyScaling::Default) {
    const BeautyThresholds th = beauty_thresholds(lambda);
    const double r = preset.parameter;
    rep.claims.push_back(monotone_claim("welfare_increasing_below_r_star", r < th.r_star,
                                        th.r_star, preset.welfare, rep.optimal.region, grid_net));
    rep.claims.push_back(monotone_claim("gross_welfare_increasing_below_r_gross", r < th.r_gross,
                                        th.r_gross, preset.gross_welfare(lambda),
                                        rep.gross_optimal.region, grid_gross));
  }

  ClaimCheck rob;
  rob.name = "full_disclosure_robust";
  rob.expected = "inf";
  const RobustVerdict k1 = robust_precision(p, preset.welfare, PrecisionChoice::finite(1.0));
  const GridOptimum g_inf = argmax_worst_case(p, preset.welfare, PrecisionChoice::infinite(), grid);
  const GridOptimum g_one = argmax_worst_case(p, preset.welfare, PrecisionChoice::finite(1.0), grid);
  rob.observed = fmt(rep.robust.robust_tau_y);
  rob.pass = rep.robust.robust_tau_y == PrecisionChoice::infinite() &&
             k1.robust_tau_y == PrecisionChoice::infinite() && g_inf.at_limit && g_one.at_limit;
  rob.witness = "grid argmax of F_inf " + g_inf.arg.to_string() + ", of F_1 " + g_one.arg.to_string();
  rep.claims.push_back(rob);
  return rep;
}

}  // namespace disclose
