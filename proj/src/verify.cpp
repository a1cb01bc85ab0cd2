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

#include "disclose/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "disclose/applications.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/error.hpp"
#include "disclose/mwd.hpp"
#include "disclose/optimal.hpp"
#include "disclose/robust.hpp"
#include "disclose/welfare.hpp"

namespace disclose {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double scale_of(double v) { return std::max(1.0, std::abs(v)); }

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void close(const std::string& name, double analytic, double oracle, double tol,
             std::vector<std::string> covers, std::string detail = {}) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.analytic = analytic;
    r.oracle = oracle;
    r.tolerance = tol;
    r.pass = analytic == oracle || std::abs(analytic - oracle) <= tol;
    r.covers = std::move(covers);
    r.detail = std::move(detail);
    out_.push_back(std::move(r));
  }

  // Categorical agreement, recorded as 1 (expected) against 1/0 (observed).
  void agree(const std::string& name, bool ok, std::vector<std::string> covers,
             std::string detail = {}) {
    close(name, 1.0, ok ? 1.0 : 0.0, 0.0, std::move(covers), std::move(detail));
  }

  // Precision verdicts: infinite values are encoded as +inf.
  void same_precision(const std::string& name, PrecisionChoice analytic, PrecisionChoice oracle,
                      double tol, std::vector<std::string> covers, std::string detail = {}) {
    close(name, analytic.as_double(), oracle.as_double(), tol, std::move(covers),
          std::move(detail));
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

std::string label(const std::string& base, double v) { return base + "@" + format_double(v); }

// Ratio of path derivatives dW/dtau_y / |dD/dtau_y| by finite differences.
double fd_mwd_ratio(const ModelParams& p, const WelfareCoefficients& wc, const CostSpec& cost,
                    double tau_y, double step) {
  const FdResult dw = fd_along_path(p, cost, tau_y, step, [&](double tx, double ty) {
    return welfare(p, wc, cost, tx, ty);
  });
  const FdResult dd = fd_along_path(p, cost, tau_y, step, [&](double tx, double ty) {
    return dispersion(p, tx, ty);
  });
  return dw.value / std::abs(dd.value);
}

double fd_mvd_ratio(const ModelParams& p, const CostSpec& cost, double tau_y, double step) {
  const FdResult dv = fd_along_path(p, cost, tau_y, step, [&](double tx, double ty) {
    return volatility(p, tx, ty);
  });
  const FdResult dd = fd_along_path(p, cost, tau_y, step, [&](double tx, double ty) {
    return dispersion(p, tx, ty);
  });
  return dv.value / std::abs(dd.value);
}

// ---------------------------------------------------------------- equilibrium

void equilibrium_suite(Collector& c, const OracleConfig& cfg, const RunConfig& run) {
  const ModelParams m0{0.0, 1.0, 1.0, 0.0};
  struct Case {
    ModelParams p;
    double tx, ty;
  };
  for (const Case& k : {Case{m0, 1.0, 1.0}, Case{ModelParams{0.5, 1.0, 1.0, 0.0}, 2.0, 1.0}}) {
    const McMoments mc = mc_moments(k.p, k.tx, k.ty, cfg);
    const EquilibriumCoefficients eq = equilibrium_coefficients(k.p, k.tx, k.ty);
    const std::string tag = "alpha=" + format_double(k.p.alpha);
    c.close("best_response_b_x[" + tag + "]", eq.b_x, mc.best_response_b_x->mean,
            3.0 * mc.best_response_b_x->std_error, {"equilibrium_coefficients"},
            "projection of alpha*average+beta*theta on own signals; tolerance 3 stderr");
    c.close("best_response_b_y[" + tag + "]", eq.b_y, mc.best_response_b_y->mean,
            3.0 * mc.best_response_b_y->std_error, {"equilibrium_coefficients"},
            "tolerance 3 stderr");
    const Estimate mb = mc_marginal_benefit(k.p, k.tx, k.ty, cfg);
    const double a = marginal_benefit(k.p, k.tx, k.ty);
    c.close("marginal_benefit[" + tag + "]", a, mb.mean, 3.0 * mb.std_error + 5e-4 * a,
            {"marginal_benefit"},
            "derivative of the simulated prediction error; 3 stderr plus stencil bias bound");
  }

  // Linear closed form against bisection.
  const CostSpec lin = CostSpec::linear(0.04);
  c.close("linear_closed_form_vs_bisection", solve_private_precision(m0, lin, 1.0),
          solve_private_precision_bisection(m0, lin, 1.0), 1e-10, {"solve_private_precision"});

  const ModelParams& p = run.model;
  for (double ty : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    const double phi = solve_private_precision(p, run.cost, ty);
    if (phi > 0.0) {
      const double mc = run.cost.marginal(phi);
      c.close(label("foc_residual", ty), marginal_benefit(p, phi, ty), mc, 1e-10 * mc,
              {"solve_private_precision", "marginal_benefit"});
      c.close(label("phi_inverse_round_trip", ty), ty, phi_inverse(p, run.cost, phi),
              1e-9 * scale_of(ty), {"phi_inverse"});
      const FdResult fd =
          fd_along_path(p, run.cost, ty, cfg.fd_step, [](double tx, double) { return tx; });
      const double slope = crowding_out_slope(p, run.cost, ty);
      c.close(label("crowding_out_slope", ty), slope, fd.value, 1e-5 * scale_of(slope),
              {"crowding_out_slope"}, fd.one_sided ? "one-sided stencil" : "");
    } else {
      c.agree(label("corner_condition", ty),
              run.cost.marginal(0.0) >= marginal_benefit(p, 0.0, ty),
              {"solve_private_precision"}, "phi = 0 requires C'(0) >= marginal benefit at 0");
    }
  }
}

// -------------------------------------------------------------------- welfare

void welfare_suite(Collector& c, const OracleConfig& cfg, const RunConfig& run) {
  const ModelParams m0{0.0, 1.0, 1.0, 0.0};
  c.close("volatility_limit", m0.volatility_limit(), volatility(m0, 0.0, 1e8), 1e-6,
          {"volatility"}, "closed form at tau_y = 1e8 against the analytic limit");

  // Equilibrium example: Isoelastic(1/9, 1) at tau_y = 1 has phi = 1.
  const CostSpec iso = CostSpec::isoelastic(1.0 / 9.0, 1.0);
  const WelfareCoefficients w11 = WelfareCoefficients::direct(1.0, 1.0);
  const McMoments mc = mc_moments(m0, 1.0, 1.0, cfg);
  const double oracle_w = w11.zeta * mc.dispersion.mean + w11.eta * mc.cov_ij.mean -
                          iso.eval(1.0).cost;
  c.close("welfare_from_simulated_components", welfare(m0, w11, iso, 1.0, 1.0), oracle_w,
          3.0 * (mc.dispersion.std_error + mc.cov_ij.std_error), {"welfare"},
          "zeta D_mc + eta V_mc - C; tolerance 3 stderr");
  c.close("gross_welfare_from_simulated_components", gross_welfare(m0, w11, iso, 1.0, 1.0),
          w11.zeta * mc.dispersion.mean + w11.eta * mc.cov_ij.mean,
          3.0 * (mc.dispersion.std_error + mc.cov_ij.std_error), {"gross_welfare"});

  const ModelParams& p = run.model;
  const CostSpec& cost = run.cost;
  const WelfareCoefficients& wc = run.welfare;
  for (double ty : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    const double phi = solve_private_precision(p, cost, ty);
    const double v = volatility(p, phi, ty);
    const double d = dispersion(p, phi, ty);
    c.close(label("moment_identity", ty), v + d,
            p.alpha * v + p.beta * covariance_with_state(p, phi, ty), 1e-12 * scale_of(v + d),
            {"volatility", "dispersion", "covariance_with_state"},
            "var = alpha cov + beta cov_theta from closed forms");
    if (cost.has_constant_elasticity()) {
      const double lambda = cost.constant_elasticity();
      const double identity = (wc.zeta + 1.0 / (lambda + 1.0)) * d + wc.eta * v - cost.eval(phi).cost;
      const double gross = gross_welfare(p, wc, cost, phi, ty);
      c.close(label("gross_welfare_shift", ty), gross, identity, 1e-10 * scale_of(gross),
              {"gross_welfare"});
      c.close(label("cost_dispersion_identity", ty),
              cost_dispersion_identity_check(p, cost, ty), 0.0, 1e-10 * scale_of(d),
              {"cost_dispersion_identity_check"});
    }
    if (phi > 0.0 && ty > 0.0) {
      const FdResult dd = fd_along_path(p, cost, ty, cfg.fd_step,
                                        [&](double tx, double y) { return dispersion(p, tx, y); });
      const FdResult dv = fd_along_path(p, cost, ty, cfg.fd_step,
                                        [&](double tx, double y) { return volatility(p, tx, y); });
      c.agree(label("dispersion_falls_volatility_rises", ty), dd.value < 0.0 && dv.value > 0.0,
              {"volatility", "dispersion"}, "finite-difference signs along the path");
      c.close(label("dispersion_path_slope", ty), dispersion_path_slope(p, cost, ty), dd.value,
              1e-5 * scale_of(dd.value), {"dispersion"});
    }
  }
}

// -------------------------------------------------------------------- moments

void moments_suite(Collector& c, const OracleConfig& cfg, const RunConfig& run) {
  struct Case {
    std::string tag;
    ModelParams p;
    double tx, ty;
  };
  std::vector<Case> cases{{"m0", ModelParams{0.0, 1.0, 1.0, 0.0}, 1.0, 1.0},
                          {"alpha_half", ModelParams{0.5, 1.0, 1.0, 0.0}, 2.0, 1.0},
                          {"no_private", ModelParams{0.0, 1.0, 1.0, 0.0}, 0.0, 1.0},
                          {"scaled", ModelParams{-1.0, 0.5, 2.0, 0.3}, 1.5, 0.5}};
  const double phi1 = solve_private_precision(run.model, run.cost, 1.0);
  cases.push_back({"config", run.model, phi1, 1.0});
  for (const Case& k : cases) {
    const McMoments mc = mc_moments(k.p, k.tx, k.ty, cfg);
    const double v = volatility(k.p, k.tx, k.ty);
    const double d = dispersion(k.p, k.tx, k.ty);
    const std::string t = "[" + k.tag + "]";
    c.close("var" + t, v + d, mc.var_i.mean, 3.0 * mc.var_i.std_error,
            {"volatility", "dispersion"}, "tolerance 3 stderr");
    c.close("cov" + t, v, mc.cov_ij.mean, 3.0 * mc.cov_ij.std_error, {"volatility"});
    c.close("cov_pairs" + t, v, mc.cov_ij_pairs.mean, 3.0 * mc.cov_ij_pairs.std_error,
            {"volatility"});
    c.close("dispersion" + t, d, mc.dispersion.mean, 3.0 * mc.dispersion.std_error + 1e-15,
            {"dispersion"});
    c.close("cov_theta" + t, covariance_with_state(k.p, k.tx, k.ty), mc.cov_itheta.mean,
            3.0 * mc.cov_itheta.std_error, {"covariance_with_state"});
    c.close("identity" + t, 0.0, mc.identity.mean, 3.0 * mc.identity.std_error + 1e-15,
            {"covariance_with_state"}, "var - alpha cov - beta cov_theta");
  }
}

// ------------------------------------------------------------------------ mwd

void mwd_suite(Collector& c, const OracleConfig& cfg, const RunConfig& run) {
  const ModelParams m0{0.0, 1.0, 1.0, 0.0};
  const WelfareCoefficients w11 = WelfareCoefficients::direct(1.0, 1.0);
  const CostSpec iso = CostSpec::isoelastic(1.0 / 9.0, 1.0);

  // mwd_star: tau_x held at 1, ratio of partial differences in tau_y.
  {
    const double h = cfg.fd_step * 2.0;
    const auto w = [&](double ty) { return gross_welfare(m0, w11, iso, 1.0, ty); };
    const auto d = [&](double ty) { return dispersion(m0, 1.0, ty); };
    const double ratio = ((w(1.0 + h) - w(1.0 - h)) / (2.0 * h)) /
                         std::abs((d(1.0 + h) - d(1.0 - h)) / (2.0 * h));
    const double a = mwd_star(m0, w11, 1.0, 1.0);
    c.close("mwd_star_fixed_tau_x", a, ratio, 1e-5 * scale_of(a), {"mwd_star"});
  }
  {
    const CostSpec lin = CostSpec::linear(0.04);
    const double a = mwd0(m0, w11);
    c.close("mwd0_linear_cost", a, fd_mwd_ratio(m0, w11, lin, 1.0, cfg.fd_step),
            1e-5 * scale_of(a), {"mwd0"});
  }

  struct Case {
    std::string tag;
    ModelParams p;
    WelfareCoefficients wc;
    CostSpec cost;
  };
  std::vector<Case> cases{{"reference", m0, w11, iso}, {"config", run.model, run.welfare, run.cost}};
  for (const Case& k : cases) {
    for (double ty : {0.25, 1.0, 4.0}) {
      if (solve_private_precision(k.p, k.cost, ty) == 0.0) continue;
      const MwdBreakdown b = mwd(k.p, k.wc, k.cost, ty);
      const std::string t = "[" + k.tag + "]";
      c.close(label("mwd_weighted_average" + t, ty), b.mwd, b.mwd_via_mvd, 1e-10 * scale_of(b.mwd),
              {"mwd"});
      c.close(label("mwd_vs_fd" + t, ty), b.mwd, fd_mwd_ratio(k.p, k.wc, k.cost, ty, cfg.fd_step),
              1e-5 * scale_of(b.mwd), {"mwd"});
      c.close(label("mvd_vs_fd" + t, ty), b.mvd, fd_mvd_ratio(k.p, k.cost, ty, cfg.fd_step),
              1e-5 * scale_of(b.mvd), {"mvd"});
    }
  }

  // eta_lower(2, 0) = 1 for alpha = 0: just above it welfare rises, below
  // min(eta_lower, 0) it falls, under a linear cost.
  {
    const CostSpec lin = CostSpec::linear(0.04);
    const double lower = eta_lower(m0, 2.0, 0.0);
    bool rises = true, falls = true;
    for (double ty : {0.5, 1.0, 2.0}) {
      rises = rises && fd_social_value(m0, WelfareCoefficients::direct(2.0, lower + 0.01), lin, ty,
                                       cfg).value > 0.0;
      falls = falls && fd_social_value(m0, WelfareCoefficients::direct(2.0, std::min(lower, 0.0) - 0.01),
                                       lin, ty, cfg).value < 0.0;
    }
    c.close("eta_lower_value", lower, 1.0, 0.0, {"eta_lower"});
    c.agree("eta_lower_sign_split", rises && falls, {"eta_lower"},
            "finite-difference social value above and below the threshold");
  }
}

// -------------------------------------------------------------------- optimal

void optimal_suite(Collector& c, const OracleConfig& cfg, const RunConfig& run) {
  const ModelParams m0{0.0, 1.0, 1.0, 0.0};
  const CostSpec iso11 = CostSpec::isoelastic(1.0, 1.0);
  struct Case {
    std::string tag;
    ModelParams p;
    WelfareCoefficients wc;
    CostSpec cost;
  };
  std::vector<Case> cases{
      {"region_I", m0, WelfareCoefficients::direct(1.0, 1.0), iso11},
      {"region_III", m0, WelfareCoefficients::direct(1.0, -1.0), iso11},
      {"region_IV", m0, WelfareCoefficients::direct(0.0, -0.2), iso11},
      {"cournot_delta_1", cournot_preset(1.0).params, WelfareCoefficients::direct(1.0, 1.0), iso11},
      {"linear_expensive_pos", m0, WelfareCoefficients::direct(3.0, 0.5), CostSpec::linear(2.0)},
      {"linear_expensive_neg", m0, WelfareCoefficients::direct(0.5, -0.3), CostSpec::linear(2.0)},
      {"config", run.model, run.welfare, run.cost}};
  for (const Case& k : cases) {
    const DisclosureVerdict v = optimal_precision(k.p, k.wc, k.cost, cfg.grid);
    const GridOptimum g = argmax_equilibrium_welfare(k.p, k.wc, k.cost, cfg.grid, false);
    if (!v.optimal_tau_y) {
      c.agree("optimal_vs_grid[" + k.tag + "]", v.tie, {"optimal_precision"},
              "no unique analytic optimum (tie); grid argmax " + g.arg.to_string());
      continue;
    }
    const double tol = v.optimal_tau_y->is_finite() ? g.step : 0.0;
    c.same_precision("optimal_vs_grid[" + k.tag + "]", *v.optimal_tau_y, g.arg, tol,
                     {"optimal_precision", "classify_region"},
                     "region " + std::string(to_string(v.region)) + ", method " + v.method);
  }

  // Stationary point of the region-IV example.
  {
    const WelfareCoefficients wc = WelfareCoefficients::direct(0.0, -0.2);
    const TauBar tb = tau_bar(m0, wc, iso11);
    const double phi = solve_private_precision(m0, iso11, tb.tau_y);
    c.close("tau_bar_x_is_phi", *tb.tau_x, phi, 1e-10 * scale_of(phi), {"tau_bar"});
    c.close("mwd_at_tau_bar", 0.0, mwd(m0, wc, iso11, tb.tau_y).mwd, 1e-8, {"tau_bar", "mwd"});
    const FdResult fd = fd_social_value(m0, wc, iso11, tb.tau_y, cfg);
    c.close("social_value_at_tau_bar", 0.0, fd.value, 1e-6, {"tau_bar"});
  }
  // Linear cost: tau_bar_z = beta / sqrt(c) is where phi reaches zero.
  {
    const CostSpec lin = CostSpec::linear(0.04);
    const TauBar tb = tau_bar(m0, WelfareCoefficients::direct(3.0, 0.5), lin);
    const bool edge = solve_private_precision(m0, lin, tb.tau_y * (1.0 - 1e-6)) > 0.0 &&
                      solve_private_precision(m0, lin, tb.tau_y * (1.0 + 1e-6)) == 0.0;
    c.close("tau_bar_linear", tb.tau_z, 5.0, 1e-12, {"tau_bar"});
    c.agree("tau_bar_linear_is_corner_edge", edge, {"tau_bar"});
  }
  // Gross welfare of the beauty contest with lambda = 2. Above the gross
  // threshold a dip needs a cheap enough cost, so c = 1e-4 puts tau_bar_y > 0.
  for (double r : {0.25, 0.5}) {
    const ApplicationPreset b = beauty_preset(r);
    const CostSpec cost = CostSpec::isoelastic(r < 1.0 / 3.0 ? 1.0 : 1e-4, 2.0);
    const GridOptimum g = argmax_equilibrium_welfare(b.params, b.welfare, cost, cfg.grid, true);
    const DisclosureVerdict v = gross_optimal_precision(b.params, b.welfare, cost, cfg.grid);
    if (r < 1.0 / 3.0) {
      c.agree(label("beauty_gross_full", r), v.region == Region::I && g.at_limit,
              {"gross_optimal_precision"});
      continue;
    }
    const double ty = 0.5 * v.tau_bar_y.value_or(0.0);
    const bool dip = ty > 0.0 && fd_along_path(b.params, cost, ty, cfg.fd_step, [&](double tx, double y) {
                                   return gross_welfare(b.params, b.welfare, cost, tx, y);
                                 }).value < 0.0;
    c.agree(label("beauty_gross_not_monotone", r), v.region == Region::II && dip,
            {"gross_optimal_precision"}, "finite-difference gross welfare slope negative below tau_bar_y");
  }
}

// --------------------------------------------------------------------- robust

void robust_suite(Collector& c, const OracleConfig& cfg, const RunConfig& run) {
  const ModelParams m0{0.0, 1.0, 1.0, 0.0};
  struct FCase {
    std::string tag;
    ModelParams p;
    WelfareCoefficients wc;
    double ty;
    PrecisionChoice kappa;
  };
  std::vector<FCase> fcases{
      {"cournot_delta_2", cournot_preset(2.0).params, WelfareCoefficients::direct(1.0, 1.0), 1.0,
       PrecisionChoice::finite(10.0)},
      {"interior", m0, WelfareCoefficients::direct(0.0, -0.2), 1.0, PrecisionChoice::finite(10.0)},
      {"interior_inf", m0, WelfareCoefficients::direct(0.0, -0.2), 1.0, PrecisionChoice::infinite()},
      {"endpoints", m0, WelfareCoefficients::direct(3.0, -0.5), 2.0, PrecisionChoice::finite(4.0)}};
  const PrecisionChoice run_kappa = run.kappa.value_or(PrecisionChoice::finite(10.0));
  for (double ty : {0.5, 2.0}) {
    fcases.push_back({label("config", ty), run.model, run.welfare, ty, run_kappa});
    fcases.push_back({label("config_inf", ty), run.model, run.welfare, ty, PrecisionChoice::infinite()});
  }
  for (const FCase& k : fcases) {
    const WorstCase a = worst_case_welfare(k.p, k.wc, k.ty, k.kappa);
    const GridOptimum g = argmin_linear_welfare(k.p, k.wc, k.ty, k.kappa);
    c.close("worst_case_vs_brute_force[" + k.tag + "]", a.value, g.value, 1e-8 * scale_of(a.value),
            {"worst_case_welfare", "w0"}, "1e6-point infimum over tau_x");
  }
  {
    const WelfareCoefficients wc = WelfareCoefficients::direct(0.0, -0.2);
    const double f = *interior_minimizer_f(m0, wc, 1.0).value;
    const double h = 1e-6 * f;
    const double slope = (w0(m0, wc, f + h, 1.0) - w0(m0, wc, f - h, 1.0)) / (2.0 * h);
    c.close("f_is_stationary", 0.0, slope, 1e-9, {"interior_minimizer_f"});
    const GridOptimum g = argmin_linear_welfare(m0, wc, 1.0, PrecisionChoice::finite(10.0), 10001);
    c.close("f_vs_grid_argmin", f, g.arg.as_double(), g.step, {"interior_minimizer_f"});
  }

  struct RCase {
    std::string tag;
    ModelParams p;
    WelfareCoefficients wc;
    PrecisionChoice kappa;
    GridSpec grid;
  };
  const GridSpec lin100{0.0, 100.0, 1001, false};
  std::vector<RCase> rcases{
      {"eta_pos_inf", m0, WelfareCoefficients::direct(1.0, 1.0), PrecisionChoice::infinite(), cfg.grid},
      {"eta_pos_1", m0, WelfareCoefficients::direct(1.0, 1.0), PrecisionChoice::finite(1.0), cfg.grid},
      {"decreasing_0.5", m0, WelfareCoefficients::direct(0.0, -1.0), PrecisionChoice::finite(0.5), cfg.grid},
      {"decreasing_1", m0, WelfareCoefficients::direct(0.0, -1.0), PrecisionChoice::finite(1.0), cfg.grid},
      {"decreasing_10", m0, WelfareCoefficients::direct(0.0, -1.0), PrecisionChoice::finite(10.0), cfg.grid},
      {"peak_g", m0, WelfareCoefficients::direct(0.0, -0.1), PrecisionChoice::finite(1.0), lin100}};
  if (run.welfare.eta != 0.0) {
    rcases.push_back({"config", run.model, run.welfare, run_kappa, cfg.grid});
  }
  for (const RCase& k : rcases) {
    const RobustVerdict v = robust_precision(k.p, k.wc, k.kappa);
    const GridOptimum g = argmax_worst_case(k.p, k.wc, k.kappa, k.grid);
    if (v.indifferent) {
      c.agree("robust_vs_grid[" + k.tag + "]", true, {"robust_precision"}, "constant F");
      continue;
    }
    const double tol = v.robust_tau_y->is_finite() ? g.step : 0.0;
    c.same_precision("robust_vs_grid[" + k.tag + "]", *v.robust_tau_y, g.arg, tol,
                     {"robust_precision"}, "shape " + std::string(to_string(v.shape)));
  }

  // Cost-free monotonicity against MWD signs across elasticities.
  auto mwd_signs = [&](const WelfareCoefficients& wc, double lambda, int* pos, int* neg) {
    const CostSpec cost = CostSpec::isoelastic(0.05, lambda);
    for (double ty : {0.01, 0.1, 1.0, 3.0}) {
      if (solve_private_precision(m0, cost, ty) == 0.0) continue;
      const double m = mwd(m0, wc, cost, ty).mwd;
      if (m > 0.0) ++*pos;
      if (m < 0.0) ++*neg;
    }
  };
  {
    const WelfareCoefficients inc = WelfareCoefficients::direct(0.0, 0.5);
    const WelfareCoefficients dep = WelfareCoefficients::direct(0.0, -0.5);
    const WelfareCoefficients dec = WelfareCoefficients::direct(2.0, -0.5);
    int ip = 0, in = 0, dp = 0, dn = 0, small_p = 0, small_n = 0, large_p = 0, large_n = 0;
    for (double lambda : {0.0, 1.0, 5.0, 50.0}) {
      mwd_signs(inc, lambda, &ip, &in);
      mwd_signs(dec, lambda, &dp, &dn);
    }
    mwd_signs(dep, 0.0, &small_p, &small_n);
    mwd_signs(dep, 50.0, &large_p, &large_n);
    c.agree("monotonicity_increasing",
            classify_cost_free_monotonicity(m0, inc) == CostFreeMonotonicity::AlwaysIncreasing &&
                ip > 0 && in == 0,
            {"classify_cost_free_monotonicity"});
    c.agree("monotonicity_decreasing",
            classify_cost_free_monotonicity(m0, dec) == CostFreeMonotonicity::AlwaysDecreasing &&
                dn > 0 && dp == 0,
            {"classify_cost_free_monotonicity"});
    c.agree("monotonicity_cost_dependent",
            classify_cost_free_monotonicity(m0, dep) == CostFreeMonotonicity::CostDependent &&
                small_p > 0 && large_n > 0,
            {"classify_cost_free_monotonicity"}, "mwd > 0 for lambda = 0, < 0 for lambda = 50");
  }
}

// --------------------------------------------------------------- applications

void applications_suite(Collector& c, const OracleConfig& cfg, const RunConfig&) {
  const CournotThresholds ct = cournot_thresholds(1.0, CostSpec::isoelastic(1.0, 2.0), 1.0);
  c.close("delta_star_lambda_2", ct.delta_star, 2.0, 0.0, {"cournot_thresholds"});
  const BeautyThresholds bt = beauty_thresholds(2.0);
  c.close("r_star_lambda_2", bt.r_star, 2.0 / 3.0, 0.0, {"beauty_thresholds"});
  c.close("r_gross_lambda_2", bt.r_gross, 1.0 / 3.0, 0.0, {"beauty_thresholds"});

  // delta** exceeds delta*, and delta** separates full from no disclosure.
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double cc : {0.1, 1.0}) {
      const CostSpec cost = CostSpec::isoelastic(cc, lambda);
      const CournotThresholds t = cournot_thresholds(10.0, cost, 1.0);
      c.agree("delta_double_star_above_delta_star[l=" + format_double(lambda) +
                  ",c=" + format_double(cc) + "]",
              t.delta_double_star > t.delta_star, {"cournot_thresholds"});
    }
  }

  struct Case {
    ApplicationPreset preset;
    double lambda, cost_c;
  };
  const std::vector<Case> cases{{cournot_preset(1.0), 1.0, 1.0},
                                {cournot_preset(10.0), 1.0, 0.1},
                                {cournot_preset(10.0), 1.0, 1.0},
                                {beauty_preset(0.25), 2.0, 1.0},
                                {beauty_preset(0.5), 2.0, 1.0},
                                {beauty_preset(0.8), 2.0, 1.0}};
  for (const Case& k : cases) {
    const CorollaryReport rep = corollary_checks(k.preset, k.lambda, k.cost_c, cfg.grid);
    for (const ClaimCheck& cl : rep.claims) {
      c.agree(rep.preset + "[" + format_double(rep.parameter) + ",c=" + format_double(k.cost_c) +
                  "]." + cl.name,
              cl.pass, {"cournot_thresholds", "beauty_thresholds"},
              "expected " + cl.expected + ", observed " + cl.observed + "; " + cl.witness);
    }
  }
}

}  // namespace

bool VerifyReport::all_pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

Json VerifyReport::to_json() const {
  Json arr = Json::array();
  for (const CheckResult& c : checks) {
    Json covers = Json::array();
    for (const auto& s : c.covers) covers.push_back(s);
    arr.push_back(Json{{"suite", c.suite},
                       {"name", c.name},
                       {"analytic", number_to_json(c.analytic)},
                       {"oracle", number_to_json(c.oracle)},
                       {"tolerance", number_to_json(c.tolerance)},
                       {"pass", c.pass},
                       {"covers", covers},
                       {"detail", c.detail}});
  }
  return Json{{"seed", seed},
              {"suite", suite},
              {"checks_total", checks.size()},
              {"checks_failed", failures()},
              {"pass", all_pass()},
              {"checks", arr}};
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"all",     "equilibrium", "welfare", "moments",
                                          "mwd",     "optimal",     "robust",  "applications"};
  return s;
}

const std::vector<std::string>& analytic_operations() {
  static const std::vector<std::string> ops{
      "equilibrium_coefficients", "marginal_benefit",   "solve_private_precision",
      "phi_inverse",              "crowding_out_slope", "volatility",
      "dispersion",               "covariance_with_state", "welfare",
      "gross_welfare",            "cost_dispersion_identity_check", "mwd0",
      "mwd_star",                 "mvd",                "mwd",
      "eta_lower",                "classify_region",    "tau_bar",
      "optimal_precision",        "gross_optimal_precision", "w0",
      "interior_minimizer_f",     "worst_case_welfare", "robust_precision",
      "classify_cost_free_monotonicity", "cournot_thresholds", "beauty_thresholds"};
  return ops;
}

VerifyReport run_verify(const std::string& suite, const OracleConfig& cfg, const RunConfig& run) {
  cfg.validate();
  using Fn = void (*)(Collector&, const OracleConfig&, const RunConfig&);
  const std::vector<std::pair<std::string, Fn>> table{
      {"equilibrium", equilibrium_suite}, {"welfare", welfare_suite},
      {"moments", moments_suite},         {"mwd", mwd_suite},
      {"optimal", optimal_suite},         {"robust", robust_suite},
      {"applications", applications_suite}};
  if (std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end()) {
    throw InvalidArgument("unknown suite: " + suite);
  }
  VerifyReport rep;
  rep.seed = cfg.seed;
  rep.suite = suite;
  for (const auto& [name, fn] : table) {
    if (suite != "all" && suite != name) continue;
    Collector c(name);
    fn(c, cfg, run);
    for (auto& r : c.take()) rep.checks.push_back(std::move(r));
  }
  return rep;
}

}  // namespace disclose
