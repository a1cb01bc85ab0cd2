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

#include "disclose/robust.hpp"

#include <cmath>

#include "disclose/error.hpp"
#include "disclose/welfare.hpp"

namespace disclose {

namespace {

// 2 eta - (1-alpha)(zeta-1): W0 is increasing in tau_x exactly where
// A tau_x + (zeta-1)(tau_y + tau_theta) > 0.
double slope_coefficient(const ModelParams& p, const WelfareCoefficients& wc) {
  return 2.0 * wc.eta - p.one_minus_alpha() * (wc.zeta - 1.0);
}

}  // namespace

double w0(const ModelParams& p, const WelfareCoefficients& wc, double tau_x, double tau_y) {
  return wc.eta * volatility(p, tau_x, tau_y) + (wc.zeta - 1.0) * dispersion(p, tau_x, tau_y);
}

double w0_limit(const ModelParams& p, const WelfareCoefficients& wc) {
  p.validate();
  return wc.eta * p.volatility_limit();
}

InteriorMinimizer interior_minimizer_f(const ModelParams& p, const WelfareCoefficients& wc,
                                       double tau_y) {
  p.validate();
  if (!(tau_y >= 0.0)) throw InvalidArgument("tau_y must be >= 0");
  InteriorMinimizer out;
  const double a = slope_coefficient(p, wc);
  if (a == 0.0) {
    out.degenerate = true;
    return out;
  }
  const double f = -(wc.zeta - 1.0) * (tau_y + p.tau_theta) / a;
  if (f >= 0.0) out.value = f == 0.0 ? 0.0 : f;
  return out;
}

WorstCase worst_case_welfare(const ModelParams& p, const WelfareCoefficients& wc, double tau_y,
                             PrecisionChoice kappa) {
  p.validate();
  if (!(tau_y >= 0.0) || std::isinf(tau_y)) throw InvalidArgument("tau_y must be finite and >= 0");
  WorstCase best{w0(p, wc, 0.0, tau_y), PrecisionChoice::finite(0.0)};
  auto consider = [&](double value, PrecisionChoice arg) {
    if (value < best.value) best = WorstCase{value, arg};
  };
  const InteriorMinimizer f = interior_minimizer_f(p, wc, tau_y);
  if (f.value && *f.value > 0.0 && (kappa.is_infinite() || *f.value < kappa.value())) {
    consider(w0(p, wc, *f.value, tau_y), PrecisionChoice::finite(*f.value));
  }
  if (kappa.is_infinite()) {
    consider(w0_limit(p, wc), PrecisionChoice::infinite());
  } else if (kappa.value() > 0.0) {
    consider(w0(p, wc, kappa.value(), tau_y), kappa);
  }
  return best;
}

double g_kappa(const ModelParams& p, const WelfareCoefficients& wc, double kappa) {
  p.validate();
  if (wc.eta == 0.0) throw InvalidArgument("g(kappa) requires eta != 0");
  const double a1 = p.one_minus_alpha();
  return -a1 * (3.0 * wc.eta - 2.0 * a1 * (wc.zeta - 1.0)) * kappa / wc.eta - p.tau_theta;
}

std::string_view to_string(WorstCaseShape s) {
  switch (s) {
    case WorstCaseShape::Increasing:
      return "increasing";
    case WorstCaseShape::Constant:
      return "constant";
    case WorstCaseShape::Decreasing:
      return "decreasing";
    case WorstCaseShape::NonMonotone:
      return "single_peaked";
  }
  return "unknown";
}

std::string_view to_string(MinimizerPath m) {
  switch (m) {
    case MinimizerPath::AtZero:
      return "at_zero";
    case MinimizerPath::AtKappa:
      return "at_kappa";
    case MinimizerPath::Interior:
      return "interior";
    case MinimizerPath::InteriorThenKappa:
      return "interior_then_kappa";
    case MinimizerPath::Endpoints:
      return "endpoints";
    case MinimizerPath::Flat:
      return "flat";
  }
  return "unknown";
}

MinimizerPath minimizer_path(const ModelParams& p, const WelfareCoefficients& wc,
                             PrecisionChoice kappa) {
  p.validate();
  const double a = slope_coefficient(p, wc);
  const double b = wc.zeta - 1.0;
  if (kappa.is_finite() && kappa.value() == 0.0) return MinimizerPath::AtZero;
  if (a == 0.0 && b == 0.0) return MinimizerPath::Flat;
  if (a >= 0.0 && b >= 0.0) return MinimizerPath::AtZero;
  if (a <= 0.0 && b <= 0.0) return MinimizerPath::AtKappa;
  if (a < 0.0) return MinimizerPath::Endpoints;
  if (kappa.is_infinite()) return MinimizerPath::Interior;
  // f already exceeds kappa at tau_y = 0: the cap binds on the whole range.
  if (kappa.value() * a / (1.0 - wc.zeta) - p.tau_theta <= 0.0) return MinimizerPath::AtKappa;
  return MinimizerPath::InteriorThenKappa;
}

std::optional<double> minimizer_switch_point(const ModelParams& p, const WelfareCoefficients& wc,
                                             PrecisionChoice kappa) {
  if (minimizer_path(p, wc, kappa) != MinimizerPath::InteriorThenKappa) return std::nullopt;
  const double a = slope_coefficient(p, wc);
  return kappa.value() * a / (1.0 - wc.zeta) - p.tau_theta;
}

RobustVerdict robust_precision(const ModelParams& p, const WelfareCoefficients& wc,
                               PrecisionChoice kappa) {
  p.validate();
  RobustVerdict v;
  v.kappa = kappa;
  v.minimizer = minimizer_path(p, wc, kappa);
  v.minimizer_switch = minimizer_switch_point(p, wc, kappa);
  const double a1 = p.one_minus_alpha();
  const double eta = wc.eta;
  const double b = wc.zeta - 1.0;

  if (eta == 0.0) {
    v.applicable = false;
    v.method = "none";
    v.note = "eta = 0 lies outside the analytic case split; use the grid oracle";
    return v;
  }
  if (kappa.is_finite()) v.g_kappa = g_kappa(p, wc, kappa.value());
  if (kappa.is_finite() && kappa.value() == 0.0) {
    // Only tau_x = 0 is feasible: F_0 = eta V(0, tau_y).
    v.shape = eta > 0.0 ? WorstCaseShape::Increasing : WorstCaseShape::Decreasing;
    v.robust_tau_y = eta > 0.0 ? PrecisionChoice::infinite() : PrecisionChoice::finite(0.0);
    return v;
  }
  if (eta > 0.0) {
    v.shape = WorstCaseShape::Increasing;
    v.robust_tau_y = PrecisionChoice::infinite();
    return v;
  }
  if (eta <= 2.0 * a1 * b / 3.0) {
    v.robust_tau_y = PrecisionChoice::finite(0.0);
    if (kappa.is_infinite()) {
      v.shape = WorstCaseShape::Constant;
      v.indifferent = true;
      v.note = "F_inf is constant; every tau_y is robust";
    } else {
      v.shape = WorstCaseShape::Decreasing;
    }
    return v;
  }
  // 0 > eta > 2 (1-alpha)(zeta-1) / 3.
  if (kappa.is_finite()) {
    const double g = *v.g_kappa;
    v.robust_tau_y = PrecisionChoice::finite(std::max(g, 0.0));
    v.shape = g > 0.0 ? WorstCaseShape::NonMonotone : WorstCaseShape::Decreasing;
    return v;
  }
  if (eta <= a1 * b / 2.0) {
    v.shape = WorstCaseShape::Constant;
    v.indifferent = true;
    v.robust_tau_y = PrecisionChoice::finite(0.0);
    v.note = "F_inf is constant; every tau_y is robust";
  } else {
    v.shape = WorstCaseShape::Increasing;
    v.robust_tau_y = PrecisionChoice::infinite();
  }
  return v;
}

std::string_view to_string(CostFreeMonotonicity m) {
  switch (m) {
    case CostFreeMonotonicity::AlwaysIncreasing:
      return "always_increasing";
    case CostFreeMonotonicity::AlwaysDecreasing:
      return "always_decreasing";
    case CostFreeMonotonicity::CostDependent:
      return "cost_dependent";
  }
  return "unknown";
}

CostFreeMonotonicity classify_cost_free_monotonicity(const ModelParams& p,
                                                     const WelfareCoefficients& wc) {
  p.validate();
  const double a1 = p.one_minus_alpha();
  const double z = wc.zeta;
  const double e = wc.eta;
  const bool increasing = (z <= 0.0 && e >= 0.0) || (z > 0.0 && z < 3.0 && e >= 2.0 * a1 * z / 3.0) ||
                          (z >= 3.0 && e > a1 * (z - 1.0));
  if (increasing) return CostFreeMonotonicity::AlwaysIncreasing;
  const bool decreasing = (z <= 1.0 && e < a1 * (z - 1.0)) || (z > 1.0 && e <= 0.0);
  if (decreasing) return CostFreeMonotonicity::AlwaysDecreasing;
  return CostFreeMonotonicity::CostDependent;
}

}  // namespace disclose
