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

#include <optional>
#include <string_view>

#include "disclose/model.hpp"

namespace disclose {

// Worst-case welfare over convex costs whose equilibrium private precision
// never exceeds kappa. The worst case is always attained by a linear cost, so
// F_kappa(tau_y) = inf over tau_x in [0, kappa] of
//   W0(tau_x, tau_y) = eta V(tau_x, tau_y) + (zeta - 1) D(tau_x, tau_y).

/// eta V + (zeta - 1) D.
double w0(const ModelParams& p, const WelfareCoefficients& wc, double tau_x, double tau_y);

/// W0 as tau_x -> infinity: eta beta^2 / ((1-alpha)^2 tau_theta).
double w0_limit(const ModelParams& p, const WelfareCoefficients& wc);

struct InteriorMinimizer {
  std::optional<double> value;  // f(tau_y) when it is a nonnegative stationary point
  bool degenerate = false;      // 2 eta - (1-alpha)(zeta-1) == 0
};

/// f(tau_y) = -(zeta-1)(tau_y + tau_theta) / (2 eta - (1-alpha)(zeta-1)).
InteriorMinimizer interior_minimizer_f(const ModelParams& p, const WelfareCoefficients& wc,
                                       double tau_y);

struct WorstCase {
  double value = 0.0;
  PrecisionChoice argmin_tau_x = PrecisionChoice::finite(0.0);
};

/// F_kappa(tau_y) by comparing the candidates 0, kappa (or the tau_x -> inf
/// limit) and f(tau_y) when it lies inside [0, kappa]. Ties go to the
/// smaller tau_x.
WorstCase worst_case_welfare(const ModelParams& p, const WelfareCoefficients& wc, double tau_y,
                             PrecisionChoice kappa);

/// g(kappa) = -(1-alpha)(3 eta - 2 (1-alpha)(zeta-1)) kappa / eta - tau_theta.
/// Requires eta != 0.
double g_kappa(const ModelParams& p, const WelfareCoefficients& wc, double kappa);

enum class WorstCaseShape { Increasing, Constant, Decreasing, NonMonotone };
std::string_view to_string(WorstCaseShape s);

/// Location of argmin over tau_x as tau_y varies.
enum class MinimizerPath {
  AtZero,             // W0 increasing in tau_x
  AtKappa,            // W0 decreasing in tau_x, or f above kappa for all tau_y >= 0
  Interior,           // f(tau_y), which stays below kappa
  InteriorThenKappa,  // f(tau_y) until it reaches kappa, then kappa
  Endpoints,          // f is a maximum; the smaller of W0(0) and W0(kappa)
  Flat,               // W0 does not depend on tau_x
};
std::string_view to_string(MinimizerPath m);

MinimizerPath minimizer_path(const ModelParams& p, const WelfareCoefficients& wc,
                             PrecisionChoice kappa);

/// tau_y at which f(tau_y) = kappa, for MinimizerPath::InteriorThenKappa.
std::optional<double> minimizer_switch_point(const ModelParams& p, const WelfareCoefficients& wc,
                                             PrecisionChoice kappa);

struct RobustVerdict {
  PrecisionChoice kappa = PrecisionChoice::infinite();
  bool applicable = true;  // false when eta == 0
  std::optional<PrecisionChoice> robust_tau_y;
  WorstCaseShape shape = WorstCaseShape::Increasing;
  // True when F_kappa is constant, so every tau_y is robust; robust_tau_y
  // then reports 0.
  bool indifferent = false;
  MinimizerPath minimizer = MinimizerPath::AtZero;
  std::optional<double> minimizer_switch;
  std::optional<double> g_kappa;
  std::string method = "analytic";
  std::string note;
};

/// kappa-robust precision of public information. eta == 0 is outside the
/// analytic case split and returns applicable = false.
RobustVerdict robust_precision(const ModelParams& p, const WelfareCoefficients& wc,
                               PrecisionChoice kappa);

enum class CostFreeMonotonicity { AlwaysIncreasing, AlwaysDecreasing, CostDependent };
std::string_view to_string(CostFreeMonotonicity m);

/// Whether equilibrium welfare is monotone in tau_y for every convex cost.
CostFreeMonotonicity classify_cost_free_monotonicity(const ModelParams& p,
                                                     const WelfareCoefficients& wc);

}  // namespace disclose
