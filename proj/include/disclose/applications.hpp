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

#include <string>
#include <vector>

#include "disclose/model.hpp"
#include "disclose/optimal.hpp"
#include "disclose/robust.hpp"

namespace disclose {

enum class PresetKind { Cournot, Beauty };

// Welfare pair used by the beauty-contest preset. The default is
// (1 + r, 1 - r), which corresponds to the material benefit
// -(1 - r)(a_i - theta)^2. Mapping -(a_i - theta)^2 through
// coefficients_from_material gives ((1 + r)/(1 - r), 1) instead.
enum class BeautyScaling { Default, Unscaled };

struct ApplicationPreset {
  PresetKind kind = PresetKind::Cournot;
  double parameter = 0.0;  // delta for Cournot, r for the beauty contest
  ModelParams params;
  WelfareCoefficients welfare;
  BeautyScaling scaling = BeautyScaling::Default;
  std::string note;

  std::string name() const;
  /// Gross-welfare pair (zeta + 1/(lambda+1), eta) for elasticity lambda.
  WelfareCoefficients gross_welfare(double lambda) const;
};

/// Cournot duopoly-style game with inverse demand slope delta > 0:
/// alpha = -delta/2, beta = 1/2, welfare = total profit with (zeta, eta) = (1, 1).
ApplicationPreset cournot_preset(double delta, double tau_theta = 1.0, double theta_bar = 0.0);

/// Beauty contest with 0 < r < 1: alpha = r, beta = 1 - r.
ApplicationPreset beauty_preset(double r, double tau_theta = 1.0, double theta_bar = 0.0,
                                BeautyScaling scaling = BeautyScaling::Default);

struct CournotThresholds {
  double delta_star = 0.0;         // 1 + 2/lambda; +inf when lambda = 0
  double delta_double_star = 0.0;  // +inf when lambda = 0 or phi(0) = 0
  double phi0 = 0.0;               // phi(0) at the given delta
};

/// delta** depends on phi(0), which depends on delta through alpha, so the
/// threshold is evaluated for the game with the given delta and cost.
CournotThresholds cournot_thresholds(double delta, const CostSpec& cost, double tau_theta);

struct BeautyThresholds {
  double r_star = 0.0;   // (lambda/2 + 1)/(lambda + 1)
  double r_gross = 0.0;  // lambda / (2 (lambda + 1))
};

BeautyThresholds beauty_thresholds(double lambda);

struct ClaimCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::string witness;
};

struct CorollaryReport {
  std::string preset;
  double parameter = 0.0;
  double lambda = 0.0;
  double c = 0.0;
  double tau_theta = 0.0;
  std::vector<ClaimCheck> claims;
  DisclosureVerdict optimal;
  DisclosureVerdict gross_optimal;
  RobustVerdict robust;

  bool all_pass() const;
};

/// Runs the optimal, gross-optimal and robust analyses on a preset with an
/// isoelastic cost (c, lambda) and checks each closed-form claim about the
/// application against both the analytic verdicts and grid searches.
CorollaryReport corollary_checks(const ApplicationPreset& preset, double lambda, double c,
                                 const GridSpec& grid = GridSpec{});

}  // namespace disclose
