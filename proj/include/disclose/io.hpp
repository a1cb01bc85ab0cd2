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

// JSON and CSV encodings shared by the command-line tool and the tests.
// Infinite precisions are written as the string "inf".

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "disclose/applications.hpp"
#include "disclose/model.hpp"
#include "disclose/mwd.hpp"
#include "disclose/optimal.hpp"
#include "disclose/oracles.hpp"
#include "disclose/robust.hpp"
#include "disclose/welfare.hpp"

namespace disclose {

using Json = nlohmann::ordered_json;

struct PresetConfig {
  PresetKind kind = PresetKind::Cournot;
  double parameter = 0.0;  // delta or r
  BeautyScaling scaling = BeautyScaling::Default;
};

/// Everything a run needs. Exactly one welfare source: direct (zeta, eta),
/// material coefficients, or a preset.
struct RunConfig {
  ModelParams model;
  CostSpec cost = CostSpec::isoelastic(1.0, 1.0);
  WelfareCoefficients welfare = WelfareCoefficients::direct(1.0, 1.0);
  std::optional<MaterialWelfareSpec> material;
  std::optional<PresetConfig> preset;
  std::optional<PrecisionChoice> kappa;
  std::optional<GridSpec> grid;

  /// Rebuilds model and welfare from the preset after overrides.
  void apply_preset();
};

/// Keys: alpha, beta, tau_theta, theta_bar,
///   cost = {kind: linear|isoelastic|tabulated, c, lambda, points: [[tau, C'], ...]},
///   welfare = {zeta, eta} or {c1, c2, c3, c4, c5},
///   preset = {name: cournot|beauty, delta | r, scaling: default|unscaled},
///   kappa (number or "inf"), grid ("lo:hi:n[:log]").
/// Unknown keys and malformed values throw InvalidArgument.
RunConfig parse_run_config(const Json& j);
RunConfig load_run_config(const std::string& path);

Json precision_to_json(const PrecisionChoice& v);
PrecisionChoice precision_from_json(const Json& j);
/// Number or the strings "inf" / "-inf".
Json number_to_json(double v);
double number_from_json(const Json& j);

Json to_json(const ModelParams& p);
Json to_json(const CostSpec& c);
Json to_json(const WelfareCoefficients& w);
Json to_json(const EquilibriumSolution& s);
Json to_json(const MwdBreakdown& m);
Json to_json(const DisclosureVerdict& v);
Json to_json(const RobustVerdict& v);
Json to_json(const McMoments& m);
Json to_json(const CorollaryReport& r);

EquilibriumSolution solution_from_json(const Json& j);
DisclosureVerdict disclosure_verdict_from_json(const Json& j);
RobustVerdict robust_verdict_from_json(const Json& j);

/// Fixed sweep column order.
const std::vector<std::string>& sweep_columns();
std::string csv_header();
/// One CSV line (no newline). mwd columns are empty at a corner.
std::string csv_row(const EquilibriumSolution& s, const std::optional<MwdBreakdown>& m);
/// %.17g ("inf" / "-inf" for infinities, "nan" for NaN).
std::string format_double(double v);

}  // namespace disclose
