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

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "disclose/error.hpp"
#include "disclose/io.hpp"
#include "disclose/mwd.hpp"

using namespace disclose;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

RunConfig parse(const char* text) { return parse_run_config(Json::parse(text)); }

}  // namespace

TEST_CASE("numbers and precisions survive a JSON round trip") {
  CHECK(number_to_json(kInf) == "inf");
  CHECK(number_to_json(-kInf) == "-inf");
  CHECK(number_from_json(Json("inf")) == kInf);
  CHECK(number_from_json(Json("-inf")) == -kInf);
  CHECK_THROWS_AS(number_from_json(Json("abc")), InvalidArgument);
  CHECK_THROWS_AS(number_from_json(Json(nullptr)), InvalidArgument);
  for (double v : {0.0, 0.1, 1.0 / 3.0, 1e-300, 12345.678}) {
    CHECK(number_from_json(Json::parse(number_to_json(v).dump())) == v);
  }
  CHECK(precision_from_json(precision_to_json(PrecisionChoice::infinite())).is_infinite());
  CHECK(precision_from_json(Json(2.5)) == PrecisionChoice::finite(2.5));
  CHECK_THROWS_AS(precision_from_json(Json(-1.0)), InvalidArgument);
}

TEST_CASE("equilibrium solutions round trip exactly") {
  const ModelParams p{0.3, 0.9, 1.7, 0.0};
  const auto wc = WelfareCoefficients::direct(0.4, -0.3);
  const CostSpec cost = CostSpec::isoelastic(0.2, 1.5);
  for (PrecisionChoice ty : {PrecisionChoice::finite(0.0), PrecisionChoice::finite(0.77),
                             PrecisionChoice::infinite()}) {
    const EquilibriumSolution s = solve_equilibrium(p, wc, cost, ty);
    const EquilibriumSolution r = solution_from_json(Json::parse(to_json(s).dump()));
    CHECK(r.tau_y == s.tau_y);
    CHECK(r.tau_x == s.tau_x);
    CHECK(r.b_x == s.b_x);
    CHECK(r.b_y == s.b_y);
    CHECK(r.V == s.V);
    CHECK(r.D == s.D);
    CHECK(r.cost == s.cost);
    CHECK(r.W == s.W);
    CHECK(r.W_gross == s.W_gross);
  }
  CHECK(to_json(solve_equilibrium(p, wc, cost, PrecisionChoice::infinite()))["tau_y"] == "inf");
}

TEST_CASE("verdicts round trip") {
  const ModelParams m0{0.0, 1.0, 1.0, 0.0};
  const DisclosureVerdict v =
      optimal_precision(m0, WelfareCoefficients::direct(0.0, -0.2), CostSpec::isoelastic(1.0, 1.0));
  const DisclosureVerdict rv = disclosure_verdict_from_json(Json::parse(to_json(v).dump()));
  CHECK(rv.region == v.region);
  CHECK(rv.optimal_tau_y == v.optimal_tau_y);
  CHECK(rv.tau_bar_y == v.tau_bar_y);
  CHECK(rv.tau_bar_x == v.tau_bar_x);
  CHECK(rv.welfare_at_zero == v.welfare_at_zero);
  CHECK(rv.welfare_at_infinity == v.welfare_at_infinity);
  CHECK(rv.candidates.size() == v.candidates.size());

  const RobustVerdict r =
      robust_precision(m0, WelfareCoefficients::direct(0.0, -0.1), PrecisionChoice::finite(1.0));
  const RobustVerdict rr = robust_verdict_from_json(Json::parse(to_json(r).dump()));
  CHECK(rr.kappa == r.kappa);
  CHECK(rr.robust_tau_y == r.robust_tau_y);
  CHECK(rr.shape == r.shape);
  CHECK(rr.minimizer == r.minimizer);
  CHECK(rr.g_kappa == r.g_kappa);
  CHECK(rr.indifferent == r.indifferent);
}

TEST_CASE("configuration parsing") {
  const RunConfig a = parse(R"({"alpha": 0.5, "tau_theta": 2, "cost": {"kind": "linear", "c": 0.1},
                                "welfare": {"zeta": 1, "eta": 2}, "kappa": "inf", "grid": "1:2:3"})");
  CHECK(a.model.alpha == 0.5);
  CHECK(a.model.beta == 1.0);
  CHECK(a.cost.kind() == CostKind::Linear);
  CHECK(a.welfare.eta == 2.0);
  CHECK(a.kappa->is_infinite());
  CHECK(a.grid->points == 3);

  const RunConfig t = parse(R"({"cost": {"kind": "tabulated", "points": [[0, 0.1], [1, 0.5], [4, 2]]},
                                "welfare": {"zeta": 0, "eta": 1}})");
  CHECK(t.cost.kind() == CostKind::Tabulated);

  const RunConfig pre = parse(R"({"tau_theta": 1, "preset": {"name": "beauty", "r": 0.25}})");
  CHECK(pre.model.alpha == 0.25);
  CHECK(pre.model.beta == doctest::Approx(0.75));
  CHECK(pre.welfare.zeta == doctest::Approx(1.25));

  const RunConfig mat = parse(R"({"welfare": {"c1": 0, "c2": 0, "c3": 0, "c4": -1, "c5": 0}})");
  CHECK(mat.material.has_value());
}

TEST_CASE("configuration errors are reported as invalid input") {
  CHECK_THROWS_AS(parse(R"({"alpah": 0})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"welfare": {"zeta": 1, "eta": 1, "c1": 0}})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"welfare": {}})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"cost": {"kind": "cubic"}})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"cost": {"kind": "isoelastic", "c": -1, "lambda": 1}})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"alpha": 1})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"tau_theta": 0})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"alpha": 0.1, "preset": {"name": "cournot", "delta": 1}})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"preset": {"name": "beauty", "r": 1.5}})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"grid": "1:2"})"), InvalidArgument);
  CHECK_THROWS_AS(parse(R"({"kappa": -1})"), InvalidArgument);
  CHECK_THROWS_AS(load_run_config("/nonexistent/config.json"), InvalidArgument);
}

TEST_CASE("CSV formatting") {
  CHECK(csv_header() ==
        "tau_y,tau_x,b_x,b_y,V,D,cost,W,W_gross,mwd,mwd0,mwd_star,mvd,rho");
  CHECK(sweep_columns().size() == 14);
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(0.1) == "0.10000000000000001");
  const ModelParams m0{0.0, 1.0, 1.0, 0.0};
  const CostSpec lin = CostSpec::linear(1.0);
  const auto s = solve_equilibrium(m0, WelfareCoefficients::direct(1, 1), lin,
                                   PrecisionChoice::finite(0.0));
  const auto cells = split(csv_row(s, std::nullopt), ',');
  REQUIRE(cells.size() == 14);
  for (std::size_t k = 9; k < 14; ++k) CHECK(cells[k].empty());
}

TEST_CASE("golden sweep") {
  std::ifstream in(std::string(DISCLOSE_GOLDEN_DIR) + "/region_iv_sweep.csv");
  REQUIRE(in);
  const RunConfig cfg = load_run_config(std::string(DISCLOSE_SOURCE_DIR) + "/configs/region_iv.json");
  std::string line;
  std::getline(in, line);
  CHECK(line == csv_header());
  int rows = 0;
  while (std::getline(in, line)) {
    const auto want = split(line, ',');
    const double ty = std::stod(want[0]);
    const auto s = solve_equilibrium(cfg.model, cfg.welfare, cfg.cost, PrecisionChoice::finite(ty));
    const auto got = split(csv_row(s, mwd(cfg.model, cfg.welfare, cfg.cost, ty)), ',');
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CAPTURE(ty);
      CAPTURE(k);
      const double w = std::stod(want[k]);
      const double g = std::stod(got[k]);
      CHECK(std::abs(g - w) <= 1e-12 * std::max(1.0, std::abs(w)));
    }
    ++rows;
  }
  CHECK(rows == 4);
}
