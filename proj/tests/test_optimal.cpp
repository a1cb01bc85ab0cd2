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

#include "disclose/applications.hpp"
#include "disclose/error.hpp"
#include "disclose/mwd.hpp"
#include "disclose/optimal.hpp"
#include "disclose/oracles.hpp"
#include "disclose/welfare.hpp"
#include "test_support.hpp"

using namespace disclose;
namespace t = disclose::testing;

namespace {

const ModelParams kM0{0.0, 1.0, 1.0, 0.0};
const CostSpec kIso11 = CostSpec::isoelastic(1.0, 1.0);
// Root of the finite-difference social value for (zeta, eta) = (0, -0.2) at
// M0 with Isoelastic(1, 1), from an independent 30-digit computation.
constexpr double kTauBarY = 0.51426716069344971574;
constexpr double kTauBarX = 0.30285343213868994315;  // (1/6)^(2/3)

double social_value(const ModelParams& p, const WelfareCoefficients& w, const CostSpec& c, double ty) {
  return t::central_diff([&](double y) {
    return welfare(p, w, c, solve_private_precision(p, c, y), y);
  }, ty, 1e-6 * (1.0 + ty));
}

}  // namespace

TEST_CASE("region classification") {
  CHECK(classify_region(kM0, WelfareCoefficients::direct(1.0, 1.0), 1.0) == Region::I);
  CHECK(classify_region(kM0, WelfareCoefficients::direct(1.0, -1.0), 1.0) == Region::III);
  CHECK(classify_region(kM0, WelfareCoefficients::direct(0.0, -0.2), 1.0) == Region::IV);
  CHECK(classify_region(kM0, WelfareCoefficients::direct(3.0, 0.5), 0.0) == Region::II);
  CHECK(classify_region(kM0, WelfareCoefficients::direct(0.0, -0.4), 1.0) == Region::Boundary);
  CHECK(classify_region(kM0, WelfareCoefficients::direct(2.0, 0.0), 1.0) == Region::Boundary);
  CHECK(to_string(Region::II) == "II_corner_compare");
  for (Region r : {Region::I, Region::II, Region::III, Region::IV, Region::Boundary}) {
    CHECK(region_from_string(to_string(r)) == r);
  }
  CHECK_THROWS_AS(region_from_string("V"), InvalidArgument);
}

TEST_CASE("interior stationary point") {
  const WelfareCoefficients w = WelfareCoefficients::direct(0.0, -0.2);
  const TauBar tb = tau_bar(kM0, w, kIso11);
  REQUIRE(tb.tau_x.has_value());
  CHECK(*tb.tau_x == doctest::Approx(kTauBarX).epsilon(1e-12));
  CHECK(*tb.tau_x == doctest::Approx(std::pow(1.0 / 6.0, 2.0 / 3.0)).epsilon(1e-12));
  CHECK(tb.tau_z == doctest::Approx(1.0 + kTauBarY).epsilon(1e-12));
  CHECK(tb.tau_y == doctest::Approx(kTauBarY).epsilon(1e-12));
  CHECK(std::abs(mwd(kM0, w, kIso11, tb.tau_y).mwd) < 1e-8);
  CHECK(std::abs(social_value(kM0, w, kIso11, tb.tau_y)) < 1e-6);
  // sign pattern around the stationary point
  const double eps = 1e-3 * (1.0 + tb.tau_y);
  CHECK(social_value(kM0, w, kIso11, tb.tau_y - eps) > 0.0);
  CHECK(social_value(kM0, w, kIso11, tb.tau_y + eps) < 0.0);

  const TauBar lin = tau_bar(kM0, WelfareCoefficients::direct(3.0, 0.5), CostSpec::linear(0.04));
  CHECK_FALSE(lin.tau_x.has_value());
  CHECK(lin.tau_z == doctest::Approx(5.0));
  CHECK(lin.tau_y == doctest::Approx(4.0));
  CHECK(tau_bar(kM0, WelfareCoefficients::direct(3.0, 0.5), CostSpec::linear(2.0)).tau_y < 0.0);

  CHECK_THROWS_AS(tau_bar(kM0, WelfareCoefficients::direct(1.0, 1.0), kIso11), NoInteriorStationaryPoint);
  CHECK_THROWS_AS(tau_bar(kM0, WelfareCoefficients::direct(1.0, -1.0), kIso11), NoInteriorStationaryPoint);
  CHECK_THROWS_AS(tau_bar(kM0, w, CostSpec::tabulated({{0.0, 1.0}, {1.0, 2.0}})), InvalidArgument);
}

TEST_CASE("region II dip then rise") {
  const WelfareCoefficients w = WelfareCoefficients::direct(3.0, 0.5);
  const CostSpec c = CostSpec::isoelastic(0.01, 1.0);
  REQUIRE(classify_region(kM0, w, 1.0) == Region::II);
  const TauBar tb = tau_bar(kM0, w, c);
  REQUIRE(tb.tau_y > 0.0);
  const double eps = 1e-3 * (1.0 + tb.tau_y);
  CHECK(social_value(kM0, w, c, tb.tau_y - eps) < 0.0);
  CHECK(social_value(kM0, w, c, tb.tau_y + eps) > 0.0);
}

TEST_CASE("optimal precision verdicts agree with grid search") {
  const GridSpec grid;  // 400 log points on [1e-4, 1e4]
  {
    const DisclosureVerdict v = optimal_precision(kM0, WelfareCoefficients::direct(1.0, 1.0), kIso11);
    CHECK(v.region == Region::I);
    CHECK(*v.optimal_tau_y == PrecisionChoice::infinite());
    CHECK(argmax_equilibrium_welfare(kM0, WelfareCoefficients::direct(1.0, 1.0), kIso11, grid, false).at_limit);
  }
  {
    const DisclosureVerdict v = optimal_precision(kM0, WelfareCoefficients::direct(1.0, -1.0), kIso11);
    CHECK(v.region == Region::III);
    CHECK(*v.optimal_tau_y == PrecisionChoice::finite(0.0));
    CHECK(argmax_equilibrium_welfare(kM0, WelfareCoefficients::direct(1.0, -1.0), kIso11, grid, false).arg ==
          PrecisionChoice::finite(0.0));
  }
  {
    const WelfareCoefficients w = WelfareCoefficients::direct(0.0, -0.2);
    const DisclosureVerdict v = optimal_precision(kM0, w, kIso11);
    CHECK(v.region == Region::IV);
    CHECK(v.optimal_tau_y->value() == doctest::Approx(kTauBarY).epsilon(1e-12));
    const GridOptimum g = argmax_equilibrium_welfare(kM0, w, kIso11, grid, false);
    CHECK(std::abs(g.arg.value() - kTauBarY) <= g.step);
  }
  {
    const ApplicationPreset c = cournot_preset(1.0);
    const DisclosureVerdict v = optimal_precision(c.params, c.welfare, kIso11);
    CHECK(*v.optimal_tau_y == PrecisionChoice::infinite());
  }
  {
    // region IV with the stationary point below zero
    const WelfareCoefficients w = WelfareCoefficients::direct(0.0, -0.2);
    const CostSpec pricey = CostSpec::isoelastic(50.0, 1.0);
    const DisclosureVerdict v = optimal_precision(kM0, w, pricey);
    CHECK(v.region == Region::IV);
    CHECK(*v.tau_bar_y < 0.0);
    CHECK(*v.optimal_tau_y == PrecisionChoice::finite(0.0));
  }
}

TEST_CASE("region II compares the two corners") {
  const WelfareCoefficients w = WelfareCoefficients::direct(3.0, 0.5);
  // Cheap information: the no-disclosure corner wins.
  const DisclosureVerdict lo = optimal_precision(kM0, w, CostSpec::isoelastic(1e-3, 1.0));
  CHECK(lo.region == Region::II);
  CHECK(lo.welfare_at_zero > lo.welfare_at_infinity);
  CHECK(*lo.optimal_tau_y == PrecisionChoice::finite(0.0));
  // tau_bar_z below the prior precision: welfare only rises.
  const DisclosureVerdict hi = optimal_precision(kM0, w, CostSpec::isoelastic(100.0, 1.0));
  CHECK(*hi.tau_bar_z <= kM0.tau_theta);
  CHECK(*hi.optimal_tau_y == PrecisionChoice::infinite());
}

TEST_CASE("region II exact tie leaves the optimum open") {
  // Linear cost with c = 1/16 gives phi(0) = 3, D = 3/16, V(3, 0) = 9/16.
  // W(phi(0), 0) = zeta 3/16 + eta 9/16 - 3/16 and W(inf) = eta. Pick zeta to tie.
  const double eta = 0.25;
  const double zeta = 1.0 + (eta - eta * 9.0 / 16.0) * 16.0 / 3.0;
  const WelfareCoefficients w = WelfareCoefficients::direct(zeta, eta);
  const DisclosureVerdict v = optimal_precision(kM0, w, CostSpec::linear(1.0 / 16.0));
  REQUIRE(v.region == Region::II);
  CHECK(v.tie);
  CHECK_FALSE(v.optimal_tau_y.has_value());
  CHECK(v.candidates.size() == 2);
}

TEST_CASE("boundary and tabulated costs fall back to the grid") {
  const DisclosureVerdict b = optimal_precision(kM0, WelfareCoefficients::direct(0.0, -0.4), kIso11);
  CHECK(b.region == Region::Boundary);
  CHECK(b.method == "grid");
  CHECK(b.candidates.size() == 2);

  const CostSpec tab = CostSpec::tabulated({{0.0, 0.2}, {1.0, 1.0}, {4.0, 6.0}});
  const DisclosureVerdict v = optimal_precision(kM0, WelfareCoefficients::direct(1.0, 1.0), tab);
  CHECK(v.method == "numeric-only");
  CHECK(*v.optimal_tau_y == PrecisionChoice::infinite());
}

TEST_CASE("gross-welfare optimum for the beauty contest") {
  const CostSpec c2 = CostSpec::isoelastic(1.0, 2.0);
  const ApplicationPreset low = beauty_preset(0.25);
  const DisclosureVerdict v = gross_optimal_precision(low.params, low.welfare, c2);
  CHECK(v.gross);
  CHECK(v.region == Region::I);
  CHECK(*v.optimal_tau_y == PrecisionChoice::infinite());
  CHECK(argmax_equilibrium_welfare(low.params, low.welfare, c2, GridSpec{}, true).at_limit);

  const ApplicationPreset high = beauty_preset(0.5);
  const DisclosureVerdict h = gross_optimal_precision(high.params, high.welfare, CostSpec::isoelastic(1e-4, 2.0));
  CHECK(h.region != Region::I);
  REQUIRE(h.tau_bar_y.has_value());
  REQUIRE(*h.tau_bar_y > 0.0);
  const double ty = 0.5 * *h.tau_bar_y;
  const CostSpec cheap = CostSpec::isoelastic(1e-4, 2.0);
  const double slope = t::central_diff([&](double y) {
    return gross_welfare(high.params, high.welfare, cheap, solve_private_precision(high.params, cheap, y), y);
  }, ty, 1e-6);
  CHECK(slope < 0.0);
}

TEST_CASE("beauty-contest classification flips at the thresholds") {
  for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
    const BeautyThresholds th = beauty_thresholds(lambda);
    for (double r = 0.02; r < 0.99; r += 0.03) {
      if (std::abs(r - th.r_star) < 1e-9 || std::abs(r - th.r_gross) < 1e-9) continue;
      const ApplicationPreset b = beauty_preset(r);
      CHECK((classify_region(b.params, b.welfare, lambda) == Region::I) == (r < th.r_star));
      CHECK((classify_region(b.params, b.gross_welfare(lambda), lambda) == Region::I) == (r < th.r_gross));
    }
  }
}
