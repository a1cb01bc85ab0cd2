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
#include <cstdlib>
#include <cstring>

#include "disclose/error.hpp"
#include "disclose/oracles.hpp"
#include "disclose/parallel.hpp"
#include "disclose/rng.hpp"
#include "disclose/robust.hpp"
#include "disclose/welfare.hpp"
#include "test_support.hpp"

using namespace disclose;
namespace t = disclose::testing;

namespace {

const ModelParams kM0{0.0, 1.0, 1.0, 0.0};

OracleConfig small_config(std::uint64_t seed = 7) {
  OracleConfig cfg;
  cfg.n_agents = 10000;
  cfg.n_draws = 100;
  cfg.seed = seed;
  return cfg;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_moments(const McMoments& a, const McMoments& b) {
  const Estimate* ea[] = {&a.var_i, &a.cov_ij, &a.cov_ij_pairs, &a.cov_itheta, &a.dispersion, &a.identity};
  const Estimate* eb[] = {&b.var_i, &b.cov_ij, &b.cov_ij_pairs, &b.cov_itheta, &b.dispersion, &b.identity};
  for (int i = 0; i < 6; ++i) {
    if (!same_bits(ea[i]->mean, eb[i]->mean) || !same_bits(ea[i]->std_error, eb[i]->std_error)) return false;
  }
  return true;
}

struct ThreadEnv {
  explicit ThreadEnv(const char* v) { setenv("DISCLOSE_THREADS", v, 1); }
  ~ThreadEnv() { unsetenv("DISCLOSE_THREADS"); }
};

}  // namespace

TEST_CASE("grid specification") {
  const GridSpec g = GridSpec::parse("0.5:2:4");
  CHECK_FALSE(g.log_spaced);
  const std::vector<double> v = g.values();
  REQUIRE(v.size() == 4);
  CHECK(v.front() == 0.5);
  CHECK(v.back() == 2.0);
  CHECK(v[1] == doctest::Approx(1.0));
  const GridSpec l = GridSpec::parse("1e-2:1e2:5:log");
  CHECK(l.values()[2] == doctest::Approx(1.0));
  CHECK(l.to_string() == "0.01:100:5:log");
  CHECK(GridSpec::parse(l.to_string()).values() == l.values());
  CHECK_THROWS_AS(GridSpec::parse("1:10:0"), InvalidArgument);
  CHECK_THROWS_AS(GridSpec::parse("1:10"), InvalidArgument);
  CHECK_THROWS_AS(GridSpec::parse("a:10:3"), InvalidArgument);
  CHECK_THROWS_AS(GridSpec::parse("0:10:3:log"), InvalidArgument);
  CHECK_THROWS_AS(GridSpec::parse("5:1:3"), InvalidArgument);
  CHECK(tau_y_grid(GridSpec{})[0] == 0.0);
  CHECK(tau_y_grid(GridSpec{}).size() == 401);
  CHECK(tau_y_grid(GridSpec::parse("0:1:11")).size() == 11);
}

TEST_CASE("oracle configuration limits") {
  OracleConfig c;
  CHECK_NOTHROW(c.validate());
  c.n_agents = 100;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = OracleConfig{};
  c.grid.points = 50;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = OracleConfig{};
  c.fd_step = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("Monte Carlo moments at the reference point") {
  const McMoments m = mc_moments(kM0, 1.0, 1.0, OracleConfig{});
  CHECK(std::abs(m.var_i.mean - 2.0 / 3.0) <= 3.0 * m.var_i.std_error);
  CHECK(std::abs(m.cov_ij.mean - 5.0 / 9.0) <= 3.0 * m.cov_ij.std_error);
  CHECK(std::abs(m.cov_ij_pairs.mean - 5.0 / 9.0) <= 3.0 * m.cov_ij_pairs.std_error);
  CHECK(std::abs(m.dispersion.mean - 1.0 / 9.0) <= 3.0 * m.dispersion.std_error);
  CHECK(std::abs(m.cov_itheta.mean - 2.0 / 3.0) <= 3.0 * m.cov_itheta.std_error);
  CHECK(std::abs(m.identity.mean) <= 3.0 * m.identity.std_error + 1e-15);
  REQUIRE(m.best_response_b_x.has_value());
  CHECK(std::abs(m.best_response_b_x->mean - 1.0 / 3.0) <= 3.0 * m.best_response_b_x->std_error);
  CHECK(std::abs(m.best_response_b_y->mean - 1.0 / 3.0) <= 3.0 * m.best_response_b_y->std_error);
  CHECK(m.n_agents == 100000);
  CHECK(m.n_draws == 200);
}

TEST_CASE("Monte Carlo moments without private information") {
  const McMoments m = mc_moments(kM0, 0.0, 1.0, small_config());
  CHECK(std::abs(m.dispersion.mean) < 1e-12);
  CHECK(m.var_i.mean == doctest::Approx(m.cov_ij.mean).epsilon(1e-12));
  CHECK_FALSE(m.best_response_b_x.has_value());
}

TEST_CASE("Monte Carlo output is bit-identical for a seed and independent of threads and ISA") {
  const McMoments a = mc_moments({0.3, 0.8, 2.0, 0.5}, 0.7, 1.3, small_config(99));
  const McMoments b = mc_moments({0.3, 0.8, 2.0, 0.5}, 0.7, 1.3, small_config(99));
  CHECK(same_moments(a, b));
  McMoments one, four;
  {
    ThreadEnv env("1");
    one = mc_moments({0.3, 0.8, 2.0, 0.5}, 0.7, 1.3, small_config(99));
  }
  {
    ThreadEnv env("4");
    four = mc_moments({0.3, 0.8, 2.0, 0.5}, 0.7, 1.3, small_config(99));
  }
  CHECK(same_moments(a, one));
  CHECK(same_moments(a, four));
  const McMoments c = mc_moments({0.3, 0.8, 2.0, 0.5}, 0.7, 1.3, small_config(100));
  CHECK_FALSE(same_bits(a.var_i.mean, c.var_i.mean));
}

TEST_CASE("Monte Carlo standard errors shrink at the square-root rate") {
  OracleConfig lo = small_config(5), hi = small_config(5);
  lo.n_draws = 100;
  hi.n_draws = 200;
  const McMoments a = mc_moments(kM0, 1.0, 1.0, lo);
  const McMoments b = mc_moments(kM0, 1.0, 1.0, hi);
  const double ratio = a.cov_ij.std_error / b.cov_ij.std_error;
  CHECK(ratio >= 1.2);
  CHECK(ratio <= 1.7);
}

TEST_CASE("simulated marginal value of private precision") {
  for (const auto& [p, tx, ty] : {std::tuple{kM0, 1.0, 1.0}, std::tuple{ModelParams{0.5, 1.0, 1.0, 0.0}, 2.0, 1.0}}) {
    const Estimate e = mc_marginal_benefit(p, tx, ty, OracleConfig{});
    CHECK(std::abs(e.mean - 1.0 / 9.0) <= 3.0 * e.std_error + 5e-4 / 9.0);
    CHECK(e.std_error > 0.0);
    CHECK(std::isfinite(e.std_error));
  }
}

TEST_CASE("finite differences along the path") {
  const CostSpec lin = CostSpec::linear(0.04);
  const FdResult d = fd_along_path(kM0, lin, 1.0, 1e-5, [](double tx, double) { return tx; });
  CHECK(d.value == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK_FALSE(d.one_sided);
  const FdResult z = fd_along_path(kM0, lin, 0.0, 1e-5, [](double tx, double) { return tx; });
  CHECK(z.one_sided);
  CHECK(z.value == doctest::Approx(-1.0).epsilon(1e-8));
  // the path hits the corner at tau_y = 4
  const FdResult c = fd_along_path(kM0, lin, 4.0 - 1e-7, 1e-5, [](double tx, double) { return tx; });
  CHECK(c.one_sided);
  CHECK(c.value == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("grid optimum selection") {
  const std::vector<double> xs{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> ys{1.0, 3.0, 3.0, 2.0};
  GridOptimum g = grid_argopt(xs, ys, OptSense::Maximize, std::nullopt);
  CHECK(g.arg == PrecisionChoice::finite(1.0));
  CHECK(g.index == 1);
  CHECK(g.step == 1.0);
  g = grid_argopt(xs, ys, OptSense::Maximize, 3.0);  // tie with the limit stays finite
  CHECK_FALSE(g.at_limit);
  g = grid_argopt(xs, ys, OptSense::Maximize, 3.1);
  CHECK(g.at_limit);
  CHECK(g.arg.is_infinite());
  g = grid_argopt(xs, ys, OptSense::Minimize, 0.5);
  CHECK(g.at_limit);
  g = grid_argopt(xs, ys, OptSense::Minimize, std::nullopt);
  CHECK(g.arg == PrecisionChoice::finite(0.0));
}

TEST_CASE("brute-force minimum of the linear welfare part") {
  const WelfareCoefficients w = WelfareCoefficients::direct(0.0, -0.2);
  const GridOptimum g = argmin_linear_welfare(kM0, w, 1.0, PrecisionChoice::finite(10.0));
  CHECK(g.arg.value() == doctest::Approx(10.0 / 3.0).epsilon(1e-5));
  CHECK(std::abs(g.value - worst_case_welfare(kM0, w, 1.0, PrecisionChoice::finite(10.0)).value) < 1e-12);
  const GridOptimum inf = argmin_linear_welfare(kM0, WelfareCoefficients::direct(0.5, -1.0), 1.0,
                                                PrecisionChoice::infinite());
  CHECK(inf.at_limit);
}

TEST_CASE("counter-based streams") {
  StreamRng a(7, 3), b(7, 3), c(7, 4);
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  StreamRng u(1, 0);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    sum += v;
  }
  CHECK(sum / 10000.0 == doctest::Approx(0.5).epsilon(0.02));
  std::vector<double> z(20000);
  fill_normals(11, 2, 0, z);
  double m = 0.0, s = 0.0;
  for (double v : z) m += v, s += v * v;
  m /= z.size();
  s = s / z.size() - m * m;
  CHECK(std::abs(m) < 0.03);
  CHECK(s == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("pairwise summation is order-independent of thread count") {
  std::vector<double> v(1001);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / (1.0 + i);
  const double s = pairwise_sum(v);
  double naive = 0.0;
  for (double x : v) naive += x;
  CHECK(s == doctest::Approx(naive).epsilon(1e-13));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
}
