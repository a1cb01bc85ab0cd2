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

// Small numerical helpers that tests use as independent references. They
// deliberately avoid the library's closed forms.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace disclose::testing {

inline bool close_rel(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

// Best-response coefficients from the fixed point of the Bayesian projection
//   a_i = E[alpha (bx theta + by y) + beta theta | x_i, y],
// solved as a 2x2 linear system.
struct Coeffs {
  double bx, by;
};

inline Coeffs projection_coefficients(double alpha, double beta, double tau_theta, double tx,
                                      double ty) {
  const double s = tx + ty + tau_theta;
  const double bx = (beta * tx / s) / (1.0 - alpha * tx / s);
  const double by = ((alpha * bx + beta) * ty / s) / (1.0 - alpha);
  return {bx, by};
}

// Covariance of two agents' actions and the variance minus that covariance.
inline double covariance_of_actions(double alpha, double beta, double tau_theta, double tx,
                                    double ty) {
  const Coeffs c = projection_coefficients(alpha, beta, tau_theta, tx, ty);
  return (c.bx + c.by) * (c.bx + c.by) / tau_theta + (ty > 0.0 ? c.by * c.by / ty : 0.0);
}

inline double idiosyncratic_variance(double alpha, double beta, double tau_theta, double tx,
                                     double ty) {
  const Coeffs c = projection_coefficients(alpha, beta, tau_theta, tx, ty);
  return tx > 0.0 ? c.bx * c.bx / tx : 0.0;
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Composite Simpson rule.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline std::mt19937_64 test_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline double log_uniform(std::mt19937_64& g, double lo, double hi) {
  return std::exp(uniform(g, std::log(lo), std::log(hi)));
}

}  // namespace disclose::testing
