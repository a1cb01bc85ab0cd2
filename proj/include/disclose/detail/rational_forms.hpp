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

// Closed rational forms of volatility and dispersion in (tau_x, tau_y).
// Shared by the library and the scalar kernels so that both produce the same
// bits; the vector kernels replicate the exact operation order below.

namespace disclose::detail {

struct RationalTerms {
  double one_minus_alpha;  // 1 - alpha
  double beta_sq;          // beta^2
  double tau_theta;
  double tau_y;
  double tau_z;            // tau_y + tau_theta
  double vol_denominator;  // (1 - alpha)^2 tau_theta
};

inline RationalTerms make_rational_terms(double alpha, double beta, double tau_theta,
                                         double tau_y) {
  const double a1 = 1.0 - alpha;
  return RationalTerms{a1, beta * beta, tau_theta, tau_y, tau_y + tau_theta,
                       a1 * a1 * tau_theta};
}

inline double dispersion_form(const RationalTerms& t, double tau_x) {
  const double d = t.one_minus_alpha * tau_x + t.tau_z;
  return (t.beta_sq * tau_x) / (d * d);
}

inline double volatility_form(const RationalTerms& t, double tau_x) {
  const double ax = t.one_minus_alpha * tau_x;
  const double d = ax + t.tau_z;
  const double num = (ax * ax + (2.0 * ax) * t.tau_y) + t.tau_y * t.tau_z;
  return (t.beta_sq * num) / (t.vol_denominator * (d * d));
}

}  // namespace disclose::detail
