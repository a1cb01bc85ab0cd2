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
#include <string_view>
#include <variant>
#include <vector>

namespace disclose {

/// Primitives of the linear-quadratic Gaussian game. Agent i best-responds
/// with E[alpha * average action + beta * theta | x_i, y]; theta has prior
/// mean theta_bar and precision tau_theta.
struct ModelParams {
  double alpha = 0.0;
  double beta = 1.0;
  double tau_theta = 1.0;
  double theta_bar = 0.0;

  /// Throws InvalidArgument unless alpha < 1, beta > 0 and tau_theta > 0.
  void validate() const;
  double one_minus_alpha() const { return 1.0 - alpha; }
  /// beta^2 / ((1-alpha)^2 tau_theta): volatility once either precision is
  /// unbounded.
  double volatility_limit() const;
};

/// An extended nonnegative precision: either a finite value >= 0 or infinity.
class PrecisionChoice {
 public:
  static PrecisionChoice finite(double value);
  static PrecisionChoice infinite() { return PrecisionChoice(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Finite payload; throws InvalidArgument when infinite.
  double value() const;
  /// Finite payload or +inf.
  double as_double() const;
  std::string to_string() const;

  friend bool operator==(const PrecisionChoice&, const PrecisionChoice&) = default;

 private:
  PrecisionChoice() = default;
  bool infinite_ = true;
  double value_ = 0.0;
};

struct CostValues {
  double cost = 0.0;         // C
  double marginal = 0.0;     // C'
  double curvature = 0.0;    // C'' (may be +inf at 0 for isoelastic 0 < lambda < 1)
  double elasticity = 0.0;   // rho = tau C'' / C'
};

struct LinearCost {
  double c = 1.0;
};

struct IsoelasticCost {
  double c = 1.0;
  double lambda = 1.0;
};

/// Convex cost described by samples of its marginal cost. C' is interpolated
/// piecewise linearly between knots and extended past the last knot with the
/// final segment's slope; C is the exact integral of that interpolant.
class TabulatedCost {
 public:
  struct Point {
    double tau = 0.0;
    double marginal = 0.0;
  };

  /// Validates: at least two knots, first knot at tau = 0, strictly increasing
  /// knots, marginal values >= 0, nondecreasing and positive at the last knot.
  explicit TabulatedCost(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  CostValues eval(double tau) const;

 private:
  std::size_t segment(double tau) const;
  std::vector<Point> points_;
  std::vector<double> cumulative_;  // C at each knot
};

enum class CostKind { Linear, Isoelastic, Tabulated };

/// Strictly increasing convex information cost with C(0) = 0.
class CostSpec {
 public:
  static CostSpec linear(double c);
  static CostSpec isoelastic(double c, double lambda);
  static CostSpec tabulated(std::vector<TabulatedCost::Point> points);

  CostKind kind() const;
  std::string_view kind_name() const;

  CostValues eval(double tau) const;
  double marginal(double tau) const;

  /// Cost scale c (linear/isoelastic); throws for tabulated costs.
  double scale() const;
  /// lambda for isoelastic, 0 for linear; throws for tabulated costs.
  double constant_elasticity() const;
  bool has_constant_elasticity() const { return kind() != CostKind::Tabulated; }

  const std::variant<LinearCost, IsoelasticCost, TabulatedCost>& repr() const { return repr_; }

 private:
  explicit CostSpec(std::variant<LinearCost, IsoelasticCost, TabulatedCost> repr)
      : repr_(std::move(repr)) {}
  std::variant<LinearCost, IsoelasticCost, TabulatedCost> repr_;
};

CostValues cost_eval(const CostSpec& spec, double tau_x);

/// Quadratic material benefit
///   c1 int a_j^2 + c2 (int a_j)^2 + c3 theta int a_j + c4 int a_j + c5.
/// c4 and c5 only shift the additive welfare constant, which is dropped.
struct MaterialWelfareSpec {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
};

enum class WelfareProvenance { FromMaterial, Direct, Preset };

std::string_view to_string(WelfareProvenance p);

/// Weights of dispersion (zeta) and volatility (eta) in expected welfare.
/// Welfare is always reported up to an additive constant.
struct WelfareCoefficients {
  double zeta = 1.0;
  double eta = 1.0;
  WelfareProvenance provenance = WelfareProvenance::Direct;
  bool constant_dropped = true;
  std::string note;

  static WelfareCoefficients direct(double zeta, double eta);
};

WelfareCoefficients coefficients_from_material(const MaterialWelfareSpec& m, const ModelParams& p);

}  // namespace disclose
