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

#include "disclose/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "disclose/error.hpp"

namespace disclose {

namespace {

bool finite(double x) { return std::isfinite(x); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void ModelParams::validate() const {
  if (!finite(alpha) || !finite(beta) || !finite(tau_theta) || !finite(theta_bar)) {
    throw InvalidArgument("model parameters must be finite");
  }
  if (!(alpha < 1.0)) throw InvalidArgument("alpha must be < 1");
  // A negative beta is not silently flipped: it would corrupt the zeta/eta map.
  if (!(beta > 0.0)) throw InvalidArgument("beta must be > 0");
  if (!(tau_theta > 0.0)) throw InvalidArgument("tau_theta must be > 0");
}

double ModelParams::volatility_limit() const {
  const double a = one_minus_alpha();
  return beta * beta / (a * a * tau_theta);
}

PrecisionChoice PrecisionChoice::finite(double value) {
  if (std::isinf(value) && value > 0) return infinite();
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidArgument("precision must be a nonnegative number or infinity");
  }
  PrecisionChoice p;
  p.infinite_ = false;
  p.value_ = value;
  return p;
}

double PrecisionChoice::value() const {
  if (infinite_) throw InvalidArgument("precision is infinite");
  return value_;
}

double PrecisionChoice::as_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string PrecisionChoice::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

// ---------------------------------------------------------------------------

TabulatedCost::TabulatedCost(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidArgument("tabulated cost needs at least two points");
  if (points_.front().tau != 0.0) throw InvalidArgument("tabulated cost must start at tau = 0");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto& pt = points_[k];
    if (!finite(pt.tau) || !finite(pt.marginal)) {
      throw InvalidArgument("tabulated cost points must be finite");
    }
    if (pt.marginal < 0.0 || (k > 0 && pt.marginal <= 0.0)) {
      throw InvalidArgument("tabulated marginal cost must be positive away from tau = 0");
    }
    if (k > 0) {
      if (!(pt.tau > points_[k - 1].tau)) {
        throw InvalidArgument("tabulated cost knots must be strictly increasing");
      }
      // Convexity of C is monotonicity of C'.
      if (pt.marginal < points_[k - 1].marginal) {
        throw InvalidArgument("tabulated marginal cost must be nondecreasing (convex cost)");
      }
    }
  }
  cumulative_.resize(points_.size());
  cumulative_[0] = 0.0;
  for (std::size_t k = 1; k < points_.size(); ++k) {
    const double w = points_[k].tau - points_[k - 1].tau;
    cumulative_[k] = cumulative_[k - 1] + 0.5 * w * (points_[k].marginal + points_[k - 1].marginal);
  }
}

std::size_t TabulatedCost::segment(double tau) const {
  // Last knot index with knot.tau <= tau, clamped to a valid segment start.
  auto it = std::upper_bound(points_.begin(), points_.end(), tau,
                             [](double t, const Point& p) { return t < p.tau; });
  std::size_t k = it == points_.begin() ? 0 : static_cast<std::size_t>(it - points_.begin()) - 1;
  return std::min(k, points_.size() - 2);
}

CostValues TabulatedCost::eval(double tau) const {
  const std::size_t k = segment(tau);
  const Point& a = points_[k];
  const Point& b = points_[k + 1];
  const double slope = (b.marginal - a.marginal) / (b.tau - a.tau);
  const double dt = tau - a.tau;
  CostValues v;
  v.marginal = a.marginal + slope * dt;
  v.cost = cumulative_[k] + a.marginal * dt + 0.5 * slope * dt * dt;
  v.curvature = slope;
  v.elasticity = tau == 0.0 ? 0.0 : tau * slope / v.marginal;
  return v;
}

// ---------------------------------------------------------------------------

CostSpec CostSpec::linear(double c) {
  if (!finite(c) || !(c > 0.0)) throw InvalidArgument("cost scale c must be > 0");
  return CostSpec(LinearCost{c});
}

CostSpec CostSpec::isoelastic(double c, double lambda) {
  if (!finite(c) || !(c > 0.0)) throw InvalidArgument("cost scale c must be > 0");
  if (!finite(lambda) || !(lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  return CostSpec(IsoelasticCost{c, lambda});
}

CostSpec CostSpec::tabulated(std::vector<TabulatedCost::Point> points) {
  return CostSpec(TabulatedCost(std::move(points)));
}

CostKind CostSpec::kind() const {
  return std::visit(overloaded{[](const LinearCost&) { return CostKind::Linear; },
                               [](const IsoelasticCost&) { return CostKind::Isoelastic; },
                               [](const TabulatedCost&) { return CostKind::Tabulated; }},
                    repr_);
}

std::string_view CostSpec::kind_name() const {
  switch (kind()) {
    case CostKind::Linear: return "linear";
    case CostKind::Isoelastic: return "isoelastic";
    case CostKind::Tabulated: return "tabulated";
  }
  return "unknown";
}

CostValues CostSpec::eval(double tau) const {
  if (!(tau >= 0.0)) throw InvalidArgument("cost evaluated at negative precision");
  return std::visit(
      overloaded{
          [tau](const LinearCost& l) { return CostValues{l.c * tau, l.c, 0.0, 0.0}; },
          [tau](const IsoelasticCost& iso) {
            const double c = iso.c;
            const double lam = iso.lambda;
            CostValues v;
            v.elasticity = lam;
            if (lam == 0.0) {
              v.cost = c * tau;
              v.marginal = c;
              v.curvature = 0.0;
              return v;
            }
            if (tau == 0.0) {
              v.cost = 0.0;
              v.marginal = 0.0;
              if (lam < 1.0) {
                v.curvature = std::numeric_limits<double>::infinity();
              } else if (lam == 1.0) {
                v.curvature = c;
              } else {
                v.curvature = 0.0;
              }
              return v;
            }
            const double pw = std::pow(tau, lam);
            v.marginal = c * pw;
            v.cost = v.marginal * tau / (lam + 1.0);
            v.curvature = c * lam * pw / tau;
            return v;
          },
          [tau](const TabulatedCost& t) { return t.eval(tau); }},
      repr_);
}

double CostSpec::marginal(double tau) const { return eval(tau).marginal; }

double CostSpec::scale() const {
  if (const auto* l = std::get_if<LinearCost>(&repr_)) return l->c;
  if (const auto* i = std::get_if<IsoelasticCost>(&repr_)) return i->c;
  throw InvalidArgument("tabulated cost has no scalar scale");
}

double CostSpec::constant_elasticity() const {
  if (std::holds_alternative<LinearCost>(repr_)) return 0.0;
  if (const auto* i = std::get_if<IsoelasticCost>(&repr_)) return i->lambda;
  throw InvalidArgument("tabulated cost has no constant elasticity");
}

CostValues cost_eval(const CostSpec& spec, double tau_x) { return spec.eval(tau_x); }

// ---------------------------------------------------------------------------

std::string_view to_string(WelfareProvenance p) {
  switch (p) {
    case WelfareProvenance::FromMaterial: return "from_material";
    case WelfareProvenance::Direct: return "direct";
    case WelfareProvenance::Preset: return "preset";
  }
  return "unknown";
}

WelfareCoefficients WelfareCoefficients::direct(double zeta, double eta) {
  if (!finite(zeta) || !finite(eta)) throw InvalidArgument("zeta and eta must be finite");
  WelfareCoefficients wc;
  wc.zeta = zeta;
  wc.eta = eta;
  wc.provenance = WelfareProvenance::Direct;
  return wc;
}

WelfareCoefficients coefficients_from_material(const MaterialWelfareSpec& m, const ModelParams& p) {
  p.validate();
  for (double c : {m.c1, m.c2, m.c3, m.c4, m.c5}) {
    if (!finite(c)) throw InvalidArgument("material welfare coefficients must be finite");
  }
  WelfareCoefficients wc;
  wc.zeta = m.c1 + m.c3 / p.beta;
  wc.eta = m.c1 + m.c2 + p.one_minus_alpha() * m.c3 / p.beta;
  wc.provenance = WelfareProvenance::FromMaterial;
  if (m.c4 != 0.0 || m.c5 != 0.0) {
    wc.note = "c4 and c5 only shift the dropped additive constant and were ignored";
  }
  return wc;
}

}  // namespace disclose
