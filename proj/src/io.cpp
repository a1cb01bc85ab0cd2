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

#include "disclose/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "disclose/error.hpp"

namespace disclose {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidArgument(where + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw InvalidArgument("unknown key '" + item.key() + "' in " + where);
    }
  }
}

double get_number(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw InvalidArgument("missing key '" + key + "' in " + where);
  try {
    return number_from_json(j.at(key));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("key '" + key + "' in " + where + ": " + e.what());
  }
}

double optional_number(const Json& j, const std::string& key, double fallback,
                       const std::string& where) {
  return j.contains(key) ? get_number(j, key, where) : fallback;
}

template <typename Opt>
Json optional_json(const Opt& v) {
  return v ? number_to_json(*v) : Json(nullptr);
}

std::optional<double> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return number_from_json(j.at(key));
}

WorstCaseShape shape_from_string(const std::string& s) {
  for (auto v : {WorstCaseShape::Increasing, WorstCaseShape::Constant, WorstCaseShape::Decreasing,
                 WorstCaseShape::NonMonotone}) {
    if (to_string(v) == s) return v;
  }
  throw InvalidArgument("unknown worst-case shape: " + s);
}

MinimizerPath path_from_string(const std::string& s) {
  for (auto v : {MinimizerPath::AtZero, MinimizerPath::AtKappa, MinimizerPath::Interior,
                 MinimizerPath::InteriorThenKappa, MinimizerPath::Endpoints, MinimizerPath::Flat}) {
    if (to_string(v) == s) return v;
  }
  throw InvalidArgument("unknown minimizer path: " + s);
}

Json estimate_json(const Estimate& e) { return Json{{"mean", e.mean}, {"stderr", e.std_error}}; }

}  // namespace

void RunConfig::apply_preset() {
  if (!preset) return;
  const double tau_theta = model.tau_theta;
  const double theta_bar = model.theta_bar;
  const ApplicationPreset ap = preset->kind == PresetKind::Cournot
                                   ? cournot_preset(preset->parameter, tau_theta, theta_bar)
                                   : beauty_preset(preset->parameter, tau_theta, theta_bar,
                                                   preset->scaling);
  model = ap.params;
  welfare = ap.welfare;
  material.reset();
}

Json number_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(v)) return Json(nullptr);
  return Json(v);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw InvalidArgument("expected a number or \"inf\"");
}

Json precision_to_json(const PrecisionChoice& v) {
  return v.is_infinite() ? Json("inf") : Json(v.value());
}

PrecisionChoice precision_from_json(const Json& j) {
  const double v = number_from_json(j);
  return PrecisionChoice::finite(v);  // maps +inf to infinite, rejects negatives
}

RunConfig parse_run_config(const Json& j) {
  check_keys(j, {"alpha", "beta", "tau_theta", "theta_bar", "cost", "welfare", "preset", "kappa",
                 "grid"},
             "config");
  RunConfig cfg;
  cfg.model.alpha = optional_number(j, "alpha", cfg.model.alpha, "config");
  cfg.model.beta = optional_number(j, "beta", cfg.model.beta, "config");
  cfg.model.tau_theta = optional_number(j, "tau_theta", cfg.model.tau_theta, "config");
  cfg.model.theta_bar = optional_number(j, "theta_bar", cfg.model.theta_bar, "config");

  if (j.contains("cost")) {
    const Json& c = j.at("cost");
    check_keys(c, {"kind", "c", "lambda", "points"}, "cost");
    if (!c.contains("kind") || !c.at("kind").is_string()) {
      throw InvalidArgument("cost.kind must be \"linear\", \"isoelastic\" or \"tabulated\"");
    }
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "linear") {
      cfg.cost = CostSpec::linear(get_number(c, "c", "cost"));
    } else if (kind == "isoelastic") {
      cfg.cost = CostSpec::isoelastic(get_number(c, "c", "cost"), get_number(c, "lambda", "cost"));
    } else if (kind == "tabulated") {
      if (!c.contains("points") || !c.at("points").is_array()) {
        throw InvalidArgument("tabulated cost needs points: [[tau, marginal], ...]");
      }
      std::vector<TabulatedCost::Point> pts;
      for (const Json& pt : c.at("points")) {
        if (!pt.is_array() || pt.size() != 2) {
          throw InvalidArgument("each tabulated point must be [tau, marginal]");
        }
        pts.push_back({number_from_json(pt[0]), number_from_json(pt[1])});
      }
      cfg.cost = CostSpec::tabulated(std::move(pts));
    } else {
      throw InvalidArgument("unknown cost kind: " + kind);
    }
  }

  const bool has_preset = j.contains("preset");
  if (j.contains("welfare")) {
    if (has_preset) throw InvalidArgument("give either welfare or preset, not both");
    const Json& w = j.at("welfare");
    check_keys(w, {"zeta", "eta", "c1", "c2", "c3", "c4", "c5"}, "welfare");
    const bool direct = w.contains("zeta") || w.contains("eta");
    const bool material = w.contains("c1") || w.contains("c2") || w.contains("c3") ||
                          w.contains("c4") || w.contains("c5");
    if (direct == material) {
      throw InvalidArgument("welfare needs exactly one of {zeta, eta} or {c1..c5}");
    }
    if (direct) {
      cfg.welfare = WelfareCoefficients::direct(get_number(w, "zeta", "welfare"),
                                                get_number(w, "eta", "welfare"));
    } else {
      MaterialWelfareSpec m;
      m.c1 = optional_number(w, "c1", 0.0, "welfare");
      m.c2 = optional_number(w, "c2", 0.0, "welfare");
      m.c3 = optional_number(w, "c3", 0.0, "welfare");
      m.c4 = optional_number(w, "c4", 0.0, "welfare");
      m.c5 = optional_number(w, "c5", 0.0, "welfare");
      cfg.material = m;
    }
  }
  if (has_preset) {
    if (j.contains("alpha") || j.contains("beta")) {
      throw InvalidArgument("a preset fixes alpha and beta; remove them from the config");
    }
    const Json& pj = j.at("preset");
    check_keys(pj, {"name", "delta", "r", "scaling"}, "preset");
    if (!pj.contains("name") || !pj.at("name").is_string()) {
      throw InvalidArgument("preset.name must be \"cournot\" or \"beauty\"");
    }
    const std::string name = pj.at("name").get<std::string>();
    PresetConfig pc;
    if (name == "cournot") {
      pc.kind = PresetKind::Cournot;
      pc.parameter = get_number(pj, "delta", "preset");
    } else if (name == "beauty") {
      pc.kind = PresetKind::Beauty;
      pc.parameter = get_number(pj, "r", "preset");
      if (pj.contains("scaling")) {
        const std::string s = pj.at("scaling").get<std::string>();
        if (s == "unscaled") {
          pc.scaling = BeautyScaling::Unscaled;
        } else if (s != "default") {
          throw InvalidArgument("preset.scaling must be \"default\" or \"unscaled\"");
        }
      }
    } else {
      throw InvalidArgument("unknown preset: " + name);
    }
    cfg.preset = pc;
  }
  if (j.contains("kappa")) cfg.kappa = precision_from_json(j.at("kappa"));
  if (j.contains("grid")) {
    if (!j.at("grid").is_string()) throw InvalidArgument("grid must be a string lo:hi:n[:log]");
    cfg.grid = GridSpec::parse(j.at("grid").get<std::string>());
  }

  cfg.apply_preset();
  cfg.model.validate();
  if (cfg.material) cfg.welfare = coefficients_from_material(*cfg.material, cfg.model);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return parse_run_config(j);
}

Json to_json(const ModelParams& p) {
  return Json{{"alpha", p.alpha}, {"beta", p.beta}, {"tau_theta", p.tau_theta},
              {"theta_bar", p.theta_bar}};
}

Json to_json(const CostSpec& c) {
  Json j{{"kind", std::string(c.kind_name())}};
  switch (c.kind()) {
    case CostKind::Linear:
      j["c"] = c.scale();
      break;
    case CostKind::Isoelastic:
      j["c"] = c.scale();
      j["lambda"] = c.constant_elasticity();
      break;
    case CostKind::Tabulated: {
      Json pts = Json::array();
      for (const auto& pt : std::get<TabulatedCost>(c.repr()).points()) {
        pts.push_back(Json::array({pt.tau, pt.marginal}));
      }
      j["points"] = pts;
      break;
    }
  }
  return j;
}

Json to_json(const WelfareCoefficients& w) {
  Json j{{"zeta", w.zeta},
         {"eta", w.eta},
         {"provenance", std::string(to_string(w.provenance))},
         {"constant_dropped", w.constant_dropped}};
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json to_json(const EquilibriumSolution& s) {
  return Json{{"tau_y", precision_to_json(s.tau_y)},
              {"tau_x", s.tau_x},
              {"b_x", s.b_x},
              {"b_y", s.b_y},
              {"V", s.V},
              {"D", s.D},
              {"cost", s.cost},
              {"W", s.W},
              {"W_gross", s.W_gross},
              {"constant_dropped", s.constant_dropped}};
}

EquilibriumSolution solution_from_json(const Json& j) {
  EquilibriumSolution s;
  s.tau_y = precision_from_json(j.at("tau_y"));
  s.tau_x = number_from_json(j.at("tau_x"));
  s.b_x = number_from_json(j.at("b_x"));
  s.b_y = number_from_json(j.at("b_y"));
  s.V = number_from_json(j.at("V"));
  s.D = number_from_json(j.at("D"));
  s.cost = number_from_json(j.at("cost"));
  s.W = number_from_json(j.at("W"));
  s.W_gross = number_from_json(j.at("W_gross"));
  s.constant_dropped = j.at("constant_dropped").get<bool>();
  return s;
}

Json to_json(const MwdBreakdown& m) {
  return Json{{"mwd", m.mwd},         {"mwd0", m.mwd0}, {"mwd_star", m.mwd_star},
              {"mvd", m.mvd},         {"mvd0", m.mvd0}, {"mvd_star", m.mvd_star},
              {"rho", number_to_json(m.rho)}, {"phi", m.phi}, {"weight_check", m.weight_check}};
}

Json to_json(const DisclosureVerdict& v) {
  Json cands = Json::array();
  for (const auto& c : v.candidates) cands.push_back(precision_to_json(c));
  Json j{{"region", std::string(to_string(v.region))},
         {"optimal_tau_y", v.optimal_tau_y ? precision_to_json(*v.optimal_tau_y) : Json(nullptr)},
         {"candidates", cands},
         {"tie", v.tie},
         {"tau_bar_x", optional_json(v.tau_bar_x)},
         {"tau_bar_z", optional_json(v.tau_bar_z)},
         {"tau_bar_y", optional_json(v.tau_bar_y)},
         {"W_at_0", v.welfare_at_zero},
         {"W_at_inf", v.welfare_at_infinity},
         {"lambda", optional_json(v.lambda)},
         {"eta_lower", optional_json(v.eta_lower)},
         {"gross", v.gross},
         {"constant_dropped", v.constant_dropped},
         {"method", v.method},
         {"note", v.note}};
  return j;
}

DisclosureVerdict disclosure_verdict_from_json(const Json& j) {
  DisclosureVerdict v;
  v.region = region_from_string(j.at("region").get<std::string>());
  if (!j.at("optimal_tau_y").is_null()) v.optimal_tau_y = precision_from_json(j.at("optimal_tau_y"));
  for (const Json& c : j.at("candidates")) v.candidates.push_back(precision_from_json(c));
  v.tie = j.at("tie").get<bool>();
  v.tau_bar_x = optional_from(j, "tau_bar_x");
  v.tau_bar_z = optional_from(j, "tau_bar_z");
  v.tau_bar_y = optional_from(j, "tau_bar_y");
  v.welfare_at_zero = number_from_json(j.at("W_at_0"));
  v.welfare_at_infinity = number_from_json(j.at("W_at_inf"));
  v.lambda = optional_from(j, "lambda");
  v.eta_lower = optional_from(j, "eta_lower");
  v.gross = j.at("gross").get<bool>();
  v.constant_dropped = j.at("constant_dropped").get<bool>();
  v.method = j.at("method").get<std::string>();
  v.note = j.at("note").get<std::string>();
  return v;
}

Json to_json(const RobustVerdict& v) {
  return Json{{"kappa", precision_to_json(v.kappa)},
              {"applicable", v.applicable},
              {"robust_tau_y", v.robust_tau_y ? precision_to_json(*v.robust_tau_y) : Json(nullptr)},
              {"f_kappa_behavior", std::string(to_string(v.shape))},
              {"indifferent", v.indifferent},
              {"minimizer_path", std::string(to_string(v.minimizer))},
              {"minimizer_switch_tau_y", optional_json(v.minimizer_switch)},
              {"g_kappa", optional_json(v.g_kappa)},
              {"method", v.method},
              {"note", v.note}};
}

RobustVerdict robust_verdict_from_json(const Json& j) {
  RobustVerdict v;
  v.kappa = precision_from_json(j.at("kappa"));
  v.applicable = j.at("applicable").get<bool>();
  if (!j.at("robust_tau_y").is_null()) v.robust_tau_y = precision_from_json(j.at("robust_tau_y"));
  v.shape = shape_from_string(j.at("f_kappa_behavior").get<std::string>());
  v.indifferent = j.at("indifferent").get<bool>();
  v.minimizer = path_from_string(j.at("minimizer_path").get<std::string>());
  v.minimizer_switch = optional_from(j, "minimizer_switch_tau_y");
  v.g_kappa = optional_from(j, "g_kappa");
  v.method = j.at("method").get<std::string>();
  v.note = j.at("note").get<std::string>();
  return v;
}

Json to_json(const McMoments& m) {
  Json j{{"seed", m.seed},
         {"n_agents", m.n_agents},
         {"n_draws", m.n_draws},
         {"b_x", m.b_x},
         {"b_y", m.b_y},
         {"var_i", estimate_json(m.var_i)},
         {"cov_ij", estimate_json(m.cov_ij)},
         {"cov_ij_pairs", estimate_json(m.cov_ij_pairs)},
         {"cov_itheta", estimate_json(m.cov_itheta)},
         {"dispersion", estimate_json(m.dispersion)},
         {"identity_residual", estimate_json(m.identity)}};
  j["best_response_b_x"] = m.best_response_b_x ? estimate_json(*m.best_response_b_x) : Json(nullptr);
  j["best_response_b_y"] = m.best_response_b_y ? estimate_json(*m.best_response_b_y) : Json(nullptr);
  return j;
}

Json to_json(const CorollaryReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back(Json{{"name", c.name},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"pass", c.pass},
                          {"witness", c.witness}});
  }
  return Json{{"preset", r.preset},     {"parameter", r.parameter},
              {"lambda", r.lambda},     {"c", r.c},
              {"tau_theta", r.tau_theta}, {"all_pass", r.all_pass()},
              {"claims", claims},       {"optimal", to_json(r.optimal)},
              {"gross_optimal", to_json(r.gross_optimal)}, {"robust", to_json(r.robust)}};
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols{"tau_y", "tau_x", "b_x",     "b_y",      "V",
                                             "D",     "cost",  "W",       "W_gross",  "mwd",
                                             "mwd0",  "mwd_star", "mvd",  "rho"};
  return cols;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : sweep_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_row(const EquilibriumSolution& s, const std::optional<MwdBreakdown>& m) {
  std::ostringstream os;
  os << (s.tau_y.is_infinite() ? std::string("inf") : format_double(s.tau_y.value()));
  for (double v : {s.tau_x, s.b_x, s.b_y, s.V, s.D, s.cost, s.W, s.W_gross}) {
    os << ',' << format_double(v);
  }
  if (m) {
    for (double v : {m->mwd, m->mwd0, m->mwd_star, m->mvd, m->rho}) os << ',' << format_double(v);
  } else {
    os << ",,,,,";
  }
  return os.str();
}

}  // namespace disclose
