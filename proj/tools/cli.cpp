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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "disclose/applications.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/error.hpp"
#include "disclose/io.hpp"
#include "disclose/mwd.hpp"
#include "disclose/optimal.hpp"
#include "disclose/oracles.hpp"
#include "disclose/parallel.hpp"
#include "disclose/robust.hpp"
#include "disclose/verify.hpp"
#include "disclose/welfare.hpp"

namespace disclose::cli {

namespace {

struct Options {
  std::string config;
  std::string tau_y = "1";
  std::optional<std::string> kappa;
  std::optional<std::string> grid;
  std::optional<std::string> preset;
  std::optional<double> delta;
  std::optional<double> r;
  std::optional<double> lambda;
  std::optional<double> c;
  std::string format = "json";
  std::uint64_t seed = 7;
  std::string out;
  std::string suite = "all";
  bool gross = false;
};

PrecisionChoice parse_precision(const std::string& s, const char* what) {
  if (s == "inf") return PrecisionChoice::infinite();
  double v = 0.0;
  std::istringstream in(s);
  in >> v;
  if (!in || !in.eof()) throw InvalidArgument(std::string(what) + " must be a number or inf");
  return PrecisionChoice::finite(v);
}

RunConfig build_config(const Options& o) {
  RunConfig run = o.config.empty() ? RunConfig{} : load_run_config(o.config);
  if (o.preset) {
    PresetConfig pc;
    if (*o.preset == "cournot") {
      pc.kind = PresetKind::Cournot;
    } else if (*o.preset == "beauty") {
      pc.kind = PresetKind::Beauty;
    } else {
      throw InvalidArgument("--preset must be cournot or beauty");
    }
    if (run.preset && run.preset->kind == pc.kind) pc = *run.preset;
    run.preset = pc;
  }
  if (o.delta) {
    if (!run.preset || run.preset->kind != PresetKind::Cournot) {
      throw InvalidArgument("--delta requires the cournot preset");
    }
    run.preset->parameter = *o.delta;
  }
  if (o.r) {
    if (!run.preset || run.preset->kind != PresetKind::Beauty) {
      throw InvalidArgument("--r requires the beauty preset");
    }
    run.preset->parameter = *o.r;
  }
  if (o.preset && !o.delta && !o.r && !(o.config.size() && run.preset)) {
    throw InvalidArgument("--preset needs --delta (cournot) or --r (beauty)");
  }
  if (o.lambda || o.c) {
    double lambda = 1.0, scale = 1.0;
    if (run.cost.has_constant_elasticity()) {
      lambda = run.cost.constant_elasticity();
      scale = run.cost.scale();
    }
    if (o.lambda) lambda = *o.lambda;
    if (o.c) scale = *o.c;
    run.cost = lambda == 0.0 ? CostSpec::linear(scale) : CostSpec::isoelastic(scale, lambda);
  }
  if (o.kappa) run.kappa = parse_precision(*o.kappa, "--kappa");
  if (o.grid) run.grid = GridSpec::parse(*o.grid);
  run.apply_preset();
  run.model.validate();
  if (o.format != "json" && o.format != "csv") throw InvalidArgument("--format must be json or csv");
  return run;
}

GridSpec grid_of(const RunConfig& run) { return run.grid.value_or(GridSpec{}); }

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_json(const Options& o, const char* cmd) {
  if (o.format != "json") throw InvalidArgument(std::string(cmd) + " only supports --format json");
}

std::optional<MwdBreakdown> try_mwd(const RunConfig& run, const PrecisionChoice& ty,
                                    double tau_x) {
  if (!ty.is_finite() || tau_x == 0.0) return std::nullopt;
  return mwd(run.model, run.welfare, run.cost, ty.value());
}

int cmd_solve(const Options& o, std::ostream& out) {
  const RunConfig run = build_config(o);
  const PrecisionChoice ty = parse_precision(o.tau_y, "--tau-y");
  const EquilibriumSolution s = solve_equilibrium(run.model, run.welfare, run.cost, ty);
  const std::optional<MwdBreakdown> m = try_mwd(run, ty, s.tau_x);
  if (o.format == "csv") {
    emit(o, out, csv_header() + "\n" + csv_row(s, m) + "\n");
    return 0;
  }
  Json j = to_json(s);
  j["mwd"] = m ? to_json(*m) : Json(nullptr);
  if (!m && ty.is_finite()) {
    j["corner_welfare_slope"] = number_to_json(corner_welfare_slope(run.model, run.welfare, ty.value()));
  }
  emit(o, out, dump(j));
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const RunConfig run = build_config(o);
  const GridSpec grid = grid_of(run);
  grid.validate();
  const std::vector<double> ys = grid.values();
  std::vector<EquilibriumSolution> sols(ys.size());
  std::vector<std::optional<MwdBreakdown>> ms(ys.size());
  parallel_for(ys.size(), [&](std::size_t i) {
    const PrecisionChoice ty = PrecisionChoice::finite(ys[i]);
    sols[i] = solve_equilibrium(run.model, run.welfare, run.cost, ty);
    ms[i] = try_mwd(run, ty, sols[i].tau_x);
  });
  if (o.format == "csv") {
    std::string text = csv_header() + "\n";
    for (std::size_t i = 0; i < ys.size(); ++i) text += csv_row(sols[i], ms[i]) + "\n";
    emit(o, out, text);
    return 0;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    Json j = to_json(sols[i]);
    j["mwd"] = ms[i] ? to_json(*ms[i]) : Json(nullptr);
    rows.push_back(std::move(j));
  }
  emit(o, out, dump(Json{{"grid", grid.to_string()}, {"rows", rows}}));
  return 0;
}

int cmd_optimal(const Options& o, std::ostream& out) {
  require_json(o, "optimal");
  const RunConfig run = build_config(o);
  const DisclosureVerdict v =
      o.gross ? gross_optimal_precision(run.model, run.welfare, run.cost, grid_of(run))
              : optimal_precision(run.model, run.welfare, run.cost, grid_of(run));
  emit(o, out, dump(to_json(v)));
  return 0;
}

int cmd_robust(const Options& o, std::ostream& out) {
  require_json(o, "robust");
  const RunConfig run = build_config(o);
  const PrecisionChoice kappa = run.kappa.value_or(PrecisionChoice::infinite());
  const RobustVerdict v = robust_precision(run.model, run.welfare, kappa);
  Json j = to_json(v);
  if (!v.applicable) {
    const GridOptimum g = argmax_worst_case(run.model, run.welfare, kappa, grid_of(run));
    j["warning"] = "outside-theorem";
    j["grid_robust_tau_y"] = precision_to_json(g.arg);
    j["grid_worst_case_value"] = number_to_json(g.value);
  }
  emit(o, out, dump(j));
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  require_json(o, "classify");
  const RunConfig run = build_config(o);
  Json j{{"model", to_json(run.model)}, {"cost", to_json(run.cost)}, {"welfare", to_json(run.welfare)}};
  if (run.cost.has_constant_elasticity()) {
    const double lambda = run.cost.constant_elasticity();
    j["lambda"] = lambda;
    j["eta_lower"] = number_to_json(eta_lower(run.model, run.welfare.zeta, lambda));
    j["region"] = std::string(to_string(classify_region(run.model, run.welfare, lambda)));
  } else {
    j["lambda"] = nullptr;
    j["eta_lower"] = nullptr;
    j["region"] = nullptr;
  }
  j["mwd0"] = number_to_json(mwd0(run.model, run.welfare));
  j["cost_free_monotonicity"] =
      std::string(to_string(classify_cost_free_monotonicity(run.model, run.welfare)));
  const PrecisionChoice kappa = run.kappa.value_or(PrecisionChoice::infinite());
  j["kappa"] = precision_to_json(kappa);
  j["minimizer_path"] = std::string(to_string(minimizer_path(run.model, run.welfare, kappa)));
  emit(o, out, dump(j));
  return 0;
}

int cmd_app(const Options& o, std::ostream& out) {
  require_json(o, "app");
  const RunConfig run = build_config(o);
  if (!run.preset) throw InvalidArgument("app requires --preset (or a preset in the config)");
  if (!run.cost.has_constant_elasticity()) throw InvalidArgument("app requires a linear or isoelastic cost");
  const double lambda = run.cost.constant_elasticity();
  const double c = run.cost.scale();
  const ApplicationPreset ap =
      run.preset->kind == PresetKind::Cournot
          ? cournot_preset(run.preset->parameter, run.model.tau_theta, run.model.theta_bar)
          : beauty_preset(run.preset->parameter, run.model.tau_theta, run.model.theta_bar,
                          run.preset->scaling);
  Json thresholds;
  if (ap.kind == PresetKind::Cournot) {
    const CournotThresholds t = cournot_thresholds(ap.parameter, run.cost, run.model.tau_theta);
    thresholds = Json{{"delta_star", number_to_json(t.delta_star)},
                      {"delta_double_star", number_to_json(t.delta_double_star)},
                      {"phi0", number_to_json(t.phi0)}};
  } else {
    const BeautyThresholds t = beauty_thresholds(lambda);
    thresholds = Json{{"r_star", number_to_json(t.r_star)}, {"r_gross", number_to_json(t.r_gross)}};
  }
  const CorollaryReport rep = corollary_checks(ap, lambda, c, grid_of(run));
  emit(o, out, dump(Json{{"thresholds", thresholds}, {"report", to_json(rep)}}));
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_json(o, "verify");
  const RunConfig run = build_config(o);
  OracleConfig cfg;
  cfg.seed = o.seed;
  if (run.grid) cfg.grid = *run.grid;
  const VerifyReport rep = run_verify(o.suite, cfg, run);
  emit(o, out, dump(rep.to_json()));
  return rep.all_pass() ? 0 : 1;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON run configuration");
  sub->add_option("--preset", o.preset, "cournot or beauty");
  sub->add_option("--delta", o.delta, "Cournot demand slope");
  sub->add_option("--r", o.r, "beauty-contest coordination weight");
  sub->add_option("--lambda", o.lambda, "isoelastic cost elasticity (0 = linear)");
  sub->add_option("--c", o.c, "cost scale");
  sub->add_option("--grid", o.grid, "tau_y grid lo:hi:n[:log]");
  sub->add_option("--kappa", o.kappa, "upper bound on private precision (number or inf)");
  sub->add_option("--format", o.format, "json or csv");
  sub->add_option("--out", o.out, "write output to a file");
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"type", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Public and private information disclosure in linear-quadratic Gaussian games",
               "disclose-cli"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "equilibrium at one public precision");
  add_common(solve, o);
  solve->add_option("--tau-y", o.tau_y, "public precision (number or inf)");

  auto* sweep = app.add_subcommand("sweep", "equilibrium rows over a tau_y grid");
  add_common(sweep, o);

  auto* optimal = app.add_subcommand("optimal", "welfare-maximizing public precision");
  add_common(optimal, o);
  optimal->add_flag("--gross", o.gross, "maximize welfare plus the information cost");

  auto* robust = app.add_subcommand("robust", "worst-case robust public precision");
  add_common(robust, o);

  auto* classify = app.add_subcommand("classify", "region and monotonicity classification");
  add_common(classify, o);

  auto* appl = app.add_subcommand("app", "Cournot and beauty-contest applications");
  add_common(appl, o);

  auto* verify = app.add_subcommand("verify", "cross-check closed forms against oracles");
  add_common(verify, o);
  verify->add_option("--suite", o.suite, "all, equilibrium, welfare, moments, mwd, optimal, robust, applications");
  verify->add_option("--seed", o.seed, "Monte Carlo seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << dump(error_json("usage", e.what()));
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (optimal->parsed()) return cmd_optimal(o, out);
    if (robust->parsed()) return cmd_robust(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (appl->parsed()) return cmd_app(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const InvalidArgument& e) {
    out << dump(error_json("invalid_argument", e.what()));
    return 2;
  } catch (const nlohmann::json::exception& e) {
    out << dump(error_json("invalid_argument", e.what()));
    return 2;
  } catch (const Error& e) {
    out << dump(error_json("numerical", e.what()));
    return 3;
  }
  return 2;
}

}  // namespace disclose::cli
