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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = disclose::cli::run(args, out);
  return {code, out.str()};
}

std::string config_path(const char* name) {
  return std::string(DISCLOSE_SOURCE_DIR) + "/configs/" + name;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("disclose_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

std::vector<std::vector<double>> csv_numbers(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell.empty() ? 0.0 : std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

const char* kIsoNinth = R"({"cost": {"kind": "isoelastic", "c": 0.1111111111111111, "lambda": 1},
                            "welfare": {"zeta": 1, "eta": 1}})";

}  // namespace

TEST_CASE("solve at an interior point") {
  const std::string cfg = temp_file("iso_ninth.json", kIsoNinth);
  const Result r = cli({"solve", "--config", cfg, "--tau-y", "1"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["tau_x"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["W"].get<double>() == doctest::Approx(11.0 / 18.0).epsilon(1e-12));
  CHECK(j["mwd"].is_object());

  const Result inf = cli({"solve", "--config", cfg, "--tau-y", "inf"});
  REQUIRE(inf.code == 0);
  CHECK(inf.json()["tau_y"] == "inf");
  CHECK(inf.json()["tau_x"].get<double>() == 0.0);

  const Result csv = cli({"solve", "--config", cfg, "--tau-y", "1", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("tau_y,tau_x,", 0) == 0);
}

TEST_CASE("solve at a corner") {
  const Result r = cli({"solve", "--lambda", "0", "--c", "1", "--tau-y", "0"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["tau_x"].get<double>() == 0.0);
  CHECK(j["mwd"].is_null());
  CHECK(j.contains("corner_welfare_slope"));
}

TEST_CASE("invalid input exits with code 2") {
  const std::string bad = temp_file("bad.json", "{\"alpha\": 0.5,");
  Result r = cli({"solve", "--config", bad});
  CHECK(r.code == 2);
  CHECK(r.json()["error"]["type"] == "invalid_argument");
  r = cli({"sweep", "--grid", "1:2:0"});
  CHECK(r.code == 2);
  r = cli({"solve", "--tau-y", "-1"});
  CHECK(r.code == 2);
  r = cli({"solve", "--no-such-flag"});
  CHECK(r.code == 2);
  CHECK(r.json()["error"]["type"] == "usage");
  r = cli({"optimal", "--delta", "3"});
  CHECK(r.code == 2);
  r = cli({"verify", "--suite", "nonsense"});
  CHECK(r.code == 2);
  r = cli({});
  CHECK(r.code == 2);
}

TEST_CASE("region IV sweep is single peaked at the interior optimum") {
  const Result r = cli({"sweep", "--config", config_path("region_iv.json"), "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv_numbers(r.out);
  REQUIRE(rows.size() == 400);
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][7] > rows[best][7]) best = i;
  }
  for (std::size_t i = 1; i <= best; ++i) CHECK(rows[i][7] > rows[i - 1][7]);
  for (std::size_t i = best + 1; i < rows.size(); ++i) CHECK(rows[i][7] < rows[i - 1][7]);
  const double step = rows[1][0] - rows[0][0];
  CHECK(std::abs(rows[best][0] - 0.51426716069344971574) <= step);

  const Result opt = cli({"optimal", "--config", config_path("region_iv.json")});
  REQUIRE(opt.code == 0);
  CHECK(opt.json()["optimal_tau_y"].get<double>() ==
        doctest::Approx(0.51426716069344971574).epsilon(1e-10));
}

TEST_CASE("region I sweep is increasing") {
  const Result r = cli({"sweep", "--config", config_path("region_i.json"), "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv_numbers(r.out);
  REQUIRE(rows.size() > 10);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][7] > rows[i - 1][7]);
  const Result opt = cli({"optimal", "--config", config_path("region_i.json")});
  CHECK(opt.json()["optimal_tau_y"] == "inf");
  CHECK(opt.json()["region"] == "I_full");
}

TEST_CASE("sweep JSON output and file output") {
  const fs::path out = fs::temp_directory_path() / "disclose_test_sweep.json";
  const Result r = cli({"sweep", "--config", config_path("region_iv.json"), "--grid", "0.5:2:4",
                        "--out", out.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  const Json j = Json::parse(in);
  CHECK(j["grid"] == "0.5:2:4");
  CHECK(j["rows"].size() == 4);
}

TEST_CASE("Cournot divergence configuration") {
  const Result r = cli({"optimal", "--config", config_path("cournot_divergence.json")});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["region"].get<std::string>().rfind("II", 0) == 0);
  CHECK(j["optimal_tau_y"].get<double>() == 0.0);
  const Result rob = cli({"robust", "--config", config_path("cournot_divergence.json")});
  REQUIRE(rob.code == 0);
  CHECK(rob.json()["robust_tau_y"] == "inf");
  const Result app = cli({"app", "--config", config_path("cournot_divergence.json")});
  REQUIRE(app.code == 0);
  for (const Json& claim : app.json()["report"]["claims"]) CHECK(claim["pass"] == true);
}

TEST_CASE("robust peak") {
  const Result r = cli({"robust", "--config", config_path("robust_peak.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["robust_tau_y"].get<double>() == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(r.json()["g_kappa"].get<double>() == doctest::Approx(16.0).epsilon(1e-12));
  const Result k = cli({"robust", "--config", config_path("robust_peak.json"), "--kappa", "inf"});
  REQUIRE(k.code == 0);
  CHECK(k.json()["robust_tau_y"] == "inf");  // F_inf rises toward eta V(inf) = -0.1
}

TEST_CASE("robust with eta = 0 warns instead of failing") {
  const std::string cfg = temp_file("eta0.json", R"({"welfare": {"zeta": 0.5, "eta": 0}})");
  const Result r = cli({"robust", "--config", cfg});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["warning"] == "outside-theorem");
  CHECK(j["applicable"] == false);
  CHECK(j.contains("grid_robust_tau_y"));
}

TEST_CASE("classify and application presets") {
  Result r = cli({"classify", "--preset", "beauty", "--r", "0.25", "--lambda", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["region"] == "I_full");
  r = cli({"classify", "--preset", "beauty", "--r", "0.8", "--lambda", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["region"] != "I_full");
  r = cli({"app", "--preset", "beauty", "--r", "0.25", "--lambda", "2", "--c", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["thresholds"]["r_star"].get<double>() == doctest::Approx(2.0 / 3.0));
  CHECK(r.json()["thresholds"]["r_gross"].get<double>() == doctest::Approx(1.0 / 3.0));
  r = cli({"app", "--preset", "cournot", "--delta", "1", "--lambda", "2", "--c", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["thresholds"]["delta_star"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("verify command") {
  const Result r = cli({"verify", "--suite", "robust", "--seed", "3"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 3);
  CHECK(j["checks_failed"] == 0);
  CHECK(j["checks_total"].get<int>() > 0);
  CHECK(cli({"verify", "--suite", "robust", "--seed", "3"}).out == r.out);
  CHECK(cli({"verify", "--suite", "optimal", "--format", "csv"}).code == 2);
}
