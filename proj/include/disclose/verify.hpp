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
#include <vector>

#include "disclose/io.hpp"
#include "disclose/oracles.hpp"

namespace disclose {

struct CheckResult {
  std::string suite;
  std::string name;
  double analytic = 0.0;
  double oracle = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> covers;  // analytic operations exercised
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t failures() const;
  Json to_json() const;
};

/// "all", "equilibrium", "welfare", "moments", "mwd", "optimal", "robust",
/// "applications".
const std::vector<std::string>& verify_suites();

/// Analytic operations that must be cross-checked by at least one oracle.
const std::vector<std::string>& analytic_operations();

/// Runs a suite on fixed reference cases plus cases built from `run`.
/// Deterministic for a given (suite, cfg, run).
VerifyReport run_verify(const std::string& suite, const OracleConfig& cfg, const RunConfig& run);

}  // namespace disclose
