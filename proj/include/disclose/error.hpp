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

#include <optional>
#include <stdexcept>
#include <string>

namespace disclose {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

// Raised by quantities that only exist while the private precision is
// interior (phi(tau_y) > 0). Carries the welfare slope along the corner path
// when the caller can use it instead.
class CornerError : public Error {
 public:
  explicit CornerError(const std::string& what,
                       std::optional<double> corner_derivative = std::nullopt)
      : Error(what), corner_derivative_(corner_derivative) {}
  const char* kind() const noexcept override { return "corner"; }
  std::optional<double> corner_derivative() const { return corner_derivative_; }

 private:
  std::optional<double> corner_derivative_;
};

// Bisection ran out of iterations. For a valid convex cost this is a bug.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}
  const char* kind() const noexcept override { return "convergence"; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

class NoInteriorStationaryPoint : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "no_interior_stationary_point"; }
};

}  // namespace disclose
