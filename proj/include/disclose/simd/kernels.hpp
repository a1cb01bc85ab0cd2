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

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant chosen at runtime. The
// variants perform the same floating-point operations in the same order
// (four interleaved accumulator lanes, no fused multiply-add), so results are
// bit-identical across instruction sets.

#include <cstdint>
#include <span>
#include <string_view>

#include "disclose/detail/rational_forms.hpp"

namespace disclose::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);
bool isa_supported(Isa isa);

/// Instruction set used by the dispatching entry points. Defaults to the best
/// supported one; DISCLOSE_SIMD=scalar forces the reference path.
Isa active_isa();
/// Throws InvalidArgument if the ISA is not supported on this machine.
void set_active_isa(Isa isa);

struct PhiloxKey {
  std::uint32_t k0 = 0;
  std::uint32_t k1 = 0;
};

/// Philox4x32-10. Block b (b = first_block, first_block + 1, ...) uses the
/// counter (b_lo, b_hi, stream_lo, stream_hi) and writes four words at
/// out[4 * (b - first_block)]. out.size() must be a multiple of 4.
void philox4x32(PhiloxKey key, std::uint64_t stream, std::uint64_t first_block,
                std::span<std::uint32_t> out);

/// Per-agent actions a_i = b_x x_i + public_part with private signal
/// deviations x_i = theta_dev + noise_scale * z_i.
struct ActionParams {
  double theta_dev = 0.0;
  double noise_scale = 0.0;
  double b_x = 0.0;
  double public_part = 0.0;
};

struct ActionSums {
  double x = 0.0;
  double xx = 0.0;
  double a = 0.0;
  double aa = 0.0;
  double xa = 0.0;
};

ActionSums action_sums(std::span<const double> z, const ActionParams& params);

/// out[k] = eta V(tau_x[k], tau_y) + zeta_minus_one D(tau_x[k], tau_y).
void linear_welfare(std::span<const double> tau_x, const detail::RationalTerms& terms,
                    double eta, double zeta_minus_one, std::span<double> out);

namespace scalar {
void philox4x32(PhiloxKey key, std::uint64_t stream, std::uint64_t first_block,
                std::span<std::uint32_t> out);
ActionSums action_sums(std::span<const double> z, const ActionParams& params);
void linear_welfare(std::span<const double> tau_x, const detail::RationalTerms& terms,
                    double eta, double zeta_minus_one, std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DISCLOSE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void philox4x32(PhiloxKey key, std::uint64_t stream, std::uint64_t first_block,
                std::span<std::uint32_t> out);
ActionSums action_sums(std::span<const double> z, const ActionParams& params);
void linear_welfare(std::span<const double> tau_x, const detail::RationalTerms& terms,
                    double eta, double zeta_minus_one, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace disclose::simd
