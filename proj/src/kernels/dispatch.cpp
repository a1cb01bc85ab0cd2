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

#include <atomic>
#include <cstdlib>
#include <string>

#include "disclose/error.hpp"
#include "disclose/simd/kernels.hpp"

namespace disclose::simd {

namespace {

bool cpu_has_avx2() {
#if defined(DISCLOSE_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("DISCLOSE_SIMD")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  if (isa == Isa::Scalar) return true;
  return cpu_has_avx2();
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidArgument("instruction set not supported: " + std::string(to_string(isa)));
  }
  active().store(isa, std::memory_order_relaxed);
}

void philox4x32(PhiloxKey key, std::uint64_t stream, std::uint64_t first_block,
                std::span<std::uint32_t> out) {
  if (out.size() % 4 != 0) throw InvalidArgument("philox output size must be a multiple of 4");
#ifdef DISCLOSE_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) return avx2::philox4x32(key, stream, first_block, out);
#endif
  scalar::philox4x32(key, stream, first_block, out);
}

ActionSums action_sums(std::span<const double> z, const ActionParams& params) {
#ifdef DISCLOSE_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) return avx2::action_sums(z, params);
#endif
  return scalar::action_sums(z, params);
}

void linear_welfare(std::span<const double> tau_x, const detail::RationalTerms& terms,
                    double eta, double zeta_minus_one, std::span<double> out) {
  if (out.size() < tau_x.size()) throw InvalidArgument("output span too small");
#ifdef DISCLOSE_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) return avx2::linear_welfare(tau_x, terms, eta, zeta_minus_one, out);
#endif
  scalar::linear_welfare(tau_x, terms, eta, zeta_minus_one, out);
}

}  // namespace disclose::simd
