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

#include <array>

#include "disclose/simd/kernels.hpp"
#include "philox_constants.hpp"

namespace disclose::simd::scalar {

namespace {

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(prod >> 32);
  lo = static_cast<std::uint32_t>(prod);
}

}  // namespace

void philox4x32(PhiloxKey key, std::uint64_t stream, std::uint64_t first_block,
                std::span<std::uint32_t> out) {
  const std::size_t blocks = out.size() / 4;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::uint64_t block = first_block + b;
    std::uint32_t c0 = static_cast<std::uint32_t>(block);
    std::uint32_t c1 = static_cast<std::uint32_t>(block >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
    std::uint32_t k0 = key.k0;
    std::uint32_t k1 = key.k1;
    for (int round = 0; round < philox::kRounds; ++round) {
      if (round > 0) {
        k0 += philox::kW0;
        k1 += philox::kW1;
      }
      std::uint32_t hi0, lo0, hi1, lo1;
      mulhilo(philox::kM0, c0, hi0, lo0);
      mulhilo(philox::kM1, c2, hi1, lo1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      c0 = n0;
      c1 = lo1;
      c2 = n2;
      c3 = lo0;
    }
    out[4 * b + 0] = c0;
    out[4 * b + 1] = c1;
    out[4 * b + 2] = c2;
    out[4 * b + 3] = c3;
  }
}

ActionSums action_sums(std::span<const double> z, const ActionParams& params) {
  std::array<double, 4> sx{}, sxx{}, sa{}, saa{}, sxa{};
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lane = i & 3u;
    const double x = params.theta_dev + params.noise_scale * z[i];
    const double a = params.b_x * x + params.public_part;
    sx[lane] += x;
    sxx[lane] += x * x;
    sa[lane] += a;
    saa[lane] += a * a;
    sxa[lane] += x * a;
  }
  auto combine = [](const std::array<double, 4>& s) { return (s[0] + s[1]) + (s[2] + s[3]); };
  return ActionSums{combine(sx), combine(sxx), combine(sa), combine(saa), combine(sxa)};
}

void linear_welfare(std::span<const double> tau_x, const detail::RationalTerms& terms,
                    double eta, double zeta_minus_one, std::span<double> out) {
  for (std::size_t k = 0; k < tau_x.size(); ++k) {
    const double v = detail::volatility_form(terms, tau_x[k]);
    const double d = detail::dispersion_form(terms, tau_x[k]);
    out[k] = eta * v + zeta_minus_one * d;
  }
}

}  // namespace disclose::simd::scalar
