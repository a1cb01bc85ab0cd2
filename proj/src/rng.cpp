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

#include "disclose/rng.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace disclose {

simd::PhiloxKey philox_key(std::uint64_t seed) {
  return simd::PhiloxKey{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

double uniform_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

void fill_normals(std::uint64_t seed, std::uint64_t stream, std::uint64_t first_block,
                  std::span<double> out) {
  const std::size_t blocks = (out.size() + 1) / 2;
  std::vector<std::uint32_t> words(4 * blocks);
  simd::philox4x32(philox_key(seed), stream, first_block, words);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::uint64_t w0 = (static_cast<std::uint64_t>(words[4 * b + 1]) << 32) | words[4 * b];
    const std::uint64_t w1 =
        (static_cast<std::uint64_t>(words[4 * b + 3]) << 32) | words[4 * b + 2];
    // u1 in (0, 1] keeps the logarithm finite.
    const double u1 = static_cast<double>((w0 >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform_from_bits(w1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    out[2 * b] = r * std::cos(angle);
    if (2 * b + 1 < out.size()) out[2 * b + 1] = r * std::sin(angle);
  }
}

std::uint64_t StreamRng::next_u64() {
  if (used_ >= 4) {
    simd::scalar::philox4x32(key_, stream_, block_++, words_);
    used_ = 0;
  }
  const std::uint64_t lo = words_[used_];
  const std::uint64_t hi = words_[used_ + 1];
  used_ += 2;
  return (hi << 32) | lo;
}

double StreamRng::uniform() { return uniform_from_bits(next_u64()); }

double StreamRng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::uint64_t StreamRng::index(std::uint64_t n) {
  return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
}

}  // namespace disclose
