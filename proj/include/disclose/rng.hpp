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

// Counter-based random streams. A stream is identified by (seed, stream
// index); block b of a stream is Philox4x32-10 applied to the counter
// (b, stream) under the key derived from the seed. Any block can be produced
// independently of the others, so parallel consumers stay reproducible.

#include <cstdint>
#include <span>

#include "disclose/simd/kernels.hpp"

namespace disclose {

simd::PhiloxKey philox_key(std::uint64_t seed);

/// Uniform in [0, 1) with 53 random bits.
double uniform_from_bits(std::uint64_t bits);

/// Standard normals from blocks [first_block, first_block + ceil(n / 2)) of a
/// stream. Each block yields two normals by the Box-Muller transform.
void fill_normals(std::uint64_t seed, std::uint64_t stream, std::uint64_t first_block,
                  std::span<double> out);

/// Sequential draws from a single stream; used for random test batteries and
/// parameter sampling where reproducibility matters more than speed.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream) : key_(philox_key(seed)), stream_(stream) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// exp of a uniform draw on [log lo, log hi].
  double log_uniform(double lo, double hi);
  /// Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n);

 private:
  simd::PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::uint32_t words_[4] = {0, 0, 0, 0};
  int used_ = 4;
};

}  // namespace disclose
