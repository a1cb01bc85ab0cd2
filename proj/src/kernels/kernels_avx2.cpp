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

// Compiled with -mavx2 (no -mfma): only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>

#include "disclose/simd/kernels.hpp"
#include "philox_constants.hpp"

namespace disclose::simd::avx2 {

namespace {

// 32x32 -> 64 multiply of eight lanes, split into high and low words.
inline void mulhilo8(__m256i m, __m256i c, __m256i& hi, __m256i& lo) {
  const __m256i even = _mm256_mul_epu32(c, m);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(c, 32), m);
  lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
  hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

inline double hsum_lanes(__m256d v) {
  alignas(32) std::array<double, 4> l;
  _mm256_store_pd(l.data(), v);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

}  // namespace

void philox4x32(PhiloxKey key, std::uint64_t stream, std::uint64_t first_block,
                std::span<std::uint32_t> out) {
  const std::size_t blocks = out.size() / 4;
  const std::size_t full = blocks - blocks % 8;
  const __m256i m0 = _mm256_set1_epi32(static_cast<int>(philox::kM0));
  const __m256i m1 = _mm256_set1_epi32(static_cast<int>(philox::kM1));
  const __m256i stream_lo = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream)));
  const __m256i stream_hi =
      _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream >> 32)));

  alignas(32) std::array<std::uint32_t, 8> lo_words, hi_words;
  alignas(32) std::array<std::uint32_t, 8> r0, r1, r2, r3;
  for (std::size_t b = 0; b < full; b += 8) {
    for (std::size_t j = 0; j < 8; ++j) {
      const std::uint64_t block = first_block + b + j;
      lo_words[j] = static_cast<std::uint32_t>(block);
      hi_words[j] = static_cast<std::uint32_t>(block >> 32);
    }
    __m256i c0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo_words.data()));
    __m256i c1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi_words.data()));
    __m256i c2 = stream_lo;
    __m256i c3 = stream_hi;
    std::uint32_t k0 = key.k0;
    std::uint32_t k1 = key.k1;
    for (int round = 0; round < philox::kRounds; ++round) {
      if (round > 0) {
        k0 += philox::kW0;
        k1 += philox::kW1;
      }
      __m256i hi0, lo0, hi1, lo1;
      mulhilo8(m0, c0, hi0, lo0);
      mulhilo8(m1, c2, hi1, lo1);
      const __m256i n0 =
          _mm256_xor_si256(_mm256_xor_si256(hi1, c1), _mm256_set1_epi32(static_cast<int>(k0)));
      const __m256i n2 =
          _mm256_xor_si256(_mm256_xor_si256(hi0, c3), _mm256_set1_epi32(static_cast<int>(k1)));
      c0 = n0;
      c1 = lo1;
      c2 = n2;
      c3 = lo0;
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(r0.data()), c0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(r1.data()), c1);
    _mm256_store_si256(reinterpret_cast<__m256i*>(r2.data()), c2);
    _mm256_store_si256(reinterpret_cast<__m256i*>(r3.data()), c3);
    for (std::size_t j = 0; j < 8; ++j) {
      std::uint32_t* dst = out.data() + 4 * (b + j);
      dst[0] = r0[j];
      dst[1] = r1[j];
      dst[2] = r2[j];
      dst[3] = r3[j];
    }
  }
  if (full < blocks) {
    scalar::philox4x32(key, stream, first_block + full, out.subspan(4 * full));
  }
}

ActionSums action_sums(std::span<const double> z, const ActionParams& params) {
  const std::size_t n = z.size();
  const std::size_t n4 = n - n % 4;
  const __m256d theta = _mm256_set1_pd(params.theta_dev);
  const __m256d scale = _mm256_set1_pd(params.noise_scale);
  const __m256d bx = _mm256_set1_pd(params.b_x);
  const __m256d pub = _mm256_set1_pd(params.public_part);
  __m256d sx = _mm256_setzero_pd(), sxx = _mm256_setzero_pd(), sa = _mm256_setzero_pd(),
          saa = _mm256_setzero_pd(), sxa = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d zi = _mm256_loadu_pd(z.data() + i);
    const __m256d x = _mm256_add_pd(theta, _mm256_mul_pd(scale, zi));
    const __m256d a = _mm256_add_pd(_mm256_mul_pd(bx, x), pub);
    sx = _mm256_add_pd(sx, x);
    sxx = _mm256_add_pd(sxx, _mm256_mul_pd(x, x));
    sa = _mm256_add_pd(sa, a);
    saa = _mm256_add_pd(saa, _mm256_mul_pd(a, a));
    sxa = _mm256_add_pd(sxa, _mm256_mul_pd(x, a));
  }
  if (n4 == n) {
    return ActionSums{hsum_lanes(sx), hsum_lanes(sxx), hsum_lanes(sa), hsum_lanes(saa),
                      hsum_lanes(sxa)};
  }
  // Fold the tail into the same lanes the scalar reference would use.
  alignas(32) std::array<double, 4> lx, lxx, la, laa, lxa;
  _mm256_store_pd(lx.data(), sx);
  _mm256_store_pd(lxx.data(), sxx);
  _mm256_store_pd(la.data(), sa);
  _mm256_store_pd(laa.data(), saa);
  _mm256_store_pd(lxa.data(), sxa);
  for (std::size_t i = n4; i < n; ++i) {
    const std::size_t lane = i & 3u;
    const double x = params.theta_dev + params.noise_scale * z[i];
    const double a = params.b_x * x + params.public_part;
    lx[lane] += x;
    lxx[lane] += x * x;
    la[lane] += a;
    laa[lane] += a * a;
    lxa[lane] += x * a;
  }
  auto combine = [](const std::array<double, 4>& s) { return (s[0] + s[1]) + (s[2] + s[3]); };
  return ActionSums{combine(lx), combine(lxx), combine(la), combine(laa), combine(lxa)};
}

void linear_welfare(std::span<const double> tau_x, const detail::RationalTerms& t, double eta,
                    double zeta_minus_one, std::span<double> out) {
  const std::size_t n = tau_x.size();
  const std::size_t n4 = n - n % 4;
  const __m256d a1 = _mm256_set1_pd(t.one_minus_alpha);
  const __m256d b2 = _mm256_set1_pd(t.beta_sq);
  const __m256d ty = _mm256_set1_pd(t.tau_y);
  const __m256d tz = _mm256_set1_pd(t.tau_z);
  const __m256d vden = _mm256_set1_pd(t.vol_denominator);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d e = _mm256_set1_pd(eta);
  const __m256d zm1 = _mm256_set1_pd(zeta_minus_one);
  for (std::size_t k = 0; k < n4; k += 4) {
    const __m256d tx = _mm256_loadu_pd(tau_x.data() + k);
    const __m256d ax = _mm256_mul_pd(a1, tx);
    const __m256d d = _mm256_add_pd(ax, tz);
    const __m256d d2 = _mm256_mul_pd(d, d);
    const __m256d disp = _mm256_div_pd(_mm256_mul_pd(b2, tx), d2);
    const __m256d num = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(ax, ax), _mm256_mul_pd(_mm256_mul_pd(two, ax), ty)),
        _mm256_mul_pd(ty, tz));
    const __m256d vol = _mm256_div_pd(_mm256_mul_pd(b2, num), _mm256_mul_pd(vden, d2));
    _mm256_storeu_pd(out.data() + k, _mm256_add_pd(_mm256_mul_pd(e, vol), _mm256_mul_pd(zm1, disp)));
  }
  if (n4 < n) scalar::linear_welfare(tau_x.subspan(n4), t, eta, zeta_minus_one, out.subspan(n4));
}

}  // namespace disclose::simd::avx2
