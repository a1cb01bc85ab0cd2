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

#include <array>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "disclose/error.hpp"
#include "disclose/oracles.hpp"
#include "disclose/simd/kernels.hpp"
#include "test_support.hpp"

using namespace disclose;
using namespace disclose::simd;

namespace {

std::array<std::uint32_t, 4> philox_block(Isa isa, PhiloxKey key, std::uint64_t stream,
                                          std::uint64_t block) {
  std::array<std::uint32_t, 4> out{};
  if (isa == Isa::Scalar) {
    scalar::philox4x32(key, stream, block, out);
  } else {
#ifdef DISCLOSE_HAVE_AVX2_KERNELS
    // the vector path only engages on groups of eight blocks
    std::array<std::uint32_t, 32> wide{};
    avx2::philox4x32(key, stream, block, wide);
    std::copy_n(wide.begin(), 4, out.begin());
#endif
  }
  return out;
}

std::vector<Isa> isas() {
  std::vector<Isa> v{Isa::Scalar};
  if (isa_supported(Isa::Avx2)) v.push_back(Isa::Avx2);
  return v;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

struct IsaGuard {
  Isa saved = active_isa();
  ~IsaGuard() { set_active_isa(saved); }
};

}  // namespace

TEST_CASE("philox known-answer vectors") {
  for (Isa isa : isas()) {
    CAPTURE(std::string(to_string(isa)));
    CHECK(philox_block(isa, {0, 0}, 0, 0) ==
          std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox_block(isa, {0xffffffff, 0xffffffff}, ~0ull, ~0ull) ==
          std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox_block(isa, {0xa4093822, 0x299f31d0}, 0x03707344'13198a2eull,
                       0x85a308d3'243f6a88ull) ==
          std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
  }
}

TEST_CASE("forced scalar selection through the environment") {
  const char* env = std::getenv("DISCLOSE_SIMD");
  if (env != nullptr && std::string(env) == "scalar") {
    CHECK(active_isa() == Isa::Scalar);
  } else {
    CHECK(active_isa() == (isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar));
  }
}

#ifdef DISCLOSE_HAVE_AVX2_KERNELS

TEST_CASE("philox scalar and AVX2 streams agree") {
  if (!isa_supported(Isa::Avx2)) return;
  for (std::size_t blocks : {0u, 1u, 7u, 8u, 9u, 16u, 31u, 1000u}) {
    std::vector<std::uint32_t> a(4 * blocks), b(4 * blocks);
    scalar::philox4x32({123, 456}, 77, 0xfffffff0ull, a);  // crosses a 32-bit block boundary
    avx2::philox4x32({123, 456}, 77, 0xfffffff0ull, b);
    CHECK(a == b);
  }
}

TEST_CASE("action sums are bit-identical across instruction sets") {
  if (!isa_supported(Isa::Avx2)) return;
  auto rng = disclose::testing::test_rng(3);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 6u, 7u, 8u, 1023u, 100001u}) {
    std::vector<double> z(n);
    for (double& v : z) v = disclose::testing::uniform(rng, -4.0, 4.0);
    const ActionParams p{0.37, 1.3, 0.61, -0.22};
    const ActionSums s = scalar::action_sums(z, p);
    const ActionSums v = avx2::action_sums(z, p);
    CAPTURE(n);
    CHECK(same_bits(s.x, v.x));
    CHECK(same_bits(s.xx, v.xx));
    CHECK(same_bits(s.a, v.a));
    CHECK(same_bits(s.aa, v.aa));
    CHECK(same_bits(s.xa, v.xa));
  }
}

TEST_CASE("linear welfare kernel is bit-identical across instruction sets") {
  if (!isa_supported(Isa::Avx2)) return;
  auto rng = disclose::testing::test_rng(4);
  for (std::size_t n : {1u, 2u, 4u, 5u, 11u, 400u, 1001u}) {
    std::vector<double> tx(n);
    for (double& v : tx) v = disclose::testing::log_uniform(rng, 1e-6, 1e6);
    tx[0] = 0.0;
    for (double ty : {0.0, 0.3, 7.0}) {
      const auto terms = detail::make_rational_terms(-0.4, 1.7, 2.5, ty);
      std::vector<double> a(n), b(n);
      scalar::linear_welfare(tx, terms, 0.8, -0.3, a);
      avx2::linear_welfare(tx, terms, 0.8, -0.3, b);
      for (std::size_t k = 0; k < n; ++k) CHECK(same_bits(a[k], b[k]));
    }
  }
}

TEST_CASE("simulation results do not depend on the selected instruction set") {
  if (!isa_supported(Isa::Avx2)) return;
  IsaGuard guard;
  OracleConfig cfg;
  cfg.n_agents = 10003;
  cfg.n_draws = 20;
  set_active_isa(Isa::Scalar);
  const McMoments s = mc_moments({0.2, 1.1, 0.9, 0.0}, 1.4, 0.6, cfg);
  set_active_isa(Isa::Avx2);
  const McMoments v = mc_moments({0.2, 1.1, 0.9, 0.0}, 1.4, 0.6, cfg);
  CHECK(same_bits(s.var_i.mean, v.var_i.mean));
  CHECK(same_bits(s.cov_ij.mean, v.cov_ij.mean));
  CHECK(same_bits(s.dispersion.std_error, v.dispersion.std_error));
  CHECK(same_bits(s.identity.mean, v.identity.mean));
}

#endif

TEST_CASE("dispatch checks") {
  IsaGuard guard;
  CHECK_NOTHROW(set_active_isa(Isa::Scalar));
  CHECK(active_isa() == Isa::Scalar);
  if (!isa_supported(Isa::Avx2)) CHECK_THROWS_AS(set_active_isa(Isa::Avx2), InvalidArgument);
  std::vector<std::uint32_t> bad(6);
  CHECK_THROWS_AS(philox4x32({}, 0, 0, bad), InvalidArgument);
  std::vector<double> tx(5), out(4);
  CHECK_THROWS_AS(linear_welfare(tx, detail::make_rational_terms(0, 1, 1, 1), 1, 0, out),
                  InvalidArgument);
  CHECK(to_string(Isa::Scalar) == "scalar");
  CHECK(to_string(Isa::Avx2) == "avx2");
}
