// Copyright 2026 The CBC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cbc/errors.hpp"
#include "cbc/lp1.hpp"
#include "test_support.hpp"

namespace cbc {
namespace {

// Reference Rice code as a '0'/'1' string, built without BitWriter.
std::string oracle_rice(std::uint32_t u, int k) {
  const std::uint32_t q = u >> k;
  std::string bits;
  if (q >= 32) {
    bits.assign(32, '1');
    for (int i = 31; i >= 0; --i) bits += ((u >> i) & 1u) ? '1' : '0';
    return bits;
  }
  bits.assign(q, '1');
  bits += '0';
  for (int i = k - 1; i >= 0; --i) bits += ((u >> i) & 1u) ? '1' : '0';
  return bits;
}

std::string to_bits(const std::vector<std::uint8_t>& bytes, std::size_t count) {
  std::string s;
  for (std::size_t i = 0; i < count; ++i) {
    s += ((bytes[i / 8] >> (7 - i % 8)) & 1u) ? '1' : '0';
  }
  return s;
}

std::string encode_to_bits(std::uint32_t u, int k) {
  BitWriter w;
  rice_encode_symbol(u, k, w);
  const std::size_t n = w.bit_count();
  return to_bits(w.finish(), n);
}

// The median-of-three form of the LOCO-I predictor.
std::uint32_t oracle_med(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t v[3] = {a, b, a + b - c};
  std::sort(v, v + 3);
  return static_cast<std::uint32_t>(v[1]);
}

TEST_CASE("med_predict") {
  CHECK(med_predict(5, 5, 5) == 5);
  CHECK(med_predict(10, 20, 5) == 20);
  CHECK(med_predict(10, 20, 15) == 15);
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      for (std::uint32_t c = 0; c < 16; ++c) {
        REQUIRE(med_predict(a, b, c) == oracle_med(a, b, c));
      }
    }
  }
}

TEST_CASE("predict_at edge conventions") {
  const ImagePlane p(3, 2, 4, {1, 2, 3, 4, 5, 6});
  CHECK(predict_at(p, 0, 0) == 0);
  CHECK(predict_at(p, 2, 0) == 2);
  CHECK(predict_at(p, 0, 1) == 1);
  CHECK(predict_at(p, 1, 1) == med_predict(4, 2, 1));
}

TEST_CASE("fold_residual") {
  CHECK(fold_residual(9, 9, 4) == 0);
  CHECK(fold_residual(13, 12, 4) == 2);
  CHECK(fold_residual(11, 12, 4) == 1);

  for (int n = 1; n <= 8; ++n) {
    const std::uint32_t m = 1u << n;
    for (std::uint32_t p = 0; p < m; ++p) {
      std::vector<bool> hit(m, false);
      for (std::uint32_t a = 0; a < m; ++a) {
        const std::uint32_t u = fold_residual(a, p, n);
        REQUIRE(u < m);
        REQUIRE_FALSE(hit[u]);
        hit[u] = true;
        REQUIRE(unfold_residual(u, p, n) == a);
      }
    }
  }
}

TEST_CASE("zigzag") {
  CHECK(zigzag(0) == 0);
  CHECK(zigzag(-1) == 1);
  CHECK(zigzag(1) == 2);
  CHECK(zigzag(-2) == 3);
  for (std::int32_t v = -70000; v <= 70000; ++v) REQUIRE(unzigzag(zigzag(v)) == v);
}

TEST_CASE("rice_encode_symbol") {
  CHECK(encode_to_bits(0, 0) == "0");
  CHECK(encode_to_bits(9, 2) == "11001");
  CHECK(encode_to_bits(1u << 20, 0) ==
        std::string(32, '1') + "00000000000100000000000000000000");

  for (int k = 0; k <= 10; ++k) {
    for (std::uint32_t u = 0; u < 1024; ++u) {
      const std::string expected = oracle_rice(u, k);
      REQUIRE(encode_to_bits(u, k) == expected);
      REQUIRE(rice_cost(u, k) == expected.size());

      BitWriter w;
      rice_encode_symbol(u, k, w);
      const std::vector<std::uint8_t> bytes = w.finish();
      BitReader r(bytes);
      REQUIRE(rice_decode_symbol(r, k) == u);
      REQUIRE(r.bit_position() == expected.size());
    }
  }
}

TEST_CASE("select_block_k") {
  const std::vector<std::uint32_t> zeros(64, 0);
  CHECK(select_block_k(zeros) == 0);

  // k=2 and k=3 tie at 5 bits; the smaller wins.
  CHECK(rice_cost(9, 0) == 10);
  CHECK(rice_cost(9, 1) == 6);
  CHECK(rice_cost(9, 2) == 5);
  CHECK(rice_cost(9, 3) == 5);
  const std::vector<std::uint32_t> nines(64, 9);
  CHECK(select_block_k(nines) == 2);

  const std::vector<std::uint32_t> one{1};
  CHECK(select_block_k(one) == 0);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> block(1 + rng() % 64);
    const std::uint32_t scale = 1u << (rng() % 20);
    for (auto& u : block) u = rng() % scale;
    std::size_t best = SIZE_MAX;
    int best_k = -1;
    for (int k = 0; k <= 24; ++k) {
      std::size_t total = 0;
      for (auto u : block) total += oracle_rice(u, k).size();
      if (total < best) {
        best = total;
        best_k = k;
      }
    }
    REQUIRE(select_block_k(block) == best_k);
  }
}

TEST_CASE("lp1_encode worked example") {
  // 1x1 plane [7], n=4: symbol fold(7, 0) = 14. Rice costs of 14 for
  // k = 0..4 are 15, 9, 6, 5, 5, so k = 3. Bits: 00011 | 10 | 110, padded.
  const ImagePlane p(1, 1, 4, {7});
  const std::vector<std::uint8_t> bytes = lp1_encode(p);
  CHECK(to_bits(bytes, 10) == "0001110110");
  CHECK(bytes == std::vector<std::uint8_t>{0x1D, 0x80});
  CHECK(lp1_decode(bytes, 1, 1, 4) == p);
}

TEST_CASE("lp1 compresses constant planes") {
  // Rice codes spend at least one bit per symbol plus a 5-bit header per
  // block. First block: header + escape for fold(77, 0) = 154 at k=0 (64
  // bits) + 63 zero symbols = 132 bits; each of the other 63 blocks costs
  // 5 + 64 bits. 4479 bits -> 560 bytes, 7.3x smaller than 8-bit raw.
  const ImagePlane p = testing::constant_plane(64, 64, 8, 77);
  const std::vector<std::uint8_t> bytes = lp1_encode(p);
  CHECK(bytes.size() == 560);
  CHECK(bytes.size() * 7 < p.size());
  CHECK(lp1_decode(bytes, 64, 64, 8) == p);
}

TEST_CASE("lp1 round trip over random and structured planes") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t w = 1 + rng() % 50;
    const std::uint32_t h = 1 + rng() % 50;
    const int n = 1 + static_cast<int>(rng() % 8);
    const ImagePlane p = testing::random_plane(rng, w, h, n);
    const std::vector<std::uint8_t> bytes = lp1_encode(p);
    REQUIRE(lp1_decode(bytes, w, h, n) == p);
    REQUIRE(lp1_encode(p) == bytes);
  }
  for (int n = 1; n <= 16; ++n) {
    const auto max = static_cast<Sample>((1u << n) - 1);
    for (const ImagePlane& p :
         {testing::constant_plane(17, 9, n, 0), testing::constant_plane(17, 9, n, max),
          testing::gradient_plane(33, 7, n), testing::checkerboard_plane(8, 13, n),
          testing::random_plane(rng, 31, 5, n)}) {
      REQUIRE(lp1_decode(lp1_encode(p), p.width(), p.height(), n) == p);
    }
  }
}

TEST_CASE("lp1 decode errors") {
  CHECK_THROWS_AS(lp1_decode({}, 2, 2, 4), CorruptStreamError);

  // Block header k = 25.
  const std::vector<std::uint8_t> bad_k{0b11001000, 0};
  CHECK_THROWS_AS(lp1_decode(bad_k, 1, 1, 4), CorruptStreamError);

  // Symbol 16 does not fit a 4-bit plane: k=4, q=1, remainder 0000.
  BitWriter w;
  w.put_bits(4, kRiceKBits);
  rice_encode_symbol(16, 4, w);
  CHECK_THROWS_AS(lp1_decode(w.finish(), 1, 1, 4), CorruptStreamError);

  const ImagePlane p(5, 5, 6, std::vector<Sample>(25, 33));
  std::vector<std::uint8_t> bytes = lp1_encode(p);
  bytes.push_back(0);
  CHECK_THROWS_AS(lp1_decode(bytes, 5, 5, 6), CorruptStreamError);
  bytes.resize(bytes.size() - 2);
  CHECK_THROWS_AS(lp1_decode(bytes, 5, 5, 6), CorruptStreamError);
}

TEST_CASE("lp1 prefix decoding of concatenated streams") {
  std::mt19937 rng(99);
  const ImagePlane a = testing::random_plane(rng, 9, 4, 3);
  const ImagePlane b = testing::random_plane(rng, 9, 4, 5);
  std::vector<std::uint8_t> bytes = lp1_encode(a);
  const std::size_t first = bytes.size();
  const std::vector<std::uint8_t> tail = lp1_encode(b);
  bytes.insert(bytes.end(), tail.begin(), tail.end());

  const Lp1Prefix pa = lp1_decode_prefix(bytes, 9, 4, 3);
  CHECK(pa.plane == a);
  CHECK(pa.consumed == first);
  const Lp1Prefix pb = lp1_decode_prefix(std::span(bytes).subspan(first), 9, 4, 5);
  CHECK(pb.plane == b);
  CHECK(pb.consumed == tail.size());
}

TEST_CASE("depth-0 planes need no bits") {
  const ImagePlane z(4, 4, 0);
  CHECK(lp1_encode(z).empty());
  CHECK(lp1_decode({}, 4, 4, 0) == z);
}

}  // namespace
}  // namespace cbc
