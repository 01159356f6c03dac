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

#include <cmath>
#include <random>
#include <vector>

#include "cbc/errors.hpp"
#include "cbc/lossy.hpp"
#include "test_support.hpp"

namespace cbc {
namespace {

std::uint32_t oracle_box_mean(const ImagePlane& p, std::uint32_t gx, std::uint32_t gy,
                              std::uint32_t f) {
  double sum = 0;
  int count = 0;
  for (std::uint32_t y = gy * f; y < std::min(p.height(), (gy + 1) * f); ++y) {
    for (std::uint32_t x = gx * f; x < std::min(p.width(), (gx + 1) * f); ++x) {
      sum += p.at(x, y);
      ++count;
    }
  }
  return static_cast<std::uint32_t>(std::floor(sum / count + 0.5));
}

// Floating-point bilinear reference; exact when f is a power of two.
std::uint32_t oracle_bilinear(const ImagePlane& g, std::uint32_t f, std::uint32_t x,
                              std::uint32_t y) {
  auto coord = [f](std::uint32_t pos, std::uint32_t size) {
    const double u = (pos + 0.5) / f - 0.5;
    return std::clamp(u, 0.0, static_cast<double>(size - 1));
  };
  const double u = coord(x, g.width());
  const double v = coord(y, g.height());
  const auto i0 = static_cast<std::uint32_t>(std::floor(u));
  const auto j0 = static_cast<std::uint32_t>(std::floor(v));
  const std::uint32_t i1 = std::min(i0 + 1, g.width() - 1);
  const std::uint32_t j1 = std::min(j0 + 1, g.height() - 1);
  const double tu = u - i0;
  const double tv = v - j0;
  const double value = (1 - tv) * ((1 - tu) * g.at(i0, j0) + tu * g.at(i1, j0)) +
                       tv * ((1 - tu) * g.at(i0, j1) + tu * g.at(i1, j1));
  return static_cast<std::uint32_t>(std::floor(value + 0.5));
}

TEST_CASE("codec config validation") {
  CHECK_NOTHROW(LossyCodecConfig::constant().validate());
  CHECK_NOTHROW(LossyCodecConfig::downsample(2).validate());
  CHECK_THROWS_AS(LossyCodecConfig::downsample(1).validate(), ConfigError);
  CHECK_THROWS_AS(LossyCodecConfig::downsample(0).validate(), ConfigError);
  CHECK_THROWS_AS(LossyCodecConfig::haar(0, 4).validate(), ConfigError);
  CHECK_THROWS_AS(LossyCodecConfig::haar(7, 4).validate(), ConfigError);
  CHECK_THROWS_AS(LossyCodecConfig::haar(3, 0).validate(), ConfigError);
  CHECK_THROWS_AS((LossyCodecConfig{CodecId::kConst, {1}}.validate()), ConfigError);
  CHECK_THROWS_AS((LossyCodecConfig{static_cast<CodecId>(9), {}}.validate()), ConfigError);
  CHECK(LossyCodecConfig::haar(4, 32).to_string() == "haar:q=32,levels=4");
  CHECK(LossyCodecConfig::downsample(4).to_string() == "down:f=4");
}

TEST_CASE("CONST codec") {
  std::mt19937 rng(3);
  const Image img = testing::random_image(rng, 7, 5, 8, 3);
  const std::vector<std::uint8_t> payload = lossy_encode(img, LossyCodecConfig::constant());
  CHECK(payload.empty());
  const Image out = lossy_decode(payload, LossyCodecConfig::constant(), 7, 5, 3, 8);
  for (const ImagePlane& p : out.planes()) {
    for (Sample s : p.samples()) REQUIRE(s == 128);
  }
  const std::vector<std::uint8_t> junk{1};
  CHECK_THROWS_AS(lossy_decode(junk, LossyCodecConfig::constant(), 7, 5, 3, 8),
                  CorruptStreamError);
}

TEST_CASE("box downsample") {
  const ImagePlane p(2, 2, 8, {0, 0, 0, 4});
  CHECK(box_downsample(p, 2) == ImagePlane(1, 1, 8, {1}));
  // Round half up: mean 1.5 -> 2, mean 0.5 -> 1.
  CHECK(box_downsample(ImagePlane(2, 1, 8, {1, 2}), 2) == ImagePlane(1, 1, 8, {2}));
  CHECK(box_downsample(ImagePlane(2, 1, 8, {0, 1}), 2) == ImagePlane(1, 1, 8, {1}));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t w = 1 + rng() % 40;
    const std::uint32_t h = 1 + rng() % 40;
    const std::uint32_t f = 2 + rng() % 7;
    const ImagePlane plane = testing::random_plane(rng, w, h, 8);
    const ImagePlane grid = box_downsample(plane, f);
    REQUIRE(grid.width() == (w + f - 1) / f);
    REQUIRE(grid.height() == (h + f - 1) / f);
    for (std::uint32_t gy = 0; gy < grid.height(); ++gy) {
      for (std::uint32_t gx = 0; gx < grid.width(); ++gx) {
        REQUIRE(grid.at(gx, gy) == oracle_box_mean(plane, gx, gy, f));
      }
    }
  }
}

TEST_CASE("bilinear upsample") {
  // Stored row [10, 20], f = 2: x = 1 sits a quarter of the way from the
  // first grid sample to the second.
  const ImagePlane row(2, 1, 8, {10, 20});
  const ImagePlane up = bilinear_upsample(row, 2, 4, 2);
  CHECK(up.at(0, 0) == 10);
  CHECK(up.at(1, 0) == 13);
  CHECK(up.at(2, 0) == 18);
  CHECK(up.at(3, 0) == 20);
  CHECK(up.at(1, 1) == 13);

  std::mt19937 rng(5);
  for (std::uint32_t f : {2u, 4u, 8u, 16u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint32_t gw = 1 + rng() % 6;
      const std::uint32_t gh = 1 + rng() % 6;
      const ImagePlane grid = testing::random_plane(rng, gw, gh, 8);
      const std::uint32_t w = gw * f - rng() % f;
      const std::uint32_t h = gh * f - rng() % f;
      const ImagePlane out = bilinear_upsample(grid, f, w, h);
      for (std::uint32_t y = 0; y < h; ++y) {
        for (std::uint32_t x = 0; x < w; ++x) {
          REQUIRE(out.at(x, y) == oracle_bilinear(grid, f, x, y));
        }
      }
    }
  }
}

TEST_CASE("haar 1d") {
  const std::vector<std::int32_t> same{5, 5};
  HaarBands1d b = haar_forward_1d(same);
  CHECK(b.approx == std::vector<std::int32_t>{5});
  CHECK(b.detail == std::vector<std::int32_t>{0});

  const std::vector<std::int32_t> pair{3, 2};
  b = haar_forward_1d(pair);
  CHECK(b.approx == std::vector<std::int32_t>{2});
  CHECK(b.detail == std::vector<std::int32_t>{1});
  CHECK(haar_inverse_1d(b.approx, b.detail) == pair);

  const std::vector<std::int32_t> extremes{0, 255};
  b = haar_forward_1d(extremes);
  CHECK(b.approx == std::vector<std::int32_t>{127});
  CHECK(b.detail == std::vector<std::int32_t>{-255});
  CHECK(haar_inverse_1d(b.approx, b.detail) == extremes);

  for (std::int32_t x0 = 0; x0 < 256; ++x0) {
    for (std::int32_t x1 = 0; x1 < 256; ++x1) {
      const std::vector<std::int32_t> x{x0, x1};
      const HaarBands1d bands = haar_forward_1d(x);
      REQUIRE(bands.approx[0] == static_cast<std::int32_t>(std::floor((x0 + x1) / 2.0)));
      REQUIRE(bands.detail[0] == x0 - x1);
      REQUIRE(haar_inverse_1d(bands.approx, bands.detail) == x);
    }
  }

  const std::vector<std::int32_t> odd{4, 9, 7};
  b = haar_forward_1d(odd);
  CHECK(b.approx == std::vector<std::int32_t>{6, 7});
  CHECK(b.detail == std::vector<std::int32_t>{-5, 0});
  CHECK(haar_inverse_1d(b.approx, b.detail) == std::vector<std::int32_t>{4, 9, 7, 7});
}

TEST_CASE("haar 2d inverts exactly") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    CoeffPlane c;
    c.width = 1 + rng() % 37;
    c.height = 1 + rng() % 37;
    c.values.resize(static_cast<std::size_t>(c.width) * c.height);
    for (auto& v : c.values) v = static_cast<std::int32_t>(rng() % 65536);
    const int levels = 1 + static_cast<int>(rng() % 6);
    const HaarPyramid pyr = haar_forward_2d(c, levels);
    REQUIRE(pyr.levels.size() == static_cast<std::size_t>(levels));
    const CoeffPlane back = haar_inverse_2d(pyr, c.width, c.height);
    REQUIRE(back.values == c.values);
  }
}

TEST_CASE("dead-zone quantizer") {
  CHECK(quantize_coeff(0, 7) == 0);
  CHECK(quantize_coeff(-7, 4) == -1);
  CHECK(dequantize_coeff(-1, 4) == -4);
  CHECK(quantize_coeff(3, 4) == 0);
  CHECK(quantize_coeff(8, 4) == 2);
  for (std::uint32_t q = 1; q <= 64; ++q) {
    for (std::int32_t v = -512; v <= 512; ++v) {
      const std::int32_t level = quantize_coeff(v, q);
      const std::int32_t back = dequantize_coeff(level, q);
      REQUIRE(std::abs(back - v) < static_cast<std::int32_t>(q));
      REQUIRE(std::abs(back) <= std::abs(v));
      REQUIRE((std::abs(v) < static_cast<std::int32_t>(q)) == (level == 0));
    }
  }
}

TEST_CASE("HAAR with step 1 is lossless") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t w = 1 + rng() % 45;
    const std::uint32_t h = 1 + rng() % 45;
    const int d = trial % 2 ? 8 : 16;
    const Image img = testing::random_image(rng, w, h, d, 1 + 2 * (trial % 2));
    const auto config = LossyCodecConfig::haar(1 + trial % 6, 1);
    const Image out = lossy_decode(lossy_encode(img, config), config, w, h, img.channels(), d);
    REQUIRE(out == img);
  }
}

TEST_CASE("decode preserves geometry for every codec") {
  std::mt19937 rng(17);
  const std::vector<LossyCodecConfig> configs = {
      LossyCodecConfig::constant(),       LossyCodecConfig::downsample(2),
      LossyCodecConfig::downsample(3),    LossyCodecConfig::downsample(64),
      LossyCodecConfig::haar(1, 2),       LossyCodecConfig::haar(3, 64),
      LossyCodecConfig::haar(6, 1000000),
  };
  for (const auto& config : configs) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint32_t w = 1 + rng() % 30;
      const std::uint32_t h = 1 + rng() % 30;
      const int d = 1 + static_cast<int>(rng() % 16);
      const std::size_t ch = trial % 2 ? 3 : 1;
      const Image img = testing::random_image(rng, w, h, d, ch);
      const std::vector<std::uint8_t> payload = lossy_encode(img, config);
      REQUIRE(lossy_encode(img, config) == payload);
      const Image out = lossy_decode(payload, config, w, h, ch, d);
      REQUIRE(out.width() == w);
      REQUIRE(out.height() == h);
      REQUIRE(out.depth() == d);
      REQUIRE(out.channels() == ch);
    }
  }
}

TEST_CASE("DOWNSAMPLE payload shrinks with the factor on constant images") {
  const Image img({testing::constant_plane(128, 128, 8, 90)});
  std::size_t previous = SIZE_MAX;
  for (std::uint32_t f : {2u, 4u, 8u, 16u, 32u}) {
    const std::size_t size = lossy_encode(img, LossyCodecConfig::downsample(f)).size();
    CHECK(size < previous);
    previous = size;
  }
  const auto config = LossyCodecConfig::downsample(4);
  CHECK(lossy_decode(lossy_encode(img, config), config, 128, 128, 1, 8) == img);
}

TEST_CASE("corrupt lossy payloads") {
  std::mt19937 rng(4);
  const Image img = testing::random_image(rng, 16, 16, 8, 3);
  for (const auto& config : {LossyCodecConfig::downsample(2), LossyCodecConfig::haar(2, 8)}) {
    std::vector<std::uint8_t> payload = lossy_encode(img, config);
    std::vector<std::uint8_t> longer = payload;
    longer.push_back(0);
    CHECK_THROWS_AS(lossy_decode(longer, config, 16, 16, 3, 8), CorruptStreamError);
    payload.resize(payload.size() / 2);
    CHECK_THROWS_AS(lossy_decode(payload, config, 16, 16, 3, 8), CorruptStreamError);
  }
}

}  // namespace
}  // namespace cbc
