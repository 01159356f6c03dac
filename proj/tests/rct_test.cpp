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

#include "cbc/errors.hpp"
#include "cbc/rct.hpp"
#include "test_support.hpp"

namespace cbc {
namespace {

bool in_gamut(const RgbPixel& p, int d) {
  const std::int32_t max = (1 << d) - 1;
  return p.r >= 0 && p.r <= max && p.g >= 0 && p.g <= max && p.b >= 0 && p.b <= max;
}

std::int32_t oracle_luma(const RgbPixel& p) {
  return static_cast<std::int32_t>(std::floor((p.r + 2.0 * p.g + p.b) / 4.0));
}

TEST_CASE("rct_forward examples") {
  CHECK(rct_forward({0, 0, 0}) == YccPixel{0, 0, 0});
  CHECK(rct_forward({255, 255, 255}) == YccPixel{255, 0, 0});
  CHECK(rct_forward({255, 0, 0}) == YccPixel{63, 0, 255});
}

TEST_CASE("rct_inverse examples") {
  CHECK(rct_inverse({0, 0, 0}) == RgbPixel{0, 0, 0});
  CHECK(rct_inverse({63, 0, 255}) == RgbPixel{255, 0, 0});
  CHECK(rct_inverse({255, 0, 0}) == RgbPixel{255, 255, 255});
}

TEST_CASE("rct is invertible, exhaustive at d=4 and random at d=8") {
  for (std::int32_t r = 0; r < 16; ++r) {
    for (std::int32_t g = 0; g < 16; ++g) {
      for (std::int32_t b = 0; b < 16; ++b) {
        const YccPixel y = rct_forward({r, g, b});
        REQUIRE(y.y == oracle_luma({r, g, b}));
        REQUIRE(rct_inverse(y) == RgbPixel{r, g, b});
      }
    }
  }
  std::mt19937 rng(31);
  for (int i = 0; i < 100000; ++i) {
    const RgbPixel p{static_cast<std::int32_t>(rng() & 255),
                     static_cast<std::int32_t>(rng() & 255),
                     static_cast<std::int32_t>(rng() & 255)};
    REQUIRE(rct_inverse(rct_forward(p)) == p);
  }
}

TEST_CASE("luminance survives any inverse") {
  std::mt19937 rng(32);
  for (int i = 0; i < 100000; ++i) {
    const YccPixel q{static_cast<std::int32_t>(rng() % 256),
                     static_cast<std::int32_t>(rng() % 511) - 255,
                     static_cast<std::int32_t>(rng() % 511) - 255};
    REQUIRE(rct_forward(rct_inverse(q)).y == q.y);
  }
}

TEST_CASE("bounded_pixel_decode examples") {
  const TruncationSpec s(8, 4);
  // Y = floor((190 + 400 + 210) / 4) = 200 lies in [192, 207].
  CHECK(bounded_pixel_decode({190, 200, 210}, 12, s) == RgbPixel{190, 200, 210});
  CHECK(bounded_pixel_decode({100, 100, 100}, 12, s) == RgbPixel{192, 192, 192});
  CHECK(bounded_pixel_decode({250, 250, 250}, 12, s) == RgbPixel{207, 207, 207});
  CHECK_THROWS_AS(bounded_pixel_decode({256, 0, 0}, 12, s), DomainError);
  CHECK_THROWS_AS(bounded_pixel_decode({0, 0, 0}, 16, s), DomainError);
}

TEST_CASE("out-of-gamut results keep the bounded luminance") {
  // Pure red has Y = 63. Forcing Y into [192, 207] with the lossy chroma
  // gives g = 129, r = 384, which is out of gamut; clipping r alone would
  // drop Y to 160. The decoder desaturates instead.
  const TruncationSpec s(8, 4);
  const RgbPixel out = bounded_pixel_decode({255, 0, 0}, 12, s);
  CHECK(in_gamut(out, 8));
  CHECK(rct_forward(out).y == 192);
  CHECK(out.r > out.g);
  CHECK(out.g == out.b);
}

TEST_CASE("bounded_pixel_decode properties") {
  std::mt19937 rng(33);
  for (int d : {4, 8, 10}) {
    for (int n = 0; n <= d; ++n) {
      const TruncationSpec spec(d, n);
      for (int i = 0; i < 20000; ++i) {
        const std::int32_t mask = (1 << d) - 1;
        const RgbPixel truth{static_cast<std::int32_t>(rng()) & mask,
                             static_cast<std::int32_t>(rng()) & mask,
                             static_cast<std::int32_t>(rng()) & mask};
        const RgbPixel lossy{static_cast<std::int32_t>(rng()) & mask,
                             static_cast<std::int32_t>(rng()) & mask,
                             static_cast<std::int32_t>(rng()) & mask};
        const auto true_y = static_cast<std::uint32_t>(rct_forward(truth).y);
        const std::uint32_t reduced = truncate(true_y, spec);
        const RgbPixel out = bounded_pixel_decode(lossy, reduced, spec);
        REQUIRE(in_gamut(out, d));
        const auto out_y = static_cast<std::uint32_t>(rct_forward(out).y);
        const auto lossy_y = static_cast<std::uint32_t>(rct_forward(lossy).y);
        REQUIRE(out_y == clamp_decode(lossy_y, reduced, spec));
        REQUIRE(std::abs(static_cast<std::int64_t>(out_y) - true_y) <=
                spec.max_trunc_error());
        if (bounds_of(reduced, spec).contains(lossy_y)) REQUIRE(out == lossy);
      }
    }
  }
}

TEST_CASE("luma_plane") {
  const Image rgb({ImagePlane(2, 1, 8, {255, 0}), ImagePlane(2, 1, 8, {0, 255}),
                   ImagePlane(2, 1, 8, {0, 0})});
  CHECK(luma_plane(rgb) == ImagePlane(2, 1, 8, {63, 127}));
  CHECK_THROWS_AS(luma_plane(Image({ImagePlane(2, 1, 8)})), ShapeError);
}

}  // namespace
}  // namespace cbc
