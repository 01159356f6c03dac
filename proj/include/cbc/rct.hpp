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

#ifndef CBC_RCT_HPP_
#define CBC_RCT_HPP_

#include <cstdint>

#include "cbc/bounds.hpp"
#include "cbc/image.hpp"

namespace cbc {

// Reversible colour transform (the integer RGB <-> YCbCr rotation used by
// lossless JPEG 2000):
//   y  = floor((r + 2g + b) / 4)
//   cb = b - g
//   cr = r - g
struct YccPixel {
  std::int32_t y;
  std::int32_t cb;
  std::int32_t cr;

  friend bool operator==(const YccPixel&, const YccPixel&) = default;
};

struct RgbPixel {
  std::int32_t r;
  std::int32_t g;
  std::int32_t b;

  friend bool operator==(const RgbPixel&, const RgbPixel&) = default;
};

YccPixel rct_forward(const RgbPixel& p);
// Exact inverse of rct_forward. Defined on every integer triple, and
// rct_forward(rct_inverse(q)).y == q.y holds for any q.
RgbPixel rct_inverse(const YccPixel& p);

// Replaces the luminance of a lossy pixel with clamp_decode() of it against
// the losslessly coded leading bits and keeps the lossy chroma. If the
// result leaves the [0, 2^d - 1] gamut, chroma is scaled toward zero (by
// the largest s/256, s integer, that fits) so that the bounded luminance is
// preserved exactly. A pixel whose luminance already lies within bounds is
// returned unchanged.
RgbPixel bounded_pixel_decode(const RgbPixel& lossy, std::uint32_t reduced_y,
                              const TruncationSpec& spec);

// Luminance plane of a three-plane RGB image; same depth as the input.
ImagePlane luma_plane(const Image& rgb);

}  // namespace cbc

#endif  // CBC_RCT_HPP_
