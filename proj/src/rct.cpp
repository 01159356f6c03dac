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

#include "cbc/rct.hpp"

#include <vector>

#include "cbc/errors.hpp"

namespace cbc {

YccPixel rct_forward(const RgbPixel& p) {
  return {(p.r + 2 * p.g + p.b) >> 2, p.b - p.g, p.r - p.g};
}

RgbPixel rct_inverse(const YccPixel& p) {
  const std::int32_t g = p.y - ((p.cb + p.cr) >> 2);
  return {p.cr + g, g, p.cb + g};
}

namespace {

bool in_gamut(const RgbPixel& p, std::int32_t max) {
  return p.r >= 0 && p.r <= max && p.g >= 0 && p.g <= max && p.b >= 0 &&
         p.b <= max;
}

RgbPixel with_scaled_chroma(std::int32_t y, const YccPixel& c, std::int32_t s) {
  return rct_inverse({y, c.cb * s / 256, c.cr * s / 256});
}

}  // namespace

RgbPixel bounded_pixel_decode(const RgbPixel& lossy, std::uint32_t reduced_y,
                              const TruncationSpec& spec) {
  const std::int32_t max = static_cast<std::int32_t>((1u << spec.source_depth()) - 1);
  if (!in_gamut(lossy, max)) throw DomainError("lossy pixel outside sample range");

  const YccPixel ycc = rct_forward(lossy);
  const auto y = static_cast<std::int32_t>(
      clamp_decode(static_cast<std::uint32_t>(ycc.y), reduced_y, spec));
  if (y == ycc.y) return lossy;

  const RgbPixel direct = rct_inverse({y, ycc.cb, ycc.cr});
  if (in_gamut(direct, max)) return direct;

  // s = 0 gives the grey pixel (y, y, y), which is always in gamut.
  std::int32_t lo = 0;
  std::int32_t hi = 256;
  while (hi - lo > 1) {
    const std::int32_t mid = (lo + hi) / 2;
    if (in_gamut(with_scaled_chroma(y, ycc, mid), max)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return with_scaled_chroma(y, ycc, lo);
}

ImagePlane luma_plane(const Image& rgb) {
  if (rgb.channels() != 3) throw ShapeError("luma_plane needs three channels");
  const ImagePlane& r = rgb.plane(0);
  const ImagePlane& g = rgb.plane(1);
  const ImagePlane& b = rgb.plane(2);
  std::vector<Sample> y(r.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<Sample>(rct_forward({r[i], g[i], b[i]}).y);
  }
  return ImagePlane(rgb.width(), rgb.height(), rgb.depth(), std::move(y));
}

}  // namespace cbc
