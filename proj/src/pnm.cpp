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

#include "cbc/pnm.hpp"

#include <string>

#include "cbc/errors.hpp"

namespace cbc {

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderScanner {
 public:
  HeaderScanner(std::span<const std::uint8_t> bytes, std::size_t pos)
      : bytes_(bytes), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  // Offset of the first digit of the last number read.
  std::size_t last_start() const { return last_start_; }

  // Skips whitespace and comments, then reads an unsigned decimal.
  std::uint64_t number(const char* what) {
    skip_separators();
    const std::size_t start = pos_;
    last_start_ = start;
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > 0xFFFFFFFFu) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(std::string("expected ") + what, start);
    }
    return v;
  }

  // The single whitespace byte that separates maxval from the raster.
  void raster_separator() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw ParseError("expected whitespace after maxval", pos_);
    }
    ++pos_;
  }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
  std::size_t last_start_ = 0;
};

}  // namespace

Image read_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw ParseError("not a binary PGM/PPM (expected P5 or P6)", 0);
  }
  const std::size_t channels = bytes[1] == '5' ? 1 : 3;
  HeaderScanner scan(bytes, 2);
  const std::uint64_t width = scan.number("width");
  const std::size_t width_at = scan.last_start();
  const std::uint64_t height = scan.number("height");
  if (width == 0 || height == 0) throw ParseError("zero image dimension", width_at);
  if (width * height > kMaxPlaneSamples) throw ParseError("image too large", width_at);
  const std::uint64_t maxval = scan.number("maxval");
  if (maxval != 255 && maxval != 65535) {
    throw ParseError("maxval " + std::to_string(maxval) + " unsupported (need 255 or 65535)",
                     scan.last_start());
  }
  scan.raster_separator();

  const std::size_t start = scan.pos();
  const int depth = maxval == 255 ? 8 : 16;
  const std::size_t bps = depth / 8;
  const std::size_t pixels = static_cast<std::size_t>(width * height);
  const std::size_t need = pixels * channels * bps;
  if (bytes.size() - start < need) {
    throw ParseError("short pixel data: need " + std::to_string(need) + " bytes, have " +
                         std::to_string(bytes.size() - start),
                     bytes.size());
  }

  std::vector<std::vector<Sample>> planes(channels, std::vector<Sample>(pixels));
  const std::uint8_t* p = bytes.data() + start;
  for (std::size_t i = 0; i < pixels; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      planes[c][i] = bps == 1 ? p[0] : static_cast<Sample>((p[0] << 8) | p[1]);
      p += bps;
    }
  }
  std::vector<ImagePlane> out;
  for (auto& samples : planes) {
    out.emplace_back(static_cast<std::uint32_t>(width), static_cast<std::uint32_t>(height),
                     depth, std::move(samples));
  }
  return Image(std::move(out));
}

std::vector<std::uint8_t> write_pnm(const Image& image) {
  if (image.depth() != 8 && image.depth() != 16) {
    throw ConfigError("PNM output needs depth 8 or 16, got " + std::to_string(image.depth()));
  }
  if (image.channels() != 1 && image.channels() != 3) {
    throw ConfigError("PNM output needs 1 or 3 channels");
  }
  const bool wide = image.depth() == 16;
  const std::string header = std::string(image.channels() == 1 ? "P5 " : "P6 ") +
                             std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + " " +
                             (wide ? "65535" : "255") + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const std::size_t pixels = image.plane(0).size();
  out.reserve(out.size() + pixels * image.channels() * (wide ? 2 : 1));
  for (std::size_t i = 0; i < pixels; ++i) {
    for (const ImagePlane& plane : image.planes()) {
      const Sample s = plane[i];
      if (wide) out.push_back(static_cast<std::uint8_t>(s >> 8));
      out.push_back(static_cast<std::uint8_t>(s));
    }
  }
  return out;
}

}  // namespace cbc
