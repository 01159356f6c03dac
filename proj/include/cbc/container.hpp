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

#ifndef CBC_CONTAINER_HPP_
#define CBC_CONTAINER_HPP_

// CBC1 container. All multi-byte fields are little-endian.
//
//   offset  size  field
//   0       4     magic "CBC1"
//   4       1     version (1)
//   5       4     width
//   9       4     height
//   13      1     channel count C (1 or 3)
//   14      1     source depth d
//   15      1     colour mode (0 per-channel, 1 RCT luminance)
//   16      C     critical depth n per channel (0 = unbounded); in mode 1
//                 the first byte is n for Y and the rest are 0
//   16+C    1     lossy codec id
//   17+C    1     parameter count P
//   18+C    4P    codec parameters (u32)
//   18+C+4P 8     lossless section length
//   26+C+4P 8     lossy section length
//   34+C+4P       lossless section, then lossy section
//
// The lossless section holds one LP1 stream per bounded plane in channel
// order (just the truncated Y plane in mode 1). The lossy section is the
// codec payload for the original, untruncated image.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cbc/image.hpp"
#include "cbc/lossy.hpp"

namespace cbc {

enum class ColorMode : std::uint8_t {
  kPerChannel = 0,
  kRctLuma = 1,
};

std::string color_mode_name(ColorMode mode);

inline constexpr std::uint8_t kCbc1Version = 1;

struct Cbc1Header {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t channels = 0;
  std::uint8_t source_depth = 0;
  ColorMode color_mode = ColorMode::kPerChannel;
  std::vector<std::uint8_t> critical_depths;  // one per channel
  LossyCodecConfig lossy;
  std::uint64_t lossless_len = 0;
  std::uint64_t lossy_len = 0;

  std::size_t encoded_size() const;
  std::vector<std::uint8_t> serialize() const;

  // Bytes of the image as 8- or 16-bit PNM samples.
  std::uint64_t raw_size() const;

  friend bool operator==(const Cbc1Header&, const Cbc1Header&) = default;
};

struct ParsedContainer {
  Cbc1Header header;
  std::size_t header_size = 0;
  std::span<const std::uint8_t> lossless;
  std::span<const std::uint8_t> lossy;
};

// Parses and validates the header and splits the sections. Throws
// CorruptStreamError on bad magic/version/fields or section lengths that do
// not match the stream size.
ParsedContainer parse_container(std::span<const std::uint8_t> bytes);

struct CompressConfig {
  ColorMode color_mode = ColorMode::kPerChannel;
  // Per-channel mode: one n per channel. RCT mode: exactly one n, for Y.
  std::vector<int> critical_depths;
  LossyCodecConfig lossy;
};

// Throws ConfigError if the config does not fit the image.
void validate_config(const CompressConfig& config, const Image& image);

std::vector<std::uint8_t> compress(const Image& image, const CompressConfig& config);
Image decompress(std::span<const std::uint8_t> bytes);

struct InspectReport {
  Cbc1Header header;
  std::size_t header_bytes = 0;
  std::size_t total_bytes = 0;
  std::uint64_t raw_bytes = 0;

  double ratio() const;           // raw / total file size
  double lossless_ratio() const;  // raw / lossless section (inf if empty)
  double lossy_ratio() const;     // raw / lossy section (inf if empty)

  // One key=value per line, fixed key order.
  std::string to_text() const;
  std::string to_json() const;
};

InspectReport inspect(std::span<const std::uint8_t> bytes);

// Display names of the planes a header's critical depths apply to, e.g.
// {"Y"} in RCT mode, {"R", "G", "B"} or {"GRAY"} per channel.
std::vector<std::string> bounded_channel_names(const Cbc1Header& header);

}  // namespace cbc

#endif  // CBC_CONTAINER_HPP_
