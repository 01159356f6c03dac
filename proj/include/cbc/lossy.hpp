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

#ifndef CBC_LOSSY_HPP_
#define CBC_LOSSY_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cbc/image.hpp"

namespace cbc {

enum class CodecId : std::uint8_t {
  kConst = 0,
  kDownsample = 1,
  kHaar = 2,
};

std::string codec_name(CodecId id);

// Codec identifier plus its integer parameters, in header order:
//   CONST       no parameters
//   DOWNSAMPLE  {factor}          factor >= 2
//   HAAR        {levels, step}    levels in 1..6, step >= 1
struct LossyCodecConfig {
  CodecId id = CodecId::kConst;
  std::vector<std::uint32_t> params;

  static LossyCodecConfig constant() { return {CodecId::kConst, {}}; }
  static LossyCodecConfig downsample(std::uint32_t factor) {
    return {CodecId::kDownsample, {factor}};
  }
  static LossyCodecConfig haar(std::uint32_t levels, std::uint32_t step) {
    return {CodecId::kHaar, {levels, step}};
  }

  // Throws ConfigError if the parameters are invalid for the codec.
  void validate() const;

  // e.g. "const", "down:f=4", "haar:q=32,levels=4"
  std::string to_string() const;

  friend bool operator==(const LossyCodecConfig&, const LossyCodecConfig&) = default;
};

// A lossy predictor of the full-depth image. Implementations are stateless.
class LossyCodec {
 public:
  virtual ~LossyCodec() = default;

  virtual std::vector<std::uint8_t> encode(const Image& image) const = 0;

  // Reconstructs an image of exactly the requested geometry and depth.
  // Throws CorruptStreamError if the payload does not decode.
  virtual Image decode(std::span<const std::uint8_t> payload,
                       std::uint32_t width, std::uint32_t height,
                       std::size_t channels, int depth) const = 0;
};

// Validates the config and returns the matching built-in codec.
std::unique_ptr<LossyCodec> make_codec(const LossyCodecConfig& config);

std::vector<std::uint8_t> lossy_encode(const Image& image,
                                       const LossyCodecConfig& config);
Image lossy_decode(std::span<const std::uint8_t> payload,
                   const LossyCodecConfig& config, std::uint32_t width,
                   std::uint32_t height, std::size_t channels, int depth);

// ---------------------------------------------------------------------------
// Building blocks, exposed for testing.

// Round-half-up mean over each factor x factor block (partial edge blocks
// average the pixels they contain).
ImagePlane box_downsample(const ImagePlane& plane, std::uint32_t factor);

// Bilinear interpolation of a block-centre grid back to width x height, in
// exact integer arithmetic with clamp-to-edge.
ImagePlane bilinear_upsample(const ImagePlane& grid, std::uint32_t factor,
                             std::uint32_t width, std::uint32_t height);

struct HaarBands1d {
  std::vector<std::int32_t> approx;
  std::vector<std::int32_t> detail;
};

// Integer S-transform. Odd-length input is extended by repeating its last
// element before pairing.
HaarBands1d haar_forward_1d(std::span<const std::int32_t> x);
// Returns the even-length sequence the bands were computed from.
std::vector<std::int32_t> haar_inverse_1d(std::span<const std::int32_t> approx,
                                          std::span<const std::int32_t> detail);

// Dead-zone quantizer: sign(v) * floor(|v| / step).
std::int32_t quantize_coeff(std::int32_t v, std::uint32_t step);
std::int32_t dequantize_coeff(std::int32_t level, std::uint32_t step);

// Dense 2-D coefficient array.
struct CoeffPlane {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::int32_t> values;

  std::int32_t at(std::uint32_t x, std::uint32_t y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  std::int32_t& at(std::uint32_t x, std::uint32_t y) {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// Subbands of one decomposition level. hl holds horizontal detail with
// vertical lowpass, lh the reverse.
struct HaarLevel {
  CoeffPlane hl;
  CoeffPlane lh;
  CoeffPlane hh;
};

struct HaarPyramid {
  std::vector<HaarLevel> levels;  // finest first
  CoeffPlane ll;
};

HaarPyramid haar_forward_2d(const CoeffPlane& plane, int levels);
CoeffPlane haar_inverse_2d(const HaarPyramid& pyramid, std::uint32_t width,
                           std::uint32_t height);

}  // namespace cbc

#endif  // CBC_LOSSY_HPP_
