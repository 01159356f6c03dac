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

#include "cbc/lossy.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "cbc/bitio.hpp"
#include "cbc/errors.hpp"
#include "cbc/lp1.hpp"

namespace cbc {

std::string codec_name(CodecId id) {
  switch (id) {
    case CodecId::kConst:
      return "const";
    case CodecId::kDownsample:
      return "down";
    case CodecId::kHaar:
      return "haar";
  }
  return "unknown(" + std::to_string(static_cast<int>(id)) + ")";
}

namespace {

constexpr std::uint32_t kMaxDownsampleFactor = 65536;
constexpr std::uint32_t kMaxHaarLevels = 6;

void expect_params(const LossyCodecConfig& c, std::size_t count) {
  if (c.params.size() != count) {
    throw ConfigError(codec_name(c.id) + " codec takes " + std::to_string(count) +
                      " parameter(s), got " + std::to_string(c.params.size()));
  }
}

}  // namespace

void LossyCodecConfig::validate() const {
  switch (id) {
    case CodecId::kConst:
      expect_params(*this, 0);
      return;
    case CodecId::kDownsample:
      expect_params(*this, 1);
      if (params[0] < 2 || params[0] > kMaxDownsampleFactor) {
        throw ConfigError("downsample factor must be in 2.." +
                          std::to_string(kMaxDownsampleFactor) + ", got " +
                          std::to_string(params[0]));
      }
      return;
    case CodecId::kHaar:
      expect_params(*this, 2);
      if (params[0] < 1 || params[0] > kMaxHaarLevels) {
        throw ConfigError("haar levels must be in 1..6, got " +
                          std::to_string(params[0]));
      }
      if (params[1] < 1) throw ConfigError("haar quantizer step must be >= 1");
      return;
  }
  throw ConfigError("unknown codec id " + std::to_string(static_cast<int>(id)));
}

std::string LossyCodecConfig::to_string() const {
  switch (id) {
    case CodecId::kConst:
      return "const";
    case CodecId::kDownsample:
      return "down:f=" + (params.empty() ? std::string("?") : std::to_string(params[0]));
    case CodecId::kHaar:
      if (params.size() != 2) return "haar";
      return "haar:q=" + std::to_string(params[1]) +
             ",levels=" + std::to_string(params[0]);
  }
  return codec_name(id);
}

// ---------------------------------------------------------------------------
// Downsampling

ImagePlane box_downsample(const ImagePlane& plane, std::uint32_t factor) {
  const std::uint32_t gw = (plane.width() + factor - 1) / factor;
  const std::uint32_t gh = (plane.height() + factor - 1) / factor;
  std::vector<Sample> grid(static_cast<std::size_t>(gw) * gh);
  for (std::uint32_t gy = 0; gy < gh; ++gy) {
    const std::uint32_t y1 = std::min(plane.height(), (gy + 1) * factor);
    for (std::uint32_t gx = 0; gx < gw; ++gx) {
      const std::uint32_t x1 = std::min(plane.width(), (gx + 1) * factor);
      std::uint64_t sum = 0;
      std::uint64_t count = 0;
      for (std::uint32_t y = gy * factor; y < y1; ++y) {
        for (std::uint32_t x = gx * factor; x < x1; ++x) {
          sum += plane.at(x, y);
          ++count;
        }
      }
      grid[static_cast<std::size_t>(gy) * gw + gx] =
          static_cast<Sample>((2 * sum + count) / (2 * count));
    }
  }
  return ImagePlane(gw, gh, plane.depth(), std::move(grid));
}

namespace {

// Grid neighbours and fractional weight (out of 2 * factor) along one axis.
struct AxisTap {
  std::uint32_t i0;
  std::uint32_t i1;
  std::int64_t frac;
};

AxisTap axis_tap(std::uint32_t pos, std::uint32_t factor, std::uint32_t grid_size) {
  // Grid sample i sits at output coordinate i * f + (f - 1) / 2, so output
  // pos maps to grid coordinate (2 * pos + 1 - f) / (2 * f).
  const std::int64_t num = 2 * static_cast<std::int64_t>(pos) + 1 - factor;
  const std::int64_t den = 2 * static_cast<std::int64_t>(factor);
  if (num <= 0) return {0, 0, 0};
  const auto i0 = static_cast<std::uint32_t>(num / den);
  if (i0 >= grid_size - 1) return {grid_size - 1, grid_size - 1, 0};
  return {i0, i0 + 1, num % den};
}

}  // namespace

ImagePlane bilinear_upsample(const ImagePlane& grid, std::uint32_t factor,
                             std::uint32_t width, std::uint32_t height) {
  const std::int64_t den = 2 * static_cast<std::int64_t>(factor);
  const std::int64_t den2 = den * den;
  std::vector<AxisTap> xs(width);
  for (std::uint32_t x = 0; x < width; ++x) xs[x] = axis_tap(x, factor, grid.width());

  std::vector<Sample> out(static_cast<std::size_t>(width) * height);
  for (std::uint32_t y = 0; y < height; ++y) {
    const AxisTap ty = axis_tap(y, factor, grid.height());
    const std::int64_t wy1 = ty.frac;
    const std::int64_t wy0 = den - wy1;
    for (std::uint32_t x = 0; x < width; ++x) {
      const AxisTap& tx = xs[x];
      const std::int64_t wx1 = tx.frac;
      const std::int64_t wx0 = den - wx1;
      const std::int64_t top = wx0 * grid.at(tx.i0, ty.i0) + wx1 * grid.at(tx.i1, ty.i0);
      const std::int64_t bottom = wx0 * grid.at(tx.i0, ty.i1) + wx1 * grid.at(tx.i1, ty.i1);
      const std::int64_t num = wy0 * top + wy1 * bottom;
      out[static_cast<std::size_t>(y) * width + x] =
          static_cast<Sample>((num + den2 / 2) / den2);
    }
  }
  return ImagePlane(width, height, grid.depth(), std::move(out));
}

// ---------------------------------------------------------------------------
// Integer Haar

HaarBands1d haar_forward_1d(std::span<const std::int32_t> x) {
  const std::size_t half = (x.size() + 1) / 2;
  HaarBands1d bands;
  bands.approx.resize(half);
  bands.detail.resize(half);
  for (std::size_t i = 0; i < half; ++i) {
    const std::int32_t a = x[2 * i];
    const std::int32_t b = 2 * i + 1 < x.size() ? x[2 * i + 1] : a;
    bands.approx[i] = (a + b) >> 1;
    bands.detail[i] = a - b;
  }
  return bands;
}

std::vector<std::int32_t> haar_inverse_1d(std::span<const std::int32_t> approx,
                                          std::span<const std::int32_t> detail) {
  std::vector<std::int32_t> x(2 * approx.size());
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const std::int32_t a = approx[i] + ((detail[i] + 1) >> 1);
    x[2 * i] = a;
    x[2 * i + 1] = a - detail[i];
  }
  return x;
}

std::int32_t quantize_coeff(std::int32_t v, std::uint32_t step) {
  const std::uint32_t mag =
      static_cast<std::uint32_t>(std::abs(static_cast<std::int64_t>(v))) / step;
  return v < 0 ? -static_cast<std::int32_t>(mag) : static_cast<std::int32_t>(mag);
}

std::int32_t dequantize_coeff(std::int32_t level, std::uint32_t step) {
  return static_cast<std::int32_t>(static_cast<std::int64_t>(level) * step);
}

namespace {

CoeffPlane make_coeffs(std::uint32_t w, std::uint32_t h) {
  return {w, h, std::vector<std::int32_t>(static_cast<std::size_t>(w) * h)};
}

struct LevelShape {
  std::uint32_t width;
  std::uint32_t height;
};

// Dimensions of the lowpass input at each level, finest first.
std::vector<LevelShape> level_shapes(std::uint32_t width, std::uint32_t height,
                                     int levels) {
  std::vector<LevelShape> shapes;
  for (int l = 0; l < levels; ++l) {
    shapes.push_back({width, height});
    width = (width + 1) / 2;
    height = (height + 1) / 2;
  }
  shapes.push_back({width, height});
  return shapes;
}

// Column transform of an array of `rows` rows; returns (low, high).
std::pair<CoeffPlane, CoeffPlane> forward_columns(const CoeffPlane& in) {
  const std::uint32_t half = (in.height + 1) / 2;
  CoeffPlane low = make_coeffs(in.width, half);
  CoeffPlane high = make_coeffs(in.width, half);
  std::vector<std::int32_t> column(in.height);
  for (std::uint32_t x = 0; x < in.width; ++x) {
    for (std::uint32_t y = 0; y < in.height; ++y) column[y] = in.at(x, y);
    const HaarBands1d b = haar_forward_1d(column);
    for (std::uint32_t y = 0; y < half; ++y) {
      low.at(x, y) = b.approx[y];
      high.at(x, y) = b.detail[y];
    }
  }
  return {std::move(low), std::move(high)};
}

CoeffPlane inverse_columns(const CoeffPlane& low, const CoeffPlane& high,
                           std::uint32_t height) {
  CoeffPlane out = make_coeffs(low.width, height);
  std::vector<std::int32_t> a(low.height);
  std::vector<std::int32_t> d(low.height);
  for (std::uint32_t x = 0; x < low.width; ++x) {
    for (std::uint32_t y = 0; y < low.height; ++y) {
      a[y] = low.at(x, y);
      d[y] = high.at(x, y);
    }
    const std::vector<std::int32_t> column = haar_inverse_1d(a, d);
    for (std::uint32_t y = 0; y < height; ++y) out.at(x, y) = column[y];
  }
  return out;
}

}  // namespace

HaarPyramid haar_forward_2d(const CoeffPlane& plane, int levels) {
  HaarPyramid pyramid;
  CoeffPlane current = plane;
  for (int l = 0; l < levels; ++l) {
    const std::uint32_t half_w = (current.width + 1) / 2;
    CoeffPlane row_low = make_coeffs(half_w, current.height);
    CoeffPlane row_high = make_coeffs(half_w, current.height);
    for (std::uint32_t y = 0; y < current.height; ++y) {
      const std::span<const std::int32_t> row(
          current.values.data() + static_cast<std::size_t>(y) * current.width,
          current.width);
      const HaarBands1d b = haar_forward_1d(row);
      for (std::uint32_t x = 0; x < half_w; ++x) {
        row_low.at(x, y) = b.approx[x];
        row_high.at(x, y) = b.detail[x];
      }
    }
    auto [ll, lh] = forward_columns(row_low);
    auto [hl, hh] = forward_columns(row_high);
    pyramid.levels.push_back({std::move(hl), std::move(lh), std::move(hh)});
    current = std::move(ll);
  }
  pyramid.ll = std::move(current);
  return pyramid;
}

CoeffPlane haar_inverse_2d(const HaarPyramid& pyramid, std::uint32_t width,
                           std::uint32_t height) {
  const int levels = static_cast<int>(pyramid.levels.size());
  const std::vector<LevelShape> shapes = level_shapes(width, height, levels);
  CoeffPlane current = pyramid.ll;
  for (int l = levels - 1; l >= 0; --l) {
    const HaarLevel& level = pyramid.levels[l];
    const LevelShape shape = shapes[l];
    const CoeffPlane row_low = inverse_columns(current, level.lh, shape.height);
    const CoeffPlane row_high = inverse_columns(level.hl, level.hh, shape.height);
    CoeffPlane out = make_coeffs(shape.width, shape.height);
    std::vector<std::int32_t> a(row_low.width);
    std::vector<std::int32_t> d(row_low.width);
    for (std::uint32_t y = 0; y < shape.height; ++y) {
      for (std::uint32_t x = 0; x < row_low.width; ++x) {
        a[x] = row_low.at(x, y);
        d[x] = row_high.at(x, y);
      }
      const std::vector<std::int32_t> row = haar_inverse_1d(a, d);
      std::copy_n(row.begin(), shape.width,
                  out.values.begin() + static_cast<std::ptrdiff_t>(y) * shape.width);
    }
    current = std::move(out);
  }
  return current;
}

namespace {

// ---------------------------------------------------------------------------
// Built-in codecs

class ConstCodec final : public LossyCodec {
 public:
  std::vector<std::uint8_t> encode(const Image&) const override { return {}; }

  Image decode(std::span<const std::uint8_t> payload, std::uint32_t width,
               std::uint32_t height, std::size_t channels,
               int depth) const override {
    if (!payload.empty()) {
      throw CorruptStreamError("const codec payload must be empty", 0);
    }
    const std::vector<Sample> mid(static_cast<std::size_t>(width) * height,
                                  static_cast<Sample>(1u << (depth - 1)));
    std::vector<ImagePlane> planes;
    for (std::size_t c = 0; c < channels; ++c) {
      planes.emplace_back(width, height, depth, mid);
    }
    return Image(std::move(planes));
  }
};

class DownsampleCodec final : public LossyCodec {
 public:
  explicit DownsampleCodec(std::uint32_t factor) : factor_(factor) {}

  std::vector<std::uint8_t> encode(const Image& image) const override {
    std::vector<std::uint8_t> out;
    for (const ImagePlane& p : image.planes()) {
      const std::vector<std::uint8_t> bytes = lp1_encode(box_downsample(p, factor_));
      out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
  }

  Image decode(std::span<const std::uint8_t> payload, std::uint32_t width,
               std::uint32_t height, std::size_t channels,
               int depth) const override {
    const std::uint32_t gw = (width + factor_ - 1) / factor_;
    const std::uint32_t gh = (height + factor_ - 1) / factor_;
    std::vector<ImagePlane> planes;
    std::size_t offset = 0;
    for (std::size_t c = 0; c < channels; ++c) {
      Lp1Prefix grid = lp1_decode_prefix(payload.subspan(offset), gw, gh, depth, offset);
      offset += grid.consumed;
      planes.push_back(bilinear_upsample(grid.plane, factor_, width, height));
    }
    if (offset != payload.size()) {
      throw CorruptStreamError("trailing bytes in downsample payload", offset);
    }
    return Image(std::move(planes));
  }

 private:
  std::uint32_t factor_;
};

class HaarCodec final : public LossyCodec {
 public:
  HaarCodec(int levels, std::uint32_t step) : levels_(levels), step_(step) {}

  std::vector<std::uint8_t> encode(const Image& image) const override {
    std::vector<std::uint8_t> out;
    for (const ImagePlane& p : image.planes()) {
      CoeffPlane coeffs = make_coeffs(p.width(), p.height());
      std::copy(p.samples().begin(), p.samples().end(), coeffs.values.begin());
      const HaarPyramid pyramid = haar_forward_2d(coeffs, levels_);

      BitWriter bits;
      for (const HaarLevel& level : pyramid.levels) {
        for (const CoeffPlane* band : {&level.hl, &level.lh, &level.hh}) {
          write_band(*band, step_, bits);
        }
      }
      write_band(pyramid.ll, 1, bits);
      const std::vector<std::uint8_t> bytes = bits.finish();
      out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
  }

  Image decode(std::span<const std::uint8_t> payload, std::uint32_t width,
               std::uint32_t height, std::size_t channels,
               int depth) const override {
    const std::vector<LevelShape> shapes = level_shapes(width, height, levels_);
    // No honest coefficient reaches this magnitude at any level.
    const std::int64_t limit = std::int64_t{1} << (depth + 1);
    const std::int32_t max_sample = static_cast<std::int32_t>((1u << depth) - 1);

    std::vector<ImagePlane> planes;
    std::size_t offset = 0;
    for (std::size_t c = 0; c < channels; ++c) {
      BitReader bits(payload.subspan(offset), offset);
      HaarPyramid pyramid;
      for (int l = 0; l < levels_; ++l) {
        const std::uint32_t w = (shapes[l].width + 1) / 2;
        const std::uint32_t h = (shapes[l].height + 1) / 2;
        HaarLevel level;
        level.hl = read_band(bits, w, h, step_, limit);
        level.lh = read_band(bits, w, h, step_, limit);
        level.hh = read_band(bits, w, h, step_, limit);
        pyramid.levels.push_back(std::move(level));
      }
      pyramid.ll = read_band(bits, shapes.back().width, shapes.back().height, 1, limit);
      bits.align();
      offset += bits.byte_position();

      const CoeffPlane rec = haar_inverse_2d(pyramid, width, height);
      std::vector<Sample> samples(rec.values.size());
      for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i] = static_cast<Sample>(std::clamp(rec.values[i], 0, max_sample));
      }
      planes.emplace_back(width, height, depth, std::move(samples));
    }
    if (offset != payload.size()) {
      throw CorruptStreamError("trailing bytes in haar payload", offset);
    }
    return Image(std::move(planes));
  }

 private:
  static void write_band(const CoeffPlane& band, std::uint32_t step, BitWriter& out) {
    std::vector<std::uint32_t> symbols(band.values.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      symbols[i] = zigzag(quantize_coeff(band.values[i], step));
    }
    encode_rice_blocks(symbols, out);
  }

  static CoeffPlane read_band(BitReader& in, std::uint32_t w, std::uint32_t h,
                              std::uint32_t step, std::int64_t limit) {
    if (static_cast<std::size_t>(w) * h > kMaxPlaneSamples) {
      throw CorruptStreamError("haar band too large", in.error_offset());
    }
    CoeffPlane band = make_coeffs(w, h);
    const std::vector<std::uint32_t> symbols = decode_rice_blocks(in, band.values.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      const std::int64_t v = static_cast<std::int64_t>(unzigzag(symbols[i])) * step;
      if (v <= -limit || v >= limit) {
        throw CorruptStreamError("haar coefficient out of range", in.error_offset());
      }
      band.values[i] = static_cast<std::int32_t>(v);
    }
    return band;
  }

  int levels_;
  std::uint32_t step_;
};

}  // namespace

std::unique_ptr<LossyCodec> make_codec(const LossyCodecConfig& config) {
  config.validate();
  switch (config.id) {
    case CodecId::kConst:
      return std::make_unique<ConstCodec>();
    case CodecId::kDownsample:
      return std::make_unique<DownsampleCodec>(config.params[0]);
    case CodecId::kHaar:
      return std::make_unique<HaarCodec>(static_cast<int>(config.params[0]),
                                         config.params[1]);
  }
  throw ConfigError("unknown codec");
}

std::vector<std::uint8_t> lossy_encode(const Image& image,
                                       const LossyCodecConfig& config) {
  return make_codec(config)->encode(image);
}

Image lossy_decode(std::span<const std::uint8_t> payload,
                   const LossyCodecConfig& config, std::uint32_t width,
                   std::uint32_t height, std::size_t channels, int depth) {
  return make_codec(config)->decode(payload, width, height, channels, depth);
}

}  // namespace cbc
