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

#include "cbc/container.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <limits>
#include <utility>

#include <json.hpp>

#include "cbc/bounds.hpp"
#include "cbc/errors.hpp"
#include "cbc/lp1.hpp"
#include "cbc/rct.hpp"

namespace cbc {

namespace {

constexpr std::uint8_t kMagic[4] = {'C', 'B', 'C', '1'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class ByteCursor {
 public:
  explicit ByteCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }

 private:
  std::uint64_t take(std::size_t n) {
    if (bytes_.size() - pos_ < n) {
      throw CorruptStreamError("truncated CBC1 header", pos_);
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += n;
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::string format_ratio(double r) {
  if (r == std::numeric_limits<double>::infinity()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r);
  return buf;
}

double safe_ratio(std::uint64_t raw, std::uint64_t size) {
  if (size == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(raw) / static_cast<double>(size);
}

}  // namespace

std::string color_mode_name(ColorMode mode) {
  switch (mode) {
    case ColorMode::kPerChannel:
      return "none";
    case ColorMode::kRctLuma:
      return "rct";
  }
  return "unknown";
}

std::size_t Cbc1Header::encoded_size() const {
  return 34 + channels + 4 * lossy.params.size();
}

std::uint64_t Cbc1Header::raw_size() const {
  const std::uint64_t bytes_per_sample = source_depth > 8 ? 2 : 1;
  return std::uint64_t{width} * height * channels * bytes_per_sample;
}

std::vector<std::uint8_t> Cbc1Header::serialize() const {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.reserve(encoded_size());
  out.push_back(kCbc1Version);
  put_u32(out, width);
  put_u32(out, height);
  out.push_back(channels);
  out.push_back(source_depth);
  out.push_back(static_cast<std::uint8_t>(color_mode));
  out.insert(out.end(), critical_depths.begin(), critical_depths.end());
  out.push_back(static_cast<std::uint8_t>(lossy.id));
  out.push_back(static_cast<std::uint8_t>(lossy.params.size()));
  for (std::uint32_t p : lossy.params) put_u32(out, p);
  put_u64(out, lossless_len);
  put_u64(out, lossy_len);
  return out;
}

ParsedContainer parse_container(std::span<const std::uint8_t> bytes) {
  ByteCursor in(bytes);
  if (bytes.size() < 4 || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw CorruptStreamError("bad magic, not a CBC1 stream", 0);
  }
  in.u32();

  ParsedContainer parsed;
  Cbc1Header& h = parsed.header;
  const std::uint8_t version = in.u8();
  if (version != kCbc1Version) {
    throw CorruptStreamError("unsupported CBC1 version " + std::to_string(version), 4);
  }
  h.width = in.u32();
  h.height = in.u32();
  if (h.width == 0 || h.height == 0) {
    throw CorruptStreamError("zero image dimension", 5);
  }
  if (std::uint64_t{h.width} * h.height > kMaxPlaneSamples) {
    throw CorruptStreamError("image dimensions too large", 5);
  }
  h.channels = in.u8();
  if (h.channels != 1 && h.channels != 3) {
    throw CorruptStreamError("channel count must be 1 or 3", 13);
  }
  h.source_depth = in.u8();
  if (h.source_depth < 1 || h.source_depth > kMaxDepth) {
    throw CorruptStreamError("source depth outside 1..16", 14);
  }
  const std::uint8_t mode = in.u8();
  if (mode > 1) throw CorruptStreamError("unknown colour mode", 15);
  h.color_mode = static_cast<ColorMode>(mode);
  if (h.color_mode == ColorMode::kRctLuma && h.channels != 3) {
    throw CorruptStreamError("RCT colour mode requires three channels", 15);
  }
  for (std::uint8_t c = 0; c < h.channels; ++c) {
    const std::size_t at = in.pos();
    const std::uint8_t n = in.u8();
    if (n > h.source_depth) {
      throw CorruptStreamError("critical depth exceeds source depth", at);
    }
    if (h.color_mode == ColorMode::kRctLuma && c > 0 && n != 0) {
      throw CorruptStreamError("RCT mode bounds only the Y plane", at);
    }
    h.critical_depths.push_back(n);
  }
  const std::size_t codec_at = in.pos();
  h.lossy.id = static_cast<CodecId>(in.u8());
  const std::uint8_t param_count = in.u8();
  for (std::uint8_t i = 0; i < param_count; ++i) h.lossy.params.push_back(in.u32());
  try {
    h.lossy.validate();
  } catch (const ConfigError& e) {
    throw CorruptStreamError(std::string("invalid codec config: ") + e.what(), codec_at);
  }
  const std::size_t lengths_at = in.pos();
  h.lossless_len = in.u64();
  h.lossy_len = in.u64();
  parsed.header_size = in.pos();

  const std::uint64_t body = bytes.size() - parsed.header_size;
  if (h.lossless_len > body || h.lossy_len != body - h.lossless_len) {
    throw CorruptStreamError("section lengths do not match stream size (" +
                                 std::to_string(body) + " body bytes)",
                             lengths_at);
  }
  parsed.lossless = bytes.subspan(parsed.header_size, h.lossless_len);
  parsed.lossy = bytes.subspan(parsed.header_size + h.lossless_len, h.lossy_len);
  return parsed;
}

void validate_config(const CompressConfig& config, const Image& image) {
  config.lossy.validate();
  const std::size_t expected =
      config.color_mode == ColorMode::kRctLuma ? 1 : image.channels();
  if (config.color_mode == ColorMode::kRctLuma && image.channels() != 3) {
    throw ConfigError("RCT colour mode requires an RGB image");
  }
  if (image.channels() != 1 && image.channels() != 3) {
    throw ConfigError("images must have 1 or 3 channels");
  }
  if (image.depth() < 1) throw ConfigError("image depth must be at least 1");
  if (config.critical_depths.size() != expected) {
    throw ConfigError("expected " + std::to_string(expected) +
                      " critical depth(s), got " +
                      std::to_string(config.critical_depths.size()));
  }
  for (int n : config.critical_depths) {
    if (n < 0 || n > image.depth()) {
      throw ConfigError("critical depth " + std::to_string(n) + " outside 0.." +
                        std::to_string(image.depth()));
    }
  }
}

std::vector<std::uint8_t> compress(const Image& image, const CompressConfig& config) {
  validate_config(config, image);
  const int d = image.depth();

  Cbc1Header h;
  h.width = image.width();
  h.height = image.height();
  h.channels = static_cast<std::uint8_t>(image.channels());
  h.source_depth = static_cast<std::uint8_t>(d);
  h.color_mode = config.color_mode;
  h.critical_depths.assign(image.channels(), 0);
  for (std::size_t i = 0; i < config.critical_depths.size(); ++i) {
    h.critical_depths[i] = static_cast<std::uint8_t>(config.critical_depths[i]);
  }
  h.lossy = config.lossy;

  std::vector<std::uint8_t> lossless;
  auto append_bounded = [&](const ImagePlane& plane, int n) {
    if (n == 0) return;
    const std::vector<std::uint8_t> code = lp1_encode(truncate_plane(plane, TruncationSpec(d, n)));
    lossless.insert(lossless.end(), code.begin(), code.end());
  };
  if (config.color_mode == ColorMode::kRctLuma) {
    append_bounded(luma_plane(image), config.critical_depths[0]);
  } else {
    for (std::size_t c = 0; c < image.channels(); ++c) {
      append_bounded(image.plane(c), config.critical_depths[c]);
    }
  }

  const std::vector<std::uint8_t> lossy = lossy_encode(image, config.lossy);
  h.lossless_len = lossless.size();
  h.lossy_len = lossy.size();

  std::vector<std::uint8_t> out = h.serialize();
  out.reserve(out.size() + lossless.size() + lossy.size());
  out.insert(out.end(), lossless.begin(), lossless.end());
  out.insert(out.end(), lossy.begin(), lossy.end());
  return out;
}

Image decompress(std::span<const std::uint8_t> bytes) {
  const ParsedContainer parsed = parse_container(bytes);
  const Cbc1Header& h = parsed.header;
  const int d = h.source_depth;

  std::vector<std::pair<std::size_t, ImagePlane>> reduced;  // (channel, plane)
  std::size_t offset = 0;
  const std::size_t bounded = h.color_mode == ColorMode::kRctLuma ? 1 : h.channels;
  for (std::size_t c = 0; c < bounded; ++c) {
    const int n = h.critical_depths[c];
    if (n == 0) continue;
    Lp1Prefix p = lp1_decode_prefix(parsed.lossless.subspan(offset), h.width,
                                    h.height, n, parsed.header_size + offset);
    offset += p.consumed;
    reduced.emplace_back(c, std::move(p.plane));
  }
  if (offset != parsed.lossless.size()) {
    throw CorruptStreamError("trailing bytes in lossless section",
                             parsed.header_size + offset);
  }

  const std::size_t lossy_at = parsed.header_size + parsed.lossless.size();
  Image lossy = [&] {
    try {
      return lossy_decode(parsed.lossy, h.lossy, h.width, h.height, h.channels, d);
    } catch (const CorruptStreamError& e) {
      throw CorruptStreamError(std::string("lossy section: ") + e.what(),
                               lossy_at + e.offset());
    }
  }();

  if (h.color_mode == ColorMode::kPerChannel) {
    std::vector<ImagePlane> planes = lossy.planes();
    for (const auto& [c, plane] : reduced) {
      planes[c] = clamp_decode_plane(lossy.plane(c), plane,
                                     TruncationSpec(d, h.critical_depths[c]));
    }
    return Image(std::move(planes));
  }

  if (reduced.empty()) return lossy;
  const TruncationSpec spec(d, h.critical_depths[0]);
  const ImagePlane& ry = reduced.front().second;
  std::vector<ImagePlane> planes = lossy.planes();
  for (std::size_t i = 0; i < ry.size(); ++i) {
    const RgbPixel out = bounded_pixel_decode(
        {lossy.plane(0)[i], lossy.plane(1)[i], lossy.plane(2)[i]}, ry[i], spec);
    planes[0].set(i, static_cast<std::uint32_t>(out.r));
    planes[1].set(i, static_cast<std::uint32_t>(out.g));
    planes[2].set(i, static_cast<std::uint32_t>(out.b));
  }
  return Image(std::move(planes));
}

std::vector<std::string> bounded_channel_names(const Cbc1Header& header) {
  if (header.color_mode == ColorMode::kRctLuma) return {"Y"};
  if (header.channels == 3) return {"R", "G", "B"};
  return {"GRAY"};
}

double InspectReport::ratio() const { return safe_ratio(raw_bytes, total_bytes); }

double InspectReport::lossless_ratio() const {
  return safe_ratio(raw_bytes, header.lossless_len);
}

double InspectReport::lossy_ratio() const {
  return safe_ratio(raw_bytes, header.lossy_len);
}

std::string InspectReport::to_text() const {
  std::string s;
  auto line = [&s](const std::string& key, const std::string& value) {
    s += key + "=" + value + "\n";
  };
  line("format", "CBC1");
  line("version", std::to_string(kCbc1Version));
  line("width", std::to_string(header.width));
  line("height", std::to_string(header.height));
  line("channels", std::to_string(header.channels));
  line("d", std::to_string(header.source_depth));
  line("color_mode", color_mode_name(header.color_mode));
  const std::vector<std::string> names = bounded_channel_names(header);
  for (std::size_t i = 0; i < names.size(); ++i) {
    line("n[" + names[i] + "]", std::to_string(header.critical_depths[i]));
  }
  line("lossy_codec", header.lossy.to_string());
  line("header_bytes", std::to_string(header_bytes));
  line("lossless_bytes", std::to_string(header.lossless_len));
  line("lossy_bytes", std::to_string(header.lossy_len));
  line("total_bytes", std::to_string(total_bytes));
  line("raw_bytes", std::to_string(raw_bytes));
  line("ratio", format_ratio(ratio()));
  line("lossless_ratio", format_ratio(lossless_ratio()));
  line("lossy_ratio", format_ratio(lossy_ratio()));
  return s;
}

std::string InspectReport::to_json() const {
  auto ratio_value = [](double r) -> nlohmann::ordered_json {
    if (r == std::numeric_limits<double>::infinity()) return "inf";
    return r;
  };
  nlohmann::ordered_json j;
  j["format"] = "CBC1";
  j["version"] = kCbc1Version;
  j["width"] = header.width;
  j["height"] = header.height;
  j["channels"] = header.channels;
  j["d"] = header.source_depth;
  j["color_mode"] = color_mode_name(header.color_mode);
  nlohmann::ordered_json n = nlohmann::ordered_json::object();
  const std::vector<std::string> names = bounded_channel_names(header);
  for (std::size_t i = 0; i < names.size(); ++i) n[names[i]] = header.critical_depths[i];
  j["n"] = n;
  j["lossy_codec"] = header.lossy.to_string();
  j["header_bytes"] = header_bytes;
  j["lossless_bytes"] = header.lossless_len;
  j["lossy_bytes"] = header.lossy_len;
  j["total_bytes"] = total_bytes;
  j["raw_bytes"] = raw_bytes;
  j["ratio"] = ratio_value(ratio());
  j["lossless_ratio"] = ratio_value(lossless_ratio());
  j["lossy_ratio"] = ratio_value(lossy_ratio());
  return j.dump();
}

InspectReport inspect(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw CorruptStreamError("empty stream", 0);
  const ParsedContainer parsed = parse_container(bytes);
  InspectReport r;
  r.header = parsed.header;
  r.header_bytes = parsed.header_size;
  r.total_bytes = bytes.size();
  r.raw_bytes = parsed.header.raw_size();
  return r;
}

}  // namespace cbc
