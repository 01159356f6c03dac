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

#include "cbc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cbc/errors.hpp"
#include "cbc/metrics.hpp"
#include "cbc/pnm.hpp"

namespace cbc::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path);
  return bytes;
}

// Writes next to the destination and renames, so a failed run never leaves
// a partial file behind.
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  const std::string tmp = path + ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw IoError("error writing " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::pair<std::string_view, std::string_view> key_value(std::string_view item) {
  const std::size_t eq = item.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("expected key=value, got '" + std::string(item) + "'");
  }
  return {item.substr(0, eq), item.substr(eq + 1)};
}

}  // namespace

LossyCodecConfig parse_codec_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<std::pair<std::string_view, std::string_view>> args;
  if (colon != std::string_view::npos) {
    for (std::string_view item : split(spec.substr(colon + 1), ',')) {
      args.push_back(key_value(item));
    }
  }
  auto take = [&](std::string_view key, std::uint32_t fallback) {
    std::optional<std::uint32_t> found;
    for (const auto& [k, v] : args) {
      if (k != key) continue;
      if (found) throw ConfigError("duplicate codec parameter '" + std::string(k) + "'");
      found = parse_uint(v, k);
    }
    return found.value_or(fallback);
  };
  auto only = [&](std::initializer_list<std::string_view> keys) {
    for (const auto& [k, v] : args) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        throw ConfigError("unknown parameter '" + std::string(k) + "' for codec " +
                          std::string(name));
      }
    }
  };

  LossyCodecConfig config;
  if (name == "const") {
    only({});
    config = LossyCodecConfig::constant();
  } else if (name == "down") {
    only({"f"});
    config = LossyCodecConfig::downsample(take("f", 4));
  } else if (name == "haar") {
    only({"q", "levels"});
    config = LossyCodecConfig::haar(take("levels", 4), take("q", 32));
  } else {
    throw ConfigError("unknown lossy codec '" + std::string(name) + "'");
  }
  config.validate();
  return config;
}

std::vector<int> parse_critical_depth(std::string_view spec, ColorMode mode,
                                      std::size_t channels, int depth) {
  std::vector<std::string> names;
  if (mode == ColorMode::kRctLuma) {
    names = {"Y"};
  } else if (channels == 3) {
    names = {"R", "G", "B"};
  } else {
    names = {"GRAY"};
  }

  auto check = [depth](std::uint32_t n) {
    if (n > static_cast<std::uint32_t>(depth)) {
      throw ConfigError("critical depth " + std::to_string(n) + " exceeds source depth " +
                        std::to_string(depth));
    }
    return static_cast<int>(n);
  };

  if (spec.find('=') == std::string_view::npos) {
    return std::vector<int>(names.size(), check(parse_uint(spec, "critical depth")));
  }
  std::vector<int> depths(names.size(), 0);
  std::vector<bool> seen(names.size(), false);
  for (std::string_view item : split(spec, ',')) {
    const auto [key, value] = key_value(item);
    const auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) {
      throw ConfigError("unknown plane '" + std::string(key) + "' in critical depth");
    }
    const auto idx = static_cast<std::size_t>(it - names.begin());
    if (seen[idx]) throw ConfigError("plane '" + std::string(key) + "' given twice");
    seen[idx] = true;
    depths[idx] = check(parse_uint(value, key));
  }
  return depths;
}

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string color = "none";
  std::string critical_depth;
  std::string lossy = "haar:q=32,levels=4";
  std::string original;
  std::string compressed;
  std::string a;
  std::string b;
  bool json = false;
};

int cmd_compress(const Options& o, std::ostream& out) {
  const Image image = read_pnm(read_file(o.input));
  CompressConfig config;
  config.color_mode = o.color == "rct" ? ColorMode::kRctLuma : ColorMode::kPerChannel;
  if (o.critical_depth.empty()) {
    const std::size_t planes =
        config.color_mode == ColorMode::kRctLuma ? 1 : image.channels();
    config.critical_depths.assign(planes, std::min(4, image.depth()));
  } else {
    config.critical_depths = parse_critical_depth(o.critical_depth, config.color_mode,
                                                  image.channels(), image.depth());
  }
  config.lossy = parse_codec_spec(o.lossy);
  const std::vector<std::uint8_t> bytes = compress(image, config);
  write_file(o.output, bytes);
  out << inspect(bytes).to_text();
  return kExitOk;
}

int cmd_decompress(const Options& o, std::ostream& out) {
  const Image image = decompress(read_file(o.input));
  const std::vector<std::uint8_t> pnm = write_pnm(image);
  write_file(o.output, pnm);
  out << "width=" << image.width() << "\nheight=" << image.height()
      << "\nchannels=" << image.channels() << "\nd=" << image.depth()
      << "\noutput_bytes=" << pnm.size() << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Image original = read_pnm(read_file(o.original));
  const std::vector<std::uint8_t> bytes = read_file(o.compressed);
  const InspectReport info = inspect(bytes);
  const Image decoded = decompress(bytes);
  MetricsReport report = compute_metrics(original, decoded, original.depth());
  report.bound_violations = verify_bounds(original, decoded, info.header);
  report.compression_ratio = info.ratio();
  out << (o.json ? report.to_json() + "\n" : report.to_text());
  return *report.bound_violations == 0 ? kExitOk : kExitBoundViolation;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const Image a = read_pnm(read_file(o.a));
  const Image b = read_pnm(read_file(o.b));
  if (a.depth() != b.depth()) throw ShapeError("images differ in bit depth");
  const MetricsReport report = compute_metrics(a, b, a.depth());
  out << (o.json ? report.to_json() + "\n" : report.to_text());
  return kExitOk;
}

int cmd_inspect(const Options& o, std::ostream& out) {
  const InspectReport report = inspect(read_file(o.input));
  out << (o.json ? report.to_json() + "\n" : report.to_text());
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-error lossy image compression", "cbc"};
  app.require_subcommand(1);
  Options o;

  CLI::App* compress_cmd = app.add_subcommand("compress", "Compress a PNM image to CBC1");
  compress_cmd->add_option("--input", o.input, "Input PGM/PPM")->required();
  compress_cmd->add_option("--output", o.output, "Output CBC1 file")->required();
  compress_cmd->add_option("--color", o.color, "Colour mode")
      ->check(CLI::IsMember({"rct", "none"}));
  compress_cmd->add_option("--critical-depth", o.critical_depth,
                           "Leading bits kept losslessly: 4, Y=4, R=4,G=4,B=4");
  compress_cmd->add_option("--lossy", o.lossy, "const | down:f=F | haar:q=Q,levels=L");

  CLI::App* decompress_cmd = app.add_subcommand("decompress", "Decode CBC1 to PNM");
  decompress_cmd->add_option("--input", o.input, "Input CBC1 file")->required();
  decompress_cmd->add_option("--output", o.output, "Output PGM/PPM")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Decode and certify the per-sample error bounds");
  verify_cmd->add_option("--original", o.original, "Original PGM/PPM")->required();
  verify_cmd->add_option("--compressed", o.compressed, "CBC1 file")->required();
  verify_cmd->add_flag("--json", o.json, "Emit a JSON object");

  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Compare two PNM images");
  metrics_cmd->add_option("--a", o.a, "First image")->required();
  metrics_cmd->add_option("--b", o.b, "Second image")->required();
  metrics_cmd->add_flag("--json", o.json, "Emit a JSON object");

  CLI::App* inspect_cmd = app.add_subcommand("inspect", "Dump a CBC1 header");
  inspect_cmd->add_option("--input", o.input, "CBC1 file")->required();
  inspect_cmd->add_flag("--json", o.json, "Emit a JSON object");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*compress_cmd) return cmd_compress(o, out);
    if (*decompress_cmd) return cmd_decompress(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*metrics_cmd) return cmd_metrics(o, out);
    if (*inspect_cmd) return cmd_inspect(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cbc::cli
