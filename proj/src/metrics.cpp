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

#include "cbc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "cbc/bounds.hpp"
#include "cbc/errors.hpp"
#include "cbc/rct.hpp"

namespace cbc {

namespace {

void check_same_geometry(const Image& a, const Image& b) {
  if (a.channels() != b.channels() || a.width() != b.width() || a.height() != b.height()) {
    throw ShapeError("images differ in geometry or channel count");
  }
}

std::string format_double(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

nlohmann::ordered_json json_double(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

std::uint64_t count_outside(const ImagePlane& original, const ImagePlane& decoded, int n) {
  if (n == 0) return 0;
  const TruncationSpec spec(original.depth(), n);
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const BoundPair b = bounds_of(truncate(original[i], spec), spec);
    if (!b.contains(decoded[i])) ++violations;
  }
  return violations;
}

}  // namespace

double psnr_from_mse(double mse, int depth) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  const double peak = static_cast<double>((1u << depth) - 1);
  return 10.0 * std::log10(peak * peak / mse);
}

double plane_mse(const ImagePlane& a, const ImagePlane& b) {
  if (!a.same_shape(b)) throw ShapeError("planes differ in dimensions");
  std::uint64_t sse = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t e = std::int64_t{a[i]} - b[i];
    sse += static_cast<std::uint64_t>(e * e);
  }
  return static_cast<double>(sse) / static_cast<double>(a.size());
}

MetricsReport compute_metrics(const Image& original, const Image& decoded, int depth) {
  check_same_geometry(original, decoded);
  std::uint64_t sse = 0;
  std::uint32_t max_err = 0;
  for (std::size_t c = 0; c < original.channels(); ++c) {
    const ImagePlane& a = original.plane(c);
    const ImagePlane& b = decoded.plane(c);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::int64_t e = std::int64_t{a[i]} - b[i];
      sse += static_cast<std::uint64_t>(e * e);
      max_err = std::max(max_err, static_cast<std::uint32_t>(e < 0 ? -e : e));
    }
  }
  MetricsReport r;
  const double count = static_cast<double>(original.plane(0).size() * original.channels());
  r.mse = static_cast<double>(sse) / count;
  r.psnr_db = psnr_from_mse(r.mse, depth);
  r.max_abs_error = max_err;
  return r;
}

std::uint64_t verify_bounds(const Image& original, const Image& decoded,
                            const Cbc1Header& header) {
  check_same_geometry(original, decoded);
  if (original.channels() != header.channels ||
      original.width() != header.width || original.height() != header.height ||
      original.depth() != header.source_depth) {
    throw ShapeError("image does not match the container header");
  }
  if (header.color_mode == ColorMode::kRctLuma) {
    return count_outside(luma_plane(original), luma_plane(decoded),
                         header.critical_depths[0]);
  }
  std::uint64_t violations = 0;
  for (std::size_t c = 0; c < original.channels(); ++c) {
    violations += count_outside(original.plane(c), decoded.plane(c),
                                header.critical_depths[c]);
  }
  return violations;
}

std::string MetricsReport::to_text() const {
  std::string s;
  s += "mse=" + format_double(mse) + "\n";
  s += "psnr=" + format_double(psnr_db) + "\n";
  s += "max_abs_error=" + std::to_string(max_abs_error) + "\n";
  if (bound_violations) s += "bound_violations=" + std::to_string(*bound_violations) + "\n";
  if (compression_ratio) s += "compression_ratio=" + format_double(*compression_ratio) + "\n";
  return s;
}

std::string MetricsReport::to_json() const {
  nlohmann::ordered_json j;
  j["mse"] = mse;
  j["psnr"] = json_double(psnr_db);
  j["max_abs_error"] = max_abs_error;
  if (bound_violations) j["bound_violations"] = *bound_violations;
  if (compression_ratio) j["compression_ratio"] = json_double(*compression_ratio);
  return j.dump();
}

}  // namespace cbc
