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

#ifndef CBC_METRICS_HPP_
#define CBC_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "cbc/container.hpp"
#include "cbc/image.hpp"

namespace cbc {

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when mse == 0
  std::uint32_t max_abs_error = 0;
  std::optional<std::uint64_t> bound_violations;
  std::optional<double> compression_ratio;

  // key=value lines in a fixed order; infinite values print as "inf".
  std::string to_text() const;
  std::string to_json() const;
};

// 10 log10((2^depth - 1)^2 / mse), or +infinity for mse == 0.
double psnr_from_mse(double mse, int depth);

double plane_mse(const ImagePlane& a, const ImagePlane& b);

// Pools every sample of every channel. Throws ShapeError on mismatched
// geometry or channel count.
MetricsReport compute_metrics(const Image& original, const Image& decoded, int depth);

// Number of decoded samples outside the interval implied by the original
// sample's leading bits, for every plane the header bounds. In RCT mode the
// check runs on the Y planes of both images.
std::uint64_t verify_bounds(const Image& original, const Image& decoded,
                            const Cbc1Header& header);

}  // namespace cbc

#endif  // CBC_METRICS_HPP_
