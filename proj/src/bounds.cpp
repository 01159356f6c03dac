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

#include "cbc/bounds.hpp"

#include <string>
#include <vector>

#include "cbc/errors.hpp"

namespace cbc {

TruncationSpec::TruncationSpec(int source_depth, int critical_depth)
    : source_depth_(source_depth), critical_depth_(critical_depth) {
  if (source_depth < 1 || source_depth > kMaxDepth) {
    throw DomainError("source depth " + std::to_string(source_depth) +
                      " outside 1..16");
  }
  if (critical_depth < 0 || critical_depth > source_depth) {
    throw DomainError("critical depth " + std::to_string(critical_depth) +
                      " outside 0.." + std::to_string(source_depth));
  }
}

std::uint32_t truncate(std::uint32_t sample, const TruncationSpec& spec) {
  if (sample >> spec.source_depth() != 0) {
    throw DomainError("sample " + std::to_string(sample) + " exceeds " +
                      std::to_string(spec.source_depth()) + "-bit range");
  }
  return sample >> spec.shift();
}

BoundPair bounds_of(std::uint32_t reduced, const TruncationSpec& spec) {
  if (reduced >> spec.critical_depth() != 0) {
    throw DomainError("reduced sample " + std::to_string(reduced) +
                      " exceeds " + std::to_string(spec.critical_depth()) +
                      "-bit range");
  }
  const std::uint32_t lower = reduced << spec.shift();
  return {lower, lower + spec.max_trunc_error()};
}

std::uint32_t clamp_decode(std::uint32_t lossy_prediction, std::uint32_t reduced,
                           const TruncationSpec& spec) {
  const std::uint32_t predicted = truncate(lossy_prediction, spec);
  const BoundPair bounds = bounds_of(reduced, spec);
  if (predicted == reduced) return lossy_prediction;
  if (predicted < reduced) return bounds.lower;
  return bounds.upper;
}

ImagePlane truncate_plane(const ImagePlane& plane, const TruncationSpec& spec) {
  if (plane.depth() != spec.source_depth()) {
    throw ShapeError("plane depth " + std::to_string(plane.depth()) +
                     " does not match source depth " +
                     std::to_string(spec.source_depth()));
  }
  std::vector<Sample> out(plane.size());
  const int shift = spec.shift();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Sample>(plane[i] >> shift);
  }
  return ImagePlane(plane.width(), plane.height(), spec.critical_depth(),
                    std::move(out));
}

ImagePlane clamp_decode_plane(const ImagePlane& lossy, const ImagePlane& reduced,
                              const TruncationSpec& spec) {
  if (!lossy.same_shape(reduced)) {
    throw ShapeError("lossy and reduced planes differ in dimensions");
  }
  if (lossy.depth() != spec.source_depth() ||
      reduced.depth() != spec.critical_depth()) {
    throw ShapeError("plane depths do not match the truncation spec");
  }
  // Plane invariants already guarantee the samples are in range, so the
  // interval clamp is applied directly; it agrees with clamp_decode().
  const int shift = spec.shift();
  const std::uint32_t span = spec.max_trunc_error();
  std::vector<Sample> out(lossy.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t lower = std::uint32_t{reduced[i]} << shift;
    const BoundPair b{lower, lower + span};
    out[i] = static_cast<Sample>(b.clamp(lossy[i]));
  }
  return ImagePlane(lossy.width(), lossy.height(), lossy.depth(), std::move(out));
}

}  // namespace cbc
