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

#ifndef CBC_BOUNDS_HPP_
#define CBC_BOUNDS_HPP_

#include <cstdint>

#include "cbc/image.hpp"

namespace cbc {

// Source depth d and critical depth n of a bounded channel. Keeping the n
// leading bits of a d-bit sample leaves at most 2^(d-n) - 1 unknown.
class TruncationSpec {
 public:
  // Throws DomainError unless 0 <= n <= d, 1 <= d <= 16.
  TruncationSpec(int source_depth, int critical_depth);

  int source_depth() const { return source_depth_; }
  int critical_depth() const { return critical_depth_; }
  int shift() const { return source_depth_ - critical_depth_; }
  std::uint32_t max_trunc_error() const { return (1u << shift()) - 1; }

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;

 private:
  int source_depth_;
  int critical_depth_;
};

// Closed interval of full-depth values consistent with one reduced sample.
struct BoundPair {
  std::uint32_t lower;
  std::uint32_t upper;

  std::uint32_t clamp(std::uint32_t v) const {
    return v < lower ? lower : (v > upper ? upper : v);
  }
  bool contains(std::uint32_t v) const { return lower <= v && v <= upper; }

  friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

// floor(sample / 2^(d-n)). Throws DomainError if sample >= 2^d.
std::uint32_t truncate(std::uint32_t sample, const TruncationSpec& spec);

// Interval of every d-bit value whose n leading bits equal `reduced`.
// Throws DomainError if reduced >= 2^n.
BoundPair bounds_of(std::uint32_t reduced, const TruncationSpec& spec);

// Reconciles a lossy prediction with the losslessly coded leading bits:
//   leading bits of the prediction equal `reduced`  -> prediction
//   leading bits smaller                            -> lower bound
//   leading bits larger                             -> upper bound
std::uint32_t clamp_decode(std::uint32_t lossy_prediction,
                           std::uint32_t reduced, const TruncationSpec& spec);

// Element-wise truncate(); the result has depth n.
ImagePlane truncate_plane(const ImagePlane& plane, const TruncationSpec& spec);

// Element-wise clamp_decode(). Throws ShapeError unless the planes have equal
// dimensions, lossy.depth() == d and reduced.depth() == n.
ImagePlane clamp_decode_plane(const ImagePlane& lossy, const ImagePlane& reduced,
                              const TruncationSpec& spec);

}  // namespace cbc

#endif  // CBC_BOUNDS_HPP_
