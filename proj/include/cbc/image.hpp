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

#ifndef CBC_IMAGE_HPP_
#define CBC_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cbc {

inline constexpr int kMaxDepth = 16;

using Sample = std::uint16_t;

// One channel of samples at a declared bit depth, stored row-major.
// Depth 0 is allowed and denotes a plane whose only legal sample is 0
// (a channel truncated to zero leading bits).
class ImagePlane {
 public:
  // Zero-filled plane.
  ImagePlane(std::uint32_t width, std::uint32_t height, int depth);
  // Throws ShapeError if samples.size() != width * height, DomainError if a
  // sample does not fit in `depth` bits.
  ImagePlane(std::uint32_t width, std::uint32_t height, int depth,
             std::vector<Sample> samples);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  int depth() const { return depth_; }
  std::size_t size() const { return samples_.size(); }
  std::uint32_t max_value() const { return (1u << depth_) - 1; }

  std::span<const Sample> samples() const { return samples_; }

  Sample at(std::uint32_t x, std::uint32_t y) const {
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }
  Sample operator[](std::size_t i) const { return samples_[i]; }

  // Throws DomainError if value does not fit in depth().
  void set(std::uint32_t x, std::uint32_t y, std::uint32_t value);
  void set(std::size_t i, std::uint32_t value);

  bool same_shape(const ImagePlane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  int depth_;
  std::vector<Sample> samples_;
};

// A stack of planes sharing width, height and depth. One plane is grayscale,
// three planes are R, G, B in that order.
class Image {
 public:
  // Throws ShapeError on empty input or mismatched geometry/depth.
  explicit Image(std::vector<ImagePlane> planes);

  std::uint32_t width() const { return planes_.front().width(); }
  std::uint32_t height() const { return planes_.front().height(); }
  int depth() const { return planes_.front().depth(); }
  std::size_t channels() const { return planes_.size(); }

  const ImagePlane& plane(std::size_t c) const { return planes_.at(c); }
  const std::vector<ImagePlane>& planes() const { return planes_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::vector<ImagePlane> planes_;
};

// Upper limit on samples per plane accepted from untrusted headers.
inline constexpr std::size_t kMaxPlaneSamples = std::size_t{1} << 30;

}  // namespace cbc

#endif  // CBC_IMAGE_HPP_
