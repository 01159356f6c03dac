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

#include "cbc/image.hpp"

#include <string>
#include <utility>

#include "cbc/errors.hpp"

namespace cbc {

namespace {

void check_depth(int depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw DomainError("bit depth " + std::to_string(depth) +
                      " outside 0.." + std::to_string(kMaxDepth));
  }
}

void check_dims(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) {
    throw ShapeError("plane dimensions must be positive");
  }
}

}  // namespace

ImagePlane::ImagePlane(std::uint32_t width, std::uint32_t height, int depth)
    : width_(width), height_(height), depth_(depth) {
  check_dims(width, height);
  check_depth(depth);
  samples_.assign(static_cast<std::size_t>(width) * height, 0);
}

ImagePlane::ImagePlane(std::uint32_t width, std::uint32_t height, int depth,
                       std::vector<Sample> samples)
    : width_(width), height_(height), depth_(depth), samples_(std::move(samples)) {
  check_dims(width, height);
  check_depth(depth);
  if (samples_.size() != static_cast<std::size_t>(width) * height) {
    throw ShapeError("plane has " + std::to_string(samples_.size()) +
                     " samples, expected " +
                     std::to_string(static_cast<std::size_t>(width) * height));
  }
  const std::uint32_t max = max_value();
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i] > max) {
      throw DomainError("sample " + std::to_string(samples_[i]) + " at index " +
                        std::to_string(i) + " exceeds " +
                        std::to_string(depth) + "-bit range");
    }
  }
}

void ImagePlane::set(std::size_t i, std::uint32_t value) {
  if (value > max_value()) {
    throw DomainError("sample " + std::to_string(value) + " exceeds " +
                      std::to_string(depth_) + "-bit range");
  }
  samples_.at(i) = static_cast<Sample>(value);
}

void ImagePlane::set(std::uint32_t x, std::uint32_t y, std::uint32_t value) {
  set(static_cast<std::size_t>(y) * width_ + x, value);
}

Image::Image(std::vector<ImagePlane> planes) : planes_(std::move(planes)) {
  if (planes_.empty()) throw ShapeError("image has no planes");
  const ImagePlane& first = planes_.front();
  for (const ImagePlane& p : planes_) {
    if (!p.same_shape(first) || p.depth() != first.depth()) {
      throw ShapeError("image planes differ in geometry or depth");
    }
  }
}

}  // namespace cbc
