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

#ifndef CBC_PNM_HPP_
#define CBC_PNM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cbc/image.hpp"

namespace cbc {

// Binary PGM (P5) and PPM (P6) with maxval 255 or 65535. 16-bit samples are
// big-endian. Throws ParseError with the offending byte offset.
Image read_pnm(std::span<const std::uint8_t> bytes);

// Canonical form: "P5 <w> <h> <maxval>\n" followed by the samples. The image
// depth must be 8 or 16; throws ConfigError otherwise.
std::vector<std::uint8_t> write_pnm(const Image& image);

}  // namespace cbc

#endif  // CBC_PNM_HPP_
