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

#ifndef CBC_LP1_HPP_
#define CBC_LP1_HPP_

// LP1: lossless coding of reduced-precision planes.
//
// Samples are visited in raster order and predicted from their causal
// neighbours with the LOCO-I median predictor. Prediction residuals are
// folded to unsigned symbols and grouped into blocks of 64; each block is
// written as a 5-bit Rice parameter k followed by one Rice code per symbol.
// Bits are packed MSB-first and the stream is zero-padded to a whole byte.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbc/bitio.hpp"
#include "cbc/image.hpp"

namespace cbc {

inline constexpr std::size_t kRiceBlockSize = 64;
inline constexpr int kRiceKBits = 5;
inline constexpr int kRiceMaxK = 24;
// Quotients at or above this are escaped to a raw 32-bit field.
inline constexpr std::uint32_t kRiceEscapeQuotient = 32;

std::uint32_t med_predict(std::uint32_t left, std::uint32_t up,
                          std::uint32_t upleft);

// Prediction for sample (x, y) with the edge rules: 0 at the origin, the left
// neighbour on the first row, the upper neighbour on the first column.
std::uint32_t predict_at(const ImagePlane& plane, std::uint32_t x,
                         std::uint32_t y);

// Maps (actual - predicted) mod 2^n onto [0, 2^n) so that small residuals of
// either sign get small symbols: 0, -1, 1, -2, ... -> 0, 1, 2, 3, ...
std::uint32_t fold_residual(std::uint32_t actual, std::uint32_t predicted, int n);
std::uint32_t unfold_residual(std::uint32_t symbol, std::uint32_t predicted,
                              int n);

// Signed <-> unsigned interleaving: v >= 0 -> 2v, v < 0 -> -2v - 1.
std::uint32_t zigzag(std::int32_t v);
std::int32_t unzigzag(std::uint32_t u);

// Number of bits rice_encode_symbol() writes for u.
std::uint32_t rice_cost(std::uint32_t u, int k);
void rice_encode_symbol(std::uint32_t u, int k, BitWriter& out);
std::uint32_t rice_decode_symbol(BitReader& in, int k);

// The k in [0, 24] with the smallest total cost; ties go to the smaller k.
int select_block_k(std::span<const std::uint32_t> symbols);

// Block-adaptive Rice coding of an arbitrary symbol sequence.
void encode_rice_blocks(std::span<const std::uint32_t> symbols, BitWriter& out);
std::vector<std::uint32_t> decode_rice_blocks(BitReader& in, std::size_t count);

std::vector<std::uint8_t> lp1_encode(const ImagePlane& plane);

struct Lp1Prefix {
  ImagePlane plane;
  std::size_t consumed;  // bytes read, including padding
};

// Decodes one LP1 stream from the front of `bytes`, leaving any following
// bytes untouched. base_offset only shifts error positions.
Lp1Prefix lp1_decode_prefix(std::span<const std::uint8_t> bytes,
                            std::uint32_t width, std::uint32_t height, int n,
                            std::size_t base_offset = 0);

// Decodes a stream that must occupy `bytes` exactly.
ImagePlane lp1_decode(std::span<const std::uint8_t> bytes, std::uint32_t width,
                      std::uint32_t height, int n);

}  // namespace cbc

#endif  // CBC_LP1_HPP_
