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

#include "cbc/lp1.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cbc/errors.hpp"

namespace cbc {

std::uint32_t med_predict(std::uint32_t left, std::uint32_t up,
                          std::uint32_t upleft) {
  const std::uint32_t lo = std::min(left, up);
  const std::uint32_t hi = std::max(left, up);
  if (upleft >= hi) return lo;
  if (upleft <= lo) return hi;
  return left + up - upleft;
}

std::uint32_t predict_at(const ImagePlane& plane, std::uint32_t x,
                         std::uint32_t y) {
  if (y == 0) return x == 0 ? 0 : plane.at(x - 1, 0);
  if (x == 0) return plane.at(0, y - 1);
  return med_predict(plane.at(x - 1, y), plane.at(x, y - 1),
                     plane.at(x - 1, y - 1));
}

std::uint32_t fold_residual(std::uint32_t actual, std::uint32_t predicted,
                            int n) {
  if (n == 0) return 0;
  const std::uint32_t modulus = 1u << n;
  const std::uint32_t s = (actual - predicted) & (modulus - 1);
  return s < modulus / 2 ? 2 * s : 2 * (modulus - s) - 1;
}

std::uint32_t unfold_residual(std::uint32_t symbol, std::uint32_t predicted,
                              int n) {
  if (n == 0) return 0;
  const std::uint32_t modulus = 1u << n;
  const std::uint32_t s = (symbol & 1u) ? modulus - (symbol + 1) / 2 : symbol / 2;
  return (predicted + s) & (modulus - 1);
}

std::uint32_t zigzag(std::int32_t v) {
  return v >= 0 ? static_cast<std::uint32_t>(v) << 1
                : (static_cast<std::uint32_t>(-(v + 1)) << 1) + 1;
}

std::int32_t unzigzag(std::uint32_t u) {
  return (u & 1u) ? -static_cast<std::int32_t>(u >> 1) - 1
                  : static_cast<std::int32_t>(u >> 1);
}

std::uint32_t rice_cost(std::uint32_t u, int k) {
  const std::uint32_t q = u >> k;
  if (q >= kRiceEscapeQuotient) return kRiceEscapeQuotient + 32;
  return q + 1 + static_cast<std::uint32_t>(k);
}

void rice_encode_symbol(std::uint32_t u, int k, BitWriter& out) {
  const std::uint32_t q = u >> k;
  if (q >= kRiceEscapeQuotient) {
    out.put_ones(static_cast<int>(kRiceEscapeQuotient));
    out.put_bits(u, 32);
    return;
  }
  out.put_ones(static_cast<int>(q));
  out.put_bit(false);
  out.put_bits(u, k);
}

std::uint32_t rice_decode_symbol(BitReader& in, int k) {
  std::uint32_t q = 0;
  while (q < kRiceEscapeQuotient && in.get_bit()) ++q;
  if (q == kRiceEscapeQuotient) return in.get_bits(32);
  return (q << k) | in.get_bits(k);
}

int select_block_k(std::span<const std::uint32_t> symbols) {
  int best_k = 0;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (int k = 0; k <= kRiceMaxK; ++k) {
    std::uint64_t total = 0;
    for (std::uint32_t u : symbols) total += rice_cost(u, k);
    if (total < best) {
      best = total;
      best_k = k;
    }
  }
  return best_k;
}

void encode_rice_blocks(std::span<const std::uint32_t> symbols, BitWriter& out) {
  for (std::size_t start = 0; start < symbols.size(); start += kRiceBlockSize) {
    const auto block = symbols.subspan(
        start, std::min(kRiceBlockSize, symbols.size() - start));
    const int k = select_block_k(block);
    out.put_bits(static_cast<std::uint32_t>(k), kRiceKBits);
    for (std::uint32_t u : block) rice_encode_symbol(u, k, out);
  }
}

std::vector<std::uint32_t> decode_rice_blocks(BitReader& in, std::size_t count) {
  std::vector<std::uint32_t> symbols;
  symbols.reserve(count);
  while (symbols.size() < count) {
    const std::size_t header_at = in.error_offset();
    const int k = static_cast<int>(in.get_bits(kRiceKBits));
    if (k > kRiceMaxK) {
      throw CorruptStreamError("Rice parameter " + std::to_string(k) +
                                   " exceeds " + std::to_string(kRiceMaxK),
                               header_at);
    }
    const std::size_t n = std::min(kRiceBlockSize, count - symbols.size());
    for (std::size_t i = 0; i < n; ++i) {
      symbols.push_back(rice_decode_symbol(in, k));
    }
  }
  return symbols;
}

std::vector<std::uint8_t> lp1_encode(const ImagePlane& plane) {
  const int n = plane.depth();
  if (n == 0) return {};
  std::vector<std::uint32_t> symbols;
  symbols.reserve(plane.size());
  for (std::uint32_t y = 0; y < plane.height(); ++y) {
    for (std::uint32_t x = 0; x < plane.width(); ++x) {
      symbols.push_back(fold_residual(plane.at(x, y), predict_at(plane, x, y), n));
    }
  }
  BitWriter out;
  encode_rice_blocks(symbols, out);
  return out.finish();
}

Lp1Prefix lp1_decode_prefix(std::span<const std::uint8_t> bytes,
                            std::uint32_t width, std::uint32_t height, int n,
                            std::size_t base_offset) {
  ImagePlane plane(width, height, n);
  if (n == 0) return {std::move(plane), 0};
  if (plane.size() > kMaxPlaneSamples) {
    throw CorruptStreamError("plane too large", base_offset);
  }

  BitReader in(bytes, base_offset);
  const std::vector<std::uint32_t> symbols = decode_rice_blocks(in, plane.size());
  const std::uint32_t limit = 1u << n;
  std::size_t i = 0;
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x, ++i) {
      if (symbols[i] >= limit) {
        throw CorruptStreamError("residual symbol " + std::to_string(symbols[i]) +
                                     " out of range for " + std::to_string(n) +
                                     "-bit plane",
                                 base_offset);
      }
      plane.set(x, y, unfold_residual(symbols[i], predict_at(plane, x, y), n));
    }
  }
  in.align();
  return {std::move(plane), in.byte_position()};
}

ImagePlane lp1_decode(std::span<const std::uint8_t> bytes, std::uint32_t width,
                      std::uint32_t height, int n) {
  Lp1Prefix decoded = lp1_decode_prefix(bytes, width, height, n);
  if (decoded.consumed != bytes.size()) {
    throw CorruptStreamError("trailing bytes after LP1 stream", decoded.consumed);
  }
  return std::move(decoded.plane);
}

}  // namespace cbc
