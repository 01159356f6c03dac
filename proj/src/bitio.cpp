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

#include "cbc/bitio.hpp"

#include "cbc/errors.hpp"

namespace cbc {

void BitWriter::put_bit(bool bit) {
  if (used_ == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> used_);
  used_ = (used_ + 1) & 7;
}

void BitWriter::put_bits(std::uint32_t value, int count) {
  for (int i = count - 1; i >= 0; --i) put_bit((value >> i) & 1u);
}

void BitWriter::put_ones(int count) {
  for (int i = 0; i < count; ++i) put_bit(true);
}

std::vector<std::uint8_t> BitWriter::finish() {
  std::vector<std::uint8_t> out;
  out.swap(bytes_);
  used_ = 0;
  return out;
}

bool BitReader::get_bit() {
  if (pos_ >= bytes_.size() * 8) {
    throw CorruptStreamError("unexpected end of bitstream", error_offset());
  }
  const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
  ++pos_;
  return bit;
}

std::uint32_t BitReader::get_bits(int count) {
  if (bits_left() < static_cast<std::size_t>(count)) {
    throw CorruptStreamError("unexpected end of bitstream", error_offset());
  }
  std::uint32_t v = 0;
  for (int i = 0; i < count; ++i) {
    v = (v << 1) | ((bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u);
    ++pos_;
  }
  return v;
}

void BitReader::align() { pos_ = (pos_ + 7) & ~std::size_t{7}; }

}  // namespace cbc
