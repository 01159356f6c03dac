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

#ifndef CBC_BITIO_HPP_
#define CBC_BITIO_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cbc {

// MSB-first bit packer. The final partial byte is zero-padded by finish().
class BitWriter {
 public:
  void put_bit(bool bit);
  // Writes the low `count` bits of value, most significant first. count <= 32.
  void put_bits(std::uint32_t value, int count);
  void put_ones(int count);

  std::size_t bit_count() const { return bytes_.size() * 8 - free_bits_in_last(); }

  // Pads to a byte boundary and returns the bytes; the writer is left empty.
  std::vector<std::uint8_t> finish();

 private:
  int free_bits_in_last() const { return used_ == 0 ? 0 : 8 - used_; }

  std::vector<std::uint8_t> bytes_;
  int used_ = 0;  // bits occupied in bytes_.back(), 0 means byte-aligned
};

// MSB-first bit reader over a borrowed buffer. Reading past the end throws
// CorruptStreamError; reported offsets are shifted by `base_offset` so
// errors point into the enclosing file.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes,
                     std::size_t base_offset = 0)
      : bytes_(bytes), base_offset_(base_offset) {}

  bool get_bit();
  std::uint32_t get_bits(int count);

  // Skips to the next byte boundary.
  void align();

  std::size_t bit_position() const { return pos_; }
  std::size_t byte_position() const { return (pos_ + 7) / 8; }
  std::size_t bits_left() const { return bytes_.size() * 8 - pos_; }
  std::size_t error_offset() const { return base_offset_ + pos_ / 8; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t base_offset_;
  std::size_t pos_ = 0;
};

}  // namespace cbc

#endif  // CBC_BITIO_HPP_
