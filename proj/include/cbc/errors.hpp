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

#ifndef CBC_ERRORS_HPP_
#define CBC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbc {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sample or parameter lies outside the range its depth allows.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Plane dimensions or depths disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid codec parameters or compression configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A compressed stream could not be decoded. offset() is the byte position
// at which decoding failed.
class CorruptStreamError : public Error {
 public:
  CorruptStreamError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Malformed PNM input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cbc

#endif  // CBC_ERRORS_HPP_
