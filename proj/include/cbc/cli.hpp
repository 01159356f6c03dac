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

#ifndef CBC_CLI_HPP_
#define CBC_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "cbc/container.hpp"
#include "cbc/lossy.hpp"

namespace cbc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad arguments, malformed or corrupt input
  kExitIo = 2,
  kExitBoundViolation = 3,
};

// "const", "down:f=4", "haar:q=32,levels=4". Omitted parameters take the
// defaults f=4, q=32, levels=4. Throws ConfigError.
LossyCodecConfig parse_codec_spec(std::string_view spec);

// "4" bounds every plane at 4 bits. Named forms: "Y=4" in RCT mode,
// "R=4,G=4,B=4" (unnamed planes stay unbounded) or "GRAY=4" per channel.
// Throws ConfigError.
std::vector<int> parse_critical_depth(std::string_view spec, ColorMode mode,
                                      std::size_t channels, int depth);

// Entry point of the cbc tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cbc::cli

#endif  // CBC_CLI_HPP_
