// Copyright 2026 The KECS Authors.
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

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "kecs/errors.hpp"

namespace kecs {

// Edge weights reach 4^(16m) + 2, so every weight computation is exact
// arbitrary-precision integer arithmetic.
using Weight = boost::multiprecision::cpp_int;

inline Weight Pow2(unsigned exponent) {
  Weight w = 1;
  w <<= exponent;
  return w;
}

inline std::string ToDecimal(const Weight& w) { return w.str(); }

// Parses a non-negative decimal integer; rejects signs, blanks and junk.
inline Weight ParseDecimal(std::string_view text) {
  if (text.empty()) throw FormatError("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw FormatError("invalid decimal integer '" + std::string(text) + "'");
    }
  }
  return Weight(std::string(text));
}

}  // namespace kecs
