// Copyright 2026 The wernersep Authors
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

#include <charconv>
#include <complex>
#include <cstdio>
#include <string>

namespace wernersep {

/// printf("%.17g") with negative zero folded to "0". Parsing the result
/// with strtod recovers x exactly, so formatting is a fixed point.
inline std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Shortest decimal that round-trips, for human-facing output.
inline std::string format_short(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(const std::complex<double>& z) {
  return "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]";
}

}  // namespace wernersep
