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

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "wernersep/errors.hpp"

namespace wernersep {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always held in lowest terms with a
/// positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const ExactRational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator_of(const ExactRational& q) {
  return boost::multiprecision::denominator(q);
}

/// "p/q", or just "p" for integers.
inline std::string to_string(const ExactRational& q) {
  const BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

inline double to_double(const ExactRational& q) {
  return q.convert_to<double>();
}

inline ExactRational pow_rational(const ExactRational& base, unsigned exponent) {
  ExactRational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

namespace detail {

inline BigInt parse_digits(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw InvalidParameterError("malformed number '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidParameterError("malformed number '" + std::string(whole) +
                                  "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace detail

/// Parses "p/q", an integer, or a plain decimal such as "0.25" or "-.5"
/// into an exact rational. Decimals are taken at face value: "0.1" is 1/10.
inline ExactRational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  ExactRational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = detail::parse_digits(text.substr(0, slash), whole);
    const BigInt den = detail::parse_digits(text.substr(slash + 1), whole);
    if (den == 0) {
      throw InvalidParameterError("zero denominator in '" + std::string(whole) +
                                  "'");
    }
    value = ExactRational(num, den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw InvalidParameterError("malformed number '" + std::string(whole) +
                                  "'");
    }
    const BigInt ip = int_part.empty() ? BigInt(0)
                                       : detail::parse_digits(int_part, whole);
    const BigInt fp = frac_part.empty()
                          ? BigInt(0)
                          : detail::parse_digits(frac_part, whole);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = ExactRational(ip * scale + fp, scale);
  } else {
    value = ExactRational(detail::parse_digits(text, whole));
  }
  return negative ? ExactRational(-value) : value;
}

}  // namespace wernersep
