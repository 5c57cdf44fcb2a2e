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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wernersep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multi-index digit lies outside [0, d).
class InvalidIndexError : public Error {
 public:
  using Error::Error;
};

/// A parameter (d, n, s, a cut, an index quadruple, ...) is outside its domain.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented numerical contract (Hermiticity, unit
/// modulus, ...).
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

/// A dimension or term count exceeds its configured cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t required, std::size_t cap)
      : Error(what + " (required " + std::to_string(required) + ", cap " +
              std::to_string(cap) + ")"),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// Requested mixing weight lies above the separability threshold.
class ThresholdExceededError : public Error {
 public:
  using Error::Error;
};

/// Malformed certificate document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at byte " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed document whose contents break a certificate invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wernersep
