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

// Phase data: exact Gaussian integers, fixed unit phases, and the 4^d
// ensemble of {+1, -1, +i, -i} phase vectors.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wernersep/errors.hpp"
#include "wernersep/tensor_core.hpp"

namespace wernersep {

/// Exact a + b i with 64-bit integer parts.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussianInt conj() const { return {re, -im}; }
  constexpr std::int64_t norm() const { return re * re + im * im; }
  Complex to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  constexpr GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend constexpr GaussianInt operator+(GaussianInt a, const GaussianInt& b) {
    return a += b;
  }
  friend constexpr GaussianInt operator*(const GaussianInt& a,
                                         const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(const GaussianInt&,
                                   const GaussianInt&) = default;
};

/// The four unit symbols in canonical order: +1, -1, +i, -i.
inline constexpr std::array<GaussianInt, 4> kUnitSymbols = {
    GaussianInt{1, 0}, GaussianInt{-1, 0}, GaussianInt{0, 1},
    GaussianInt{0, -1}};

inline std::string to_string(const GaussianInt& g) {
  if (g.im == 0) return std::to_string(g.re);
  if (g.re == 0) {
    if (g.im == 1) return "i";
    if (g.im == -1) return "-i";
    return std::to_string(g.im) + "i";
  }
  return std::to_string(g.re) + (g.im < 0 ? "-" : "+") +
         (std::abs(g.im) == 1 ? std::string() : std::to_string(std::abs(g.im))) +
         "i";
}

inline constexpr double kUnitModulusTol = 1e-12;

/// A length-d vector of fixed unit phases zeta_r.
class FixedPhases {
 public:
  explicit FixedPhases(std::vector<Complex> zeta) : zeta_(std::move(zeta)) {
    if (zeta_.empty()) {
      throw InvalidParameterError("fixed phases must have length >= 1");
    }
    for (std::size_t r = 0; r < zeta_.size(); ++r) {
      const double err = std::abs(std::abs(zeta_[r]) - 1.0);
      if (!(err <= kUnitModulusTol)) {
        throw ContractViolationError("phase " + std::to_string(r) +
                                     " has modulus " +
                                     std::to_string(std::abs(zeta_[r])));
      }
    }
  }

  /// zeta_r = 1 for every r.
  static FixedPhases ones(std::size_t d) {
    return FixedPhases(std::vector<Complex>(d, Complex(1.0, 0.0)));
  }

  std::size_t d() const noexcept { return zeta_.size(); }
  const Complex& operator[](std::size_t r) const { return zeta_.at(r); }
  const std::vector<Complex>& values() const noexcept { return zeta_; }

  bool all_ones() const {
    for (const auto& z : zeta_) {
      if (z != Complex(1.0, 0.0)) return false;
    }
    return true;
  }

 private:
  std::vector<Complex> zeta_;
};

/// w = (zeta_0 z_0, ..., zeta_{d-1} z_{d-1}) with each z_r in {+1, -1, +i, -i}
/// held exactly.
class PhaseVector {
 public:
  explicit PhaseVector(std::vector<GaussianInt> units,
                       std::optional<FixedPhases> zeta = std::nullopt)
      : units_(std::move(units)), zeta_(std::move(zeta)) {
    for (std::size_t r = 0; r < units_.size(); ++r) {
      if (units_[r].norm() != 1) {
        throw ContractViolationError("phase vector entry " + std::to_string(r) +
                                     " is not in {+1, -1, +i, -i}");
      }
    }
    if (zeta_ && zeta_->d() != units_.size()) {
      throw InvalidParameterError("fixed phases length does not match");
    }
  }

  std::size_t d() const noexcept { return units_.size(); }
  const std::vector<GaussianInt>& units() const noexcept { return units_; }
  const std::optional<FixedPhases>& applied_zeta() const noexcept {
    return zeta_;
  }

  /// Same base units, multiplied by `zeta`.
  PhaseVector with_zeta(FixedPhases zeta) const {
    return PhaseVector(units_, std::move(zeta));
  }

  /// Entrywise conjugate of the base units; drops any fixed phases.
  PhaseVector conj_units() const {
    std::vector<GaussianInt> out;
    out.reserve(units_.size());
    for (const auto& u : units_) out.push_back(u.conj());
    return PhaseVector(std::move(out));
  }

  /// Complex entries zeta_r * z_r (or z_r without fixed phases).
  std::vector<Complex> amplitudes() const {
    std::vector<Complex> out(units_.size());
    for (std::size_t r = 0; r < units_.size(); ++r) {
      out[r] = units_[r].to_complex();
      if (zeta_) out[r] *= (*zeta_)[r];
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t r = 0; r < units_.size(); ++r) {
      if (r) out += ",";
      out += wernersep::to_string(units_[r]);
    }
    return out + ")";
  }

 private:
  std::vector<GaussianInt> units_;
  std::optional<FixedPhases> zeta_;
};

/// 4^d <= 65536.
inline constexpr std::size_t kMaxEnsembleDimension = 8;

/// All 4^d phase vectors in lexicographic order over (+1, -1, +i, -i), with
/// slot 0 most significant.
inline std::vector<PhaseVector> enumerate_phase_vectors(
    std::size_t d, std::size_t max_d = kMaxEnsembleDimension) {
  if (d < 1) throw InvalidParameterError("phase vectors need d >= 1");
  if (d > max_d) {
    throw CapacityError("phase-vector ensemble too large for d = " +
                            std::to_string(d),
                        d, max_d);
  }
  const std::size_t count = std::size_t{1} << (2 * d);
  std::vector<PhaseVector> out;
  out.reserve(count);
  std::vector<GaussianInt> units(d);
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t symbol = (m >> (2 * (d - 1 - r))) & 3u;
      units[r] = kUnitSymbols[symbol];
    }
    out.emplace_back(units);
  }
  return out;
}

}  // namespace wernersep
