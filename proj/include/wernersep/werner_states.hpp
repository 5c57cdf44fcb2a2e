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

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wernersep/errors.hpp"
#include "wernersep/phases.hpp"
#include "wernersep/rational.hpp"
#include "wernersep/tensor_core.hpp"

namespace wernersep {

/// Linear index of |j j ... j> on n qudits: j * (d^n - 1) / (d - 1).
inline std::size_t diagonal_index(std::size_t d, std::size_t n, std::size_t j) {
  std::size_t repunit = 0;  // 1 + d + ... + d^(n-1)
  for (std::size_t r = 0; r < n; ++r) repunit = repunit * d + 1;
  return j * repunit;
}

struct WernerParams {
  std::size_t d = 2;
  std::size_t n = 2;
  double s = 0.0;

  /// Throws InvalidParameterError. `min_n` is 1 only for the internal
  /// recursion base case.
  void validate(std::size_t min_n = 2) const {
    if (d < 2) throw InvalidParameterError("d must be >= 2");
    if (n < min_n) {
      throw InvalidParameterError("n must be >= " + std::to_string(min_n));
    }
    if (!(s >= 0.0 && s <= 1.0)) {
      throw InvalidParameterError("s must lie in [0, 1], got " +
                                  std::to_string(s));
    }
  }
};

/// (1/sqrt(d)) sum_j |j j ... j>.
inline ComplexVector psi_ghz(std::size_t d, std::size_t n,
                             std::size_t cap = kDefaultDimensionCap) {
  if (d < 2) throw InvalidParameterError("d must be >= 2");
  if (n < 1) throw InvalidParameterError("n must be >= 1");
  const std::size_t dim = checked_power(d, n, cap);
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    psi(static_cast<Eigen::Index>(diagonal_index(d, n, j))) = amp;
  }
  return psi;
}

/// (1 - s) I / d^n + s |Psi><Psi|.
inline DensityMatrix werner(const WernerParams& params) {
  params.validate();
  const auto [d, n, s] = params;
  const std::size_t dim = checked_power(d, n, kDefaultDimensionCap);
  const auto size = static_cast<Eigen::Index>(dim);
  ComplexMatrix m = ComplexMatrix::Identity(size, size) *
                    ((1.0 - s) / static_cast<double>(dim));
  const double coherence = s / static_cast<double>(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      m(static_cast<Eigen::Index>(diagonal_index(d, n, j)),
        static_cast<Eigen::Index>(diagonal_index(d, n, k))) += coherence;
    }
  }
  return DensityMatrix(std::move(m), d, n, PsdCheck::kSkip);
}

inline DensityMatrix werner(std::size_t d, std::size_t n, double s) {
  return werner(WernerParams{d, n, s});
}

inline DensityMatrix werner(std::size_t d, std::size_t n,
                            const ExactRational& s) {
  return werner(WernerParams{d, n, to_double(s)});
}

/// (1/d^n)(I + sum_{j != k} zeta_j conj(zeta_k) |j..j><k..k|).
///
/// Not PSD-checked: for n >= 2 positivity follows from the separable
/// decomposition produced by decompose_rho_n().
inline DensityMatrix rho_phase_family(std::size_t d, std::size_t n,
                                      const FixedPhases& phases) {
  if (d < 2) throw InvalidParameterError("d must be >= 2");
  if (n < 1) throw InvalidParameterError("n must be >= 1");
  if (phases.d() != d) {
    throw InvalidParameterError("expected " + std::to_string(d) +
                                " fixed phases, got " +
                                std::to_string(phases.d()));
  }
  const std::size_t dim = checked_power(d, n, kDefaultDimensionCap);
  const auto size = static_cast<Eigen::Index>(dim);
  const double scale = 1.0 / static_cast<double>(dim);
  ComplexMatrix m = ComplexMatrix::Identity(size, size) * scale;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      if (j == k) continue;
      m(static_cast<Eigen::Index>(diagonal_index(d, n, j)),
        static_cast<Eigen::Index>(diagonal_index(d, n, k))) =
          scale * phases[j] * std::conj(phases[k]);
    }
  }
  return DensityMatrix(std::move(m), d, n, PsdCheck::kSkip);
}

/// (1/sqrt(d)) (a_0, ..., a_{d-1}) for unit-modulus entries a_r.
inline ComplexVector rho1_pure(std::span<const Complex> amplitudes) {
  if (amplitudes.empty()) {
    throw InvalidParameterError("empty phase vector");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(amplitudes.size()));
  ComplexVector out(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t r = 0; r < amplitudes.size(); ++r) {
    const double err = std::abs(std::abs(amplitudes[r]) - 1.0);
    if (!(err <= kUnitModulusTol)) {
      throw ContractViolationError("entry " + std::to_string(r) +
                                   " does not have unit modulus");
    }
    out(static_cast<Eigen::Index>(r)) = scale * amplitudes[r];
  }
  return out;
}

/// The pure state whose projector is the n = 1 phase-family density.
inline ComplexVector rho1_pure(const PhaseVector& z) {
  const auto amps = z.amplitudes();
  return rho1_pure(std::span<const Complex>(amps));
}

inline ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace wernersep
