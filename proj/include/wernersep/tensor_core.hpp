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

// Multi-index bookkeeping and the dense complex linear algebra that the rest
// of the library is built on.
//
// Basis ordering is big-endian: qudit 0 is the most significant base-d digit
// of the linear index, so |j j ... j> sits at j * (d^n - 1) / (d - 1).

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wernersep/errors.hpp"

namespace wernersep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Default cap on either matrix dimension.
inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Numerical tolerances used for density-matrix contracts.
struct Tolerances {
  double hermitian = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
  double eig = 1e-10;
};

/// d^n with overflow detection. Throws CapacityError when the result
/// exceeds `cap`.
inline std::size_t checked_power(std::size_t base, std::size_t exponent,
                                 std::size_t cap = SIZE_MAX) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) {
      // Report a saturated requirement; the true value may not fit.
      throw CapacityError("dimension overflow computing " +
                              std::to_string(base) + "^" +
                              std::to_string(exponent),
                          result > SIZE_MAX / base ? SIZE_MAX : result * base,
                          cap);
    }
    result *= base;
  }
  return result;
}

/// An n-tuple of base-d digits addressing the computational product basis.
class MultiIndex {
 public:
  MultiIndex(std::size_t d, std::vector<std::size_t> digits)
      : d_(d), digits_(std::move(digits)) {
    if (d_ < 1) throw InvalidParameterError("local dimension must be >= 1");
    for (std::size_t r = 0; r < digits_.size(); ++r) {
      if (digits_[r] >= d_) {
        throw InvalidIndexError("digit " + std::to_string(digits_[r]) +
                                " at position " + std::to_string(r) +
                                " is out of range for d = " +
                                std::to_string(d_));
      }
    }
  }

  MultiIndex(std::size_t d, std::initializer_list<std::size_t> digits)
      : MultiIndex(d, std::vector<std::size_t>(digits)) {}

  /// The constant string (j, j, ..., j).
  static MultiIndex constant(std::size_t d, std::size_t n, std::size_t j) {
    return MultiIndex(d, std::vector<std::size_t>(n, j));
  }

  /// Inverse of encode().
  static MultiIndex decode(std::size_t linear, std::size_t d, std::size_t n) {
    const std::size_t dim = checked_power(d, n);
    if (linear >= dim) {
      throw InvalidIndexError("linear index " + std::to_string(linear) +
                              " is out of range for dimension " +
                              std::to_string(dim));
    }
    std::vector<std::size_t> digits(n);
    for (std::size_t r = n; r-- > 0;) {
      digits[r] = linear % d;
      linear /= d;
    }
    return MultiIndex(d, std::move(digits));
  }

  std::size_t d() const noexcept { return d_; }
  std::size_t n() const noexcept { return digits_.size(); }
  std::size_t operator[](std::size_t r) const { return digits_.at(r); }
  const std::vector<std::size_t>& digits() const noexcept { return digits_; }

  /// Big-endian base-d value of the digit string.
  std::size_t encode() const {
    std::size_t value = 0;
    for (std::size_t digit : digits_) value = value * d_ + digit;
    return value;
  }

  bool is_constant() const {
    return std::adjacent_find(digits_.begin(), digits_.end(),
                              std::not_equal_to<>()) == digits_.end();
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t r = 0; r < digits_.size(); ++r) {
      if (r) out += ",";
      out += std::to_string(digits_[r]);
    }
    return out + ")";
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::size_t d_;
  std::vector<std::size_t> digits_;
};

/// Kronecker product. Throws CapacityError if either result dimension
/// exceeds `cap`.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                          std::size_t cap = kDefaultDimensionCap) {
  const auto rows = static_cast<std::size_t>(a.rows() * b.rows());
  const auto cols = static_cast<std::size_t>(a.cols() * b.cols());
  if (rows > cap || cols > cap) {
    throw CapacityError("Kronecker product too large", std::max(rows, cols),
                        cap);
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Largest entrywise modulus of M - M^dagger.
inline double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of a Hermitian matrix.
inline double eig_min_hermitian(const ComplexMatrix& m,
                                const Tolerances& tol = {}) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ContractViolationError("eigenvalues requested for a non-square matrix");
  }
  const double defect = hermitian_defect(m);
  if (defect > tol.hermitian) {
    throw ContractViolationError("matrix is not Hermitian (defect " +
                                 std::to_string(defect) + ")");
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ContractViolationError("Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues()(0);
}

/// Transposes the tensor factors listed in `subsystems`: the entry at
/// (j, k) moves to (j', k') where j'_r = k_r and k'_r = j_r for r in the set.
/// An empty set returns the input unchanged.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                       const std::set<std::size_t>& subsystems,
                                       std::size_t d, std::size_t n) {
  const std::size_t dim = checked_power(d, n);
  if (static_cast<std::size_t>(m.rows()) != dim ||
      static_cast<std::size_t>(m.cols()) != dim) {
    throw InvalidParameterError("matrix is not " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " for d = " +
                                std::to_string(d) + ", n = " +
                                std::to_string(n));
  }
  for (std::size_t r : subsystems) {
    if (r >= n) {
      throw InvalidParameterError("qudit position " + std::to_string(r) +
                                  " out of range for n = " + std::to_string(n));
    }
  }
  if (subsystems.empty()) return m;

  // place[r] = d^(n-1-r), the weight of digit r in the linear index.
  std::vector<std::size_t> place(n);
  for (std::size_t r = 0, w = dim; r < n; ++r) place[r] = (w /= d);

  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t new_row = row;
      std::size_t new_col = col;
      for (std::size_t r : subsystems) {
        const std::size_t jr = (row / place[r]) % d;
        const std::size_t kr = (col / place[r]) % d;
        new_row = new_row - jr * place[r] + kr * place[r];
        new_col = new_col - kr * place[r] + jr * place[r];
      }
      out(static_cast<Eigen::Index>(new_row),
          static_cast<Eigen::Index>(new_col)) =
          m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
  }
  return out;
}

/// Whether a PSD check runs when a DensityMatrix is built.
enum class PsdCheck { kEager, kSkip };

/// Dense Hermitian unit-trace matrix on d^n dimensions.
///
/// Hermiticity and the trace are always checked on construction. The
/// positive-semidefinite check costs an eigensolve and can be deferred.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::size_t d, std::size_t n,
                PsdCheck psd = PsdCheck::kEager, const Tolerances& tol = {})
      : d_(d), n_(n), matrix_(std::move(matrix)) {
    const std::size_t dim = checked_power(d, n, kDefaultDimensionCap);
    if (static_cast<std::size_t>(matrix_.rows()) != dim ||
        static_cast<std::size_t>(matrix_.cols()) != dim) {
      throw InvalidParameterError("density matrix must be " +
                                  std::to_string(dim) + "x" +
                                  std::to_string(dim));
    }
    const double defect = hermitian_defect(matrix_);
    if (defect > tol.hermitian) {
      throw ContractViolationError("density matrix is not Hermitian (defect " +
                                   std::to_string(defect) + ")");
    }
    const double trace_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
    if (trace_err > tol.trace) {
      throw ContractViolationError("density matrix trace differs from 1 by " +
                                   std::to_string(trace_err));
    }
    if (psd == PsdCheck::kEager) {
      const double lo = eig_min_hermitian(matrix_, tol);
      if (lo < -tol.psd) {
        throw ContractViolationError(
            "density matrix is not positive semidefinite (min eigenvalue " +
            std::to_string(lo) + ")");
      }
    }
  }

  std::size_t d() const noexcept { return d_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(matrix_.rows());
  }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  Complex operator()(const MultiIndex& row, const MultiIndex& col) const {
    return matrix_(static_cast<Eigen::Index>(row.encode()),
                   static_cast<Eigen::Index>(col.encode()));
  }

  double min_eigenvalue(const Tolerances& tol = {}) const {
    return eig_min_hermitian(matrix_, tol);
  }

 private:
  std::size_t d_;
  std::size_t n_;
  ComplexMatrix matrix_;
};

/// Maximum entrywise |a - b|.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace wernersep
