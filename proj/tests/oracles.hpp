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

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "wernersep/wernersep.hpp"

namespace wernersep::oracle {

/// Entrywise Kronecker product of two dense matrices by index arithmetic.
inline ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

/// Werner state assembled as (1-s) I/d^n + s |Psi><Psi| from explicitly
/// tensored basis kets.
inline ComplexMatrix werner_by_kets(std::size_t d, std::size_t n, double s) {
  std::size_t dim = 1;
  for (std::size_t r = 0; r < n; ++r) dim *= d;
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < d; ++j) {
    ComplexMatrix ket = ComplexMatrix::Ones(1, 1);
    ComplexMatrix e = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), 1);
    e(static_cast<Eigen::Index>(j), 0) = 1.0;
    for (std::size_t r = 0; r < n; ++r) ket = naive_kron(ket, e);
    psi += ket.col(0) / std::sqrt(static_cast<double>(d));
  }
  const auto size = static_cast<Eigen::Index>(dim);
  return (1.0 - s) / static_cast<double>(dim) *
             ComplexMatrix::Identity(size, size) +
         s * psi * psi.adjoint();
}

/// Sum over terms of weight * kron_r |psi_r><psi_r|, built from density
/// matrices rather than state vectors.
inline ComplexMatrix mixture_by_density_kron(const SeparableCertificate& cert) {
  std::size_t dim = 1;
  for (std::size_t r = 0; r < cert.n; ++r) dim *= cert.d;
  const auto size = static_cast<Eigen::Index>(dim);
  ComplexMatrix sum = ComplexMatrix::Zero(size, size);
  for (const auto& term : cert.terms) {
    ComplexMatrix prod = ComplexMatrix::Ones(1, 1);
    for (const auto& local : term.locals) {
      prod = naive_kron(prod, local * local.adjoint());
    }
    sum += term.weight * prod;
  }
  return sum;
}

/// The four units as std::complex<long long>, independent of GaussianInt.
inline std::vector<std::vector<std::complex<long long>>> brute_ensemble(
    std::size_t d) {
  static const std::array<std::complex<long long>, 4> units = {
      std::complex<long long>(1, 0), std::complex<long long>(-1, 0),
      std::complex<long long>(0, 1), std::complex<long long>(0, -1)};
  std::size_t count = 1;
  for (std::size_t r = 0; r < d; ++r) count *= 4;
  std::vector<std::vector<std::complex<long long>>> out;
  for (std::size_t m = 0; m < count; ++m) {
    std::vector<std::complex<long long>> z(d);
    std::size_t rest = m;
    for (std::size_t r = d; r-- > 0;) {
      z[r] = units[rest % 4];
      rest /= 4;
    }
    out.push_back(z);
  }
  return out;
}

/// Largest s in [0, 1] with every scanned Cauchy-Schwarz margin of the
/// Werner state nonnegative, by bisection on the assembled matrices.
inline double max_s_by_bisection(std::size_t d, std::size_t n,
                                 QuadrupleScan mode, double tol = 1e-13) {
  auto feasible = [&](double s) {
    const DensityMatrix rho(werner_by_kets(d, n, s), d, n, PsdCheck::kSkip);
    bool ok = true;
    for_each_quadruple(d, n, mode, [&](const IndexQuadruple& q) {
      if (ok && cauchy_schwarz_margin(rho, q) < 0.0) ok = false;
    });
    return ok;
  };
  double lo = 0.0, hi = 1.0;
  if (feasible(hi)) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

inline ComplexVector random_unit_vector(std::size_t dim, std::mt19937& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols,
                                   std::mt19937& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

/// Random density matrix G G^dagger / tr.
inline ComplexMatrix random_density(std::size_t dim, std::mt19937& rng) {
  const auto size = static_cast<Eigen::Index>(dim);
  const ComplexMatrix g = random_matrix(size, size, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

inline FixedPhases random_phases(std::size_t d, std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<Complex> z(d);
  for (auto& v : z) v = std::polar(1.0, angle(rng));
  return FixedPhases(z);
}

}  // namespace wernersep::oracle
