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

// Explicit separable decompositions of the phase-family densities and of
// Werner states at and below the separability threshold.
//
// The phase-family density on n qudits,
//
//   rho_n(zeta) = d^-n (I + sum_{j != k} zeta_j conj(zeta_k) |j..j><k..k|),
//
// satisfies
//
//   rho_{n+1}(zeta) = 4^-d sum_m rho_n(zeta . z_m) (x) P(conj z_m),
//
// where z_m ranges over the 4^d vectors in {+1, -1, +i, -i}^d and P(v) is the
// projector onto v / sqrt(d). The averaged cross terms vanish because the
// first moments of the ensemble vanish, and the surviving fourth moment is
// delta(j, r) delta(k, s). Unrolling the recursion down to a single qudit
// (where rho_1(zeta) = P(zeta)) gives one pure product term per sequence
// (m_1, ..., m_{n-1}):
//
//   qudit 0      : P(zeta . z_{m_1} . ... . z_{m_{n-1}})
//   qudit t >= 1 : P(conj z_{m_t})
//
// each with weight 4^-(d (n-1)). New qudits are appended as the last tensor
// factor.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wernersep/criteria.hpp"
#include "wernersep/errors.hpp"
#include "wernersep/format.hpp"
#include "wernersep/phases.hpp"
#include "wernersep/rational.hpp"
#include "wernersep/tensor_core.hpp"
#include "wernersep/werner_states.hpp"

namespace wernersep {

// ---------------------------------------------------------------------------
// Moment identities of the phase-vector ensemble, in exact arithmetic.

struct MomentSums {
  std::vector<GaussianInt> first;         ///< sum_m z_r per slot
  std::vector<GaussianInt> second;        ///< sum_m z_r^2 per slot
  std::vector<std::int64_t> abs_squared;  ///< sum_m |z_r|^2 per slot
};

inline MomentSums moment_sums(std::size_t d) {
  const auto ensemble = enumerate_phase_vectors(d);
  MomentSums out{std::vector<GaussianInt>(d), std::vector<GaussianInt>(d),
                 std::vector<std::int64_t>(d, 0)};
  for (const auto& w : ensemble) {
    for (std::size_t r = 0; r < d; ++r) {
      const GaussianInt z = w.units()[r];
      out.first[r] += z;
      out.second[r] += z * z;
      out.abs_squared[r] += z.norm();
    }
  }
  return out;
}

/// sum_m conj(z_r) z_s.
inline GaussianInt cross_moment(std::size_t d, std::size_t r, std::size_t s) {
  if (r >= d || s >= d) throw InvalidParameterError("slot out of range");
  GaussianInt sum;
  for (const auto& w : enumerate_phase_vectors(d)) {
    sum += w.units()[r].conj() * w.units()[s];
  }
  return sum;
}

struct GaussianRational {
  ExactRational re;
  ExactRational im;

  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;
};

/// 4^-d sum_m z_j conj(z_k) conj(z_r) z_s, defined for j != k and r != s.
inline GaussianRational fourth_moment(std::size_t d, std::size_t j,
                                      std::size_t k, std::size_t r,
                                      std::size_t s) {
  if (j >= d || k >= d || r >= d || s >= d) {
    throw InvalidParameterError("slot out of range");
  }
  if (j == k || r == s) {
    throw InvalidParameterError("fourth moment requires j != k and r != s");
  }
  GaussianInt sum;
  const auto ensemble = enumerate_phase_vectors(d);
  for (const auto& w : ensemble) {
    const auto& z = w.units();
    sum += z[j] * z[k].conj() * z[r].conj() * z[s];
  }
  const BigInt count = BigInt(1) << (2 * d);
  return {ExactRational(BigInt(sum.re), count),
          ExactRational(BigInt(sum.im), count)};
}

// ---------------------------------------------------------------------------
// Certificates.

/// A weight and one pure local state per qudit.
struct ProductTerm {
  double weight = 0.0;
  std::vector<ComplexVector> locals;
};

/// What a certificate claims its mixture equals.
struct TargetDescriptor {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;

  friend bool operator==(const TargetDescriptor&,
                         const TargetDescriptor&) = default;
};

inline constexpr double kWeightSumTol = 1e-12;
inline constexpr double kLocalNormTol = 1e-12;

struct SeparableCertificate {
  std::size_t d = 0;
  std::size_t n = 0;
  TargetDescriptor target;
  std::vector<ProductTerm> terms;

  /// Throws ValidationError naming the first broken invariant.
  void check_invariants(double weight_tol = kWeightSumTol,
                        double norm_tol = kLocalNormTol) const {
    if (d < 1 || n < 1) throw ValidationError("certificate shape must be >= 1");
    if (terms.empty()) throw ValidationError("certificate has no terms");
    double total = 0.0;
    for (std::size_t a = 0; a < terms.size(); ++a) {
      const auto& term = terms[a];
      const std::string where = "term " + std::to_string(a);
      if (!(term.weight >= 0.0) || !std::isfinite(term.weight)) {
        throw ValidationError(where + ": weight must be nonnegative");
      }
      if (term.locals.size() != n) {
        throw ValidationError(where + ": expected " + std::to_string(n) +
                              " local states, found " +
                              std::to_string(term.locals.size()));
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (static_cast<std::size_t>(term.locals[r].size()) != d) {
          throw ValidationError(where + ", qudit " + std::to_string(r) +
                                ": local state must have length " +
                                std::to_string(d));
        }
        const double err = std::abs(term.locals[r].norm() - 1.0);
        if (!(err <= norm_tol)) {
          throw ValidationError(where + ", qudit " + std::to_string(r) +
                                ": local state norm " +
                                format_short(term.locals[r].norm()) +
                                " is not 1");
        }
      }
      total += term.weight;
    }
    if (!(std::abs(total - 1.0) <= weight_tol)) {
      throw ValidationError("weights sum to " + format_real(total) +
                            ", not 1");
    }
  }
};

inline constexpr std::size_t kDefaultTermCap = std::size_t{1} << 20;

namespace detail {

inline ComplexVector basis_vector(std::size_t d, std::size_t j) {
  ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  e(static_cast<Eigen::Index>(j)) = 1.0;
  return e;
}

inline std::size_t phase_family_term_count(std::size_t d, std::size_t n,
                                           std::size_t cap) {
  if (n == 0) throw InvalidParameterError("n must be >= 1");
  try {
    const std::size_t per_step = checked_power(4, d);
    return checked_power(per_step, n - 1, cap);
  } catch (const CapacityError& e) {
    throw CapacityError("phase-family decomposition for d = " +
                            std::to_string(d) + ", n = " + std::to_string(n) +
                            " needs 4^(d(n-1)) terms",
                        e.required(), cap);
  }
}

inline std::string describe_phases(const FixedPhases& phases) {
  std::string out = "[";
  for (std::size_t r = 0; r < phases.d(); ++r) {
    if (r) out += ",";
    out += format_complex(phases[r]);
  }
  return out + "]";
}

/// Appends the flattened phase-family terms, each with weight `weight`.
inline void append_phase_family_terms(std::size_t d, std::size_t n,
                                      const FixedPhases& phases, double weight,
                                      std::size_t count,
                                      std::vector<ProductTerm>& out) {
  const auto ensemble = enumerate_phase_vectors(d);
  // Later-qudit factors depend only on m_t; build them once.
  std::vector<ComplexVector> conj_states;
  conj_states.reserve(ensemble.size());
  for (const auto& z : ensemble) conj_states.push_back(rho1_pure(z.conj_units()));

  std::vector<std::size_t> seq(n - 1, 0);  // (m_1, ..., m_{n-1}), m_1 leading
  std::vector<GaussianInt> product(d);
  std::vector<Complex> first(d);
  for (std::size_t t = 0; t < count; ++t) {
    for (std::size_t r = 0; r < d; ++r) product[r] = GaussianInt{1, 0};
    for (std::size_t step : seq) {
      const auto& units = ensemble[step].units();
      for (std::size_t r = 0; r < d; ++r) product[r] = product[r] * units[r];
    }
    for (std::size_t r = 0; r < d; ++r) {
      first[r] = phases[r] * product[r].to_complex();
    }

    ProductTerm term;
    term.weight = weight;
    term.locals.reserve(n);
    term.locals.push_back(rho1_pure(std::span<const Complex>(first)));
    for (std::size_t step : seq) term.locals.push_back(conj_states[step]);
    out.push_back(std::move(term));

    // Odometer with the last position fastest.
    for (std::size_t pos = seq.size(); pos-- > 0;) {
      if (++seq[pos] < ensemble.size()) break;
      seq[pos] = 0;
    }
  }
}

}  // namespace detail

/// Flattened separable decomposition of rho_phase_family(d, n, phases):
/// 4^(d(n-1)) equal-weight pure product terms, ordered lexicographically by
/// (m_1, ..., m_{n-1}).
inline SeparableCertificate decompose_rho_n(std::size_t d, std::size_t n,
                                            const FixedPhases& phases,
                                            std::size_t term_cap = kDefaultTermCap) {
  if (d < 2) throw InvalidParameterError("d must be >= 2");
  if (n < 1) throw InvalidParameterError("n must be >= 1");
  if (phases.d() != d) {
    throw InvalidParameterError("expected " + std::to_string(d) +
                                " fixed phases");
  }
  if (d > kMaxEnsembleDimension) {
    throw CapacityError("phase-vector ensemble too large", d,
                        kMaxEnsembleDimension);
  }
  const std::size_t count = detail::phase_family_term_count(d, n, term_cap);
  const ExactRational weight(BigInt(1), BigInt(count));

  SeparableCertificate cert;
  cert.d = d;
  cert.n = n;
  cert.target = {"phase_family", {{"zeta", detail::describe_phases(phases)}}};
  cert.terms.reserve(count);
  detail::append_phase_family_terms(d, n, phases, to_double(weight), count,
                                    cert.terms);
  return cert;
}

/// Separable decomposition of W(s) for 0 <= s <= 1/(1 + d^(n-1)).
///
/// With s* the threshold and lambda = s / s*,
///
///   W(s) = lambda W(s*) + (1 - lambda) I / d^n,
///   W(s*) = s* (1/d) sum_j |j..j><j..j| + (1 - s*) rho_n(1),
///
/// so the certificate holds, in order: d diagonal product terms of weight
/// s/d, the 4^(d(n-1)) phase-family terms sharing lambda (1 - s*), and
/// (when s < s*) the d^n computational basis states sharing 1 - lambda.
/// Empty groups are omitted. Weights are derived from exact rationals.
inline SeparableCertificate decompose_werner(std::size_t d, std::size_t n,
                                             const ExactRational& s,
                                             std::size_t term_cap = kDefaultTermCap) {
  if (d < 2) throw InvalidParameterError("d must be >= 2");
  if (n < 2) throw InvalidParameterError("n must be >= 2");
  if (s < 0) throw InvalidParameterError("s must be >= 0, got " + to_string(s));
  const ExactRational s_star = threshold(d, n);
  if (s > s_star) {
    throw ThresholdExceededError(
        "s = " + to_string(s) + " exceeds the separability threshold " +
        to_string(s_star) + " for d = " + std::to_string(d) +
        ", n = " + std::to_string(n));
  }
  if (d > kMaxEnsembleDimension) {
    throw CapacityError("phase-vector ensemble too large", d,
                        kMaxEnsembleDimension);
  }

  const ExactRational lambda = s / s_star;
  const std::size_t family_count =
      lambda > 0 ? detail::phase_family_term_count(d, n, term_cap) : 0;
  const std::size_t diag_count = lambda > 0 ? d : 0;
  const std::size_t basis_count =
      lambda < 1 ? checked_power(d, n, term_cap) : 0;
  const std::size_t total = diag_count + family_count + basis_count;
  if (total > term_cap) {
    throw CapacityError("Werner decomposition for d = " + std::to_string(d) +
                            ", n = " + std::to_string(n) + " is too large",
                        total, term_cap);
  }

  ExactRational diag_weight = 0, family_weight = 0, basis_weight = 0;
  if (diag_count) diag_weight = lambda * s_star / BigInt(d);
  if (family_count) family_weight = lambda * (1 - s_star) / BigInt(family_count);
  if (basis_count) basis_weight = (1 - lambda) / BigInt(basis_count);
  const ExactRational exact_total = diag_weight * BigInt(diag_count) +
                                    family_weight * BigInt(family_count) +
                                    basis_weight * BigInt(basis_count);
  if (exact_total != 1) {
    throw std::logic_error("Werner decomposition weights do not sum to 1");
  }

  SeparableCertificate cert;
  cert.d = d;
  cert.n = n;
  cert.target = {"werner", {{"s", to_string(s)}}};
  cert.terms.reserve(total);

  for (std::size_t j = 0; j < diag_count; ++j) {
    ProductTerm term;
    term.weight = to_double(diag_weight);
    term.locals.assign(n, detail::basis_vector(d, j));
    cert.terms.push_back(std::move(term));
  }
  if (family_count) {
    detail::append_phase_family_terms(d, n, FixedPhases::ones(d),
                                      to_double(family_weight), family_count,
                                      cert.terms);
  }
  for (std::size_t b = 0; b < basis_count; ++b) {
    const MultiIndex digits = MultiIndex::decode(b, d, n);
    ProductTerm term;
    term.weight = to_double(basis_weight);
    term.locals.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
      term.locals.push_back(detail::basis_vector(d, digits[r]));
    }
    cert.terms.push_back(std::move(term));
  }
  return cert;
}

}  // namespace wernersep
