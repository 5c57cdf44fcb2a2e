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

// Necessary conditions for full separability: the exact Werner threshold,
// the Cauchy-Schwarz element inequality and the partial-transpose test.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wernersep/errors.hpp"
#include "wernersep/rational.hpp"
#include "wernersep/tensor_core.hpp"
#include "wernersep/werner_states.hpp"

namespace wernersep {

/// 1 / (1 + d^(n-1)).
inline ExactRational threshold(std::size_t d, std::size_t n) {
  if (d < 2) throw InvalidParameterError("threshold needs d >= 2");
  if (n < 2) throw InvalidParameterError("threshold needs n >= 2");
  BigInt power = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) power *= d;
  return ExactRational(BigInt(1), power + 1);
}

/// Indices (j, k, u, v) with j_r != k_r and {u_r, v_r} = {j_r, k_r} for
/// every position r.
class IndexQuadruple {
 public:
  IndexQuadruple(MultiIndex j, MultiIndex k, MultiIndex u, MultiIndex v)
      : j_(std::move(j)), k_(std::move(k)), u_(std::move(u)), v_(std::move(v)) {
    const std::size_t d = j_.d();
    const std::size_t n = j_.n();
    for (const MultiIndex* m : {&k_, &u_, &v_}) {
      if (m->d() != d || m->n() != n) {
        throw InvalidParameterError("quadruple indices have mismatched shapes");
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (j_[r] == k_[r]) {
        throw InvalidParameterError("j and k agree at position " +
                                    std::to_string(r));
      }
      const bool straight = u_[r] == j_[r] && v_[r] == k_[r];
      const bool swapped = u_[r] == k_[r] && v_[r] == j_[r];
      if (!straight && !swapped) {
        throw InvalidParameterError("{u, v} != {j, k} at position " +
                                    std::to_string(r));
      }
    }
  }

  const MultiIndex& j() const noexcept { return j_; }
  const MultiIndex& k() const noexcept { return k_; }
  const MultiIndex& u() const noexcept { return u_; }
  const MultiIndex& v() const noexcept { return v_; }
  std::size_t d() const noexcept { return j_.d(); }
  std::size_t n() const noexcept { return j_.n(); }

  std::string to_string() const {
    return "j=" + j_.to_string() + " k=" + k_.to_string() +
           " u=" + u_.to_string() + " v=" + v_.to_string();
  }

 private:
  MultiIndex j_, k_, u_, v_;
};

/// sqrt(rho_jj rho_kk) - |rho_uv|. Negative values witness entanglement.
inline double cauchy_schwarz_margin(const DensityMatrix& rho,
                                    const IndexQuadruple& q) {
  if (q.d() != rho.d() || q.n() != rho.n()) {
    throw InvalidParameterError("quadruple shape does not match the state");
  }
  const double jj = rho(q.j(), q.j()).real();
  const double kk = rho(q.k(), q.k()).real();
  return std::sqrt(std::max(0.0, jj * kk)) - std::abs(rho(q.u(), q.v()));
}

/// j = (0,1,...,1), k = (1,0,...,0), u = (0,...,0), v = (1,...,1). At the
/// threshold its margin on the Werner state is exactly zero.
inline IndexQuadruple witness_quadruple(std::size_t n) {
  std::vector<std::size_t> j(n, 1), k(n, 0);
  j[0] = 0;
  k[0] = 1;
  return IndexQuadruple(MultiIndex(2, j), MultiIndex(2, k),
                        MultiIndex::constant(2, n, 0),
                        MultiIndex::constant(2, n, 1));
}

/// Same quadruple embedded in local dimension d >= 2.
inline IndexQuadruple witness_quadruple(std::size_t d, std::size_t n) {
  const auto q = witness_quadruple(n);
  return IndexQuadruple(MultiIndex(d, q.j().digits()),
                        MultiIndex(d, q.k().digits()),
                        MultiIndex(d, q.u().digits()),
                        MultiIndex(d, q.v().digits()));
}

enum class QuadrupleScan {
  /// j, k over two symbols a < b with k the a<->b swap of j; O(d^2 4^n).
  kTwoSymbol,
  /// Every admissible quadruple; O(d^n (d-1)^n 2^n).
  kFull,
};

inline constexpr std::size_t kMaxFullScan = std::size_t{1} << 22;

/// Calls fn(const IndexQuadruple&) for each quadruple in canonical order.
template <typename Fn>
void for_each_quadruple(std::size_t d, std::size_t n, QuadrupleScan mode,
                        Fn&& fn) {
  if (d < 2 || n < 1) throw InvalidParameterError("need d >= 2 and n >= 1");
  if (n >= 8 * sizeof(std::size_t) / 2) {
    throw CapacityError("quadruple scan too large", n, 8 * sizeof(std::size_t) / 2);
  }
  const std::size_t choices = std::size_t{1} << n;

  auto emit_all_orientations = [&](const std::vector<std::size_t>& j,
                                   const std::vector<std::size_t>& k) {
    std::vector<std::size_t> u(n), v(n);
    for (std::size_t mask = 0; mask < choices; ++mask) {
      for (std::size_t r = 0; r < n; ++r) {
        const bool flip = (mask >> (n - 1 - r)) & 1u;
        u[r] = flip ? k[r] : j[r];
        v[r] = flip ? j[r] : k[r];
      }
      fn(IndexQuadruple(MultiIndex(d, j), MultiIndex(d, k), MultiIndex(d, u),
                        MultiIndex(d, v)));
    }
  };

  std::vector<std::size_t> j(n), k(n);
  if (mode == QuadrupleScan::kTwoSymbol) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        for (std::size_t pattern = 0; pattern < choices; ++pattern) {
          for (std::size_t r = 0; r < n; ++r) {
            const bool high = (pattern >> (n - 1 - r)) & 1u;
            j[r] = high ? b : a;
            k[r] = high ? a : b;
          }
          emit_all_orientations(j, k);
        }
      }
    }
    return;
  }

  const std::size_t dim = checked_power(d, n);
  const std::size_t others = checked_power(d - 1, n);
  if (dim > kMaxFullScan / others || dim * others > kMaxFullScan / choices) {
    throw CapacityError("full quadruple scan too large", SIZE_MAX, kMaxFullScan);
  }
  for (std::size_t jl = 0; jl < dim; ++jl) {
    j = MultiIndex::decode(jl, d, n).digits();
    for (std::size_t kl = 0; kl < others; ++kl) {
      // Digit r of kl in base d-1 selects a symbol from [0, d) \ {j_r}.
      std::size_t rest = kl;
      for (std::size_t r = n; r-- > 0;) {
        const std::size_t pick = rest % (d - 1);
        rest /= (d - 1);
        k[r] = pick < j[r] ? pick : pick + 1;
      }
      emit_all_orientations(j, k);
    }
  }
}

struct WorstMargin {
  double margin = std::numeric_limits<double>::infinity();
  std::optional<IndexQuadruple> quadruple;
};

/// Minimum Cauchy-Schwarz margin over the scanned quadruples; ties keep the
/// first quadruple in canonical order.
inline WorstMargin worst_cauchy_schwarz_margin(
    const DensityMatrix& rho, QuadrupleScan mode = QuadrupleScan::kTwoSymbol) {
  WorstMargin worst;
  for_each_quadruple(rho.d(), rho.n(), mode, [&](const IndexQuadruple& q) {
    const double m = cauchy_schwarz_margin(rho, q);
    if (m < worst.margin) {
      worst.margin = m;
      worst.quadruple = q;
    }
  });
  return worst;
}

namespace detail {

/// Werner entry W(s)[row, col] = offset + slope * s.
struct AffineEntry {
  double offset = 0.0;
  double slope = 0.0;
};

inline AffineEntry werner_entry(const MultiIndex& row, const MultiIndex& col) {
  const double noise = 1.0 / static_cast<double>(checked_power(row.d(), row.n()));
  AffineEntry e;
  if (row == col) {
    e.offset = noise;
    e.slope = -noise;
  }
  if (row.is_constant() && col.is_constant()) {
    e.slope += 1.0 / static_cast<double>(row.d());
  }
  return e;
}

/// Largest t in [0, 1] such that a x^2 + b x + c >= 0 for all x in [0, t].
/// Returns 0 when the polynomial is already negative at 0.
inline double largest_nonnegative_prefix(double a, double b, double c) {
  auto f = [&](double x) { return (a * x + b) * x + c; };
  if (f(0.0) < 0.0) return 0.0;
  std::vector<double> roots;
  if (a == 0.0) {
    if (b != 0.0) roots.push_back(-c / b);
  } else {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      // Cancellation-free pair.
      const double qv = -0.5 * (b + std::copysign(sq, b));
      roots.push_back(qv / a);
      if (qv != 0.0) roots.push_back(c / qv);
    }
  }
  std::sort(roots.begin(), roots.end());
  // f keeps its sign between consecutive roots; probe each gap's midpoint.
  double left = 0.0;
  for (double root : roots) {
    if (!(root > left) || root >= 1.0) continue;
    if (f(0.5 * (left + root)) < 0.0) return left;
    left = root;
  }
  return f(0.5 * (left + 1.0)) < 0.0 ? left : 1.0;
}

}  // namespace detail

/// Largest s for which every scanned Cauchy-Schwarz margin of W(s) is
/// nonnegative. Each margin condition rho_jj rho_kk >= |rho_uv|^2 is a
/// quadratic in s because the Werner entries are affine in s, so every
/// crossing is found in closed form.
inline double werner_necessary_max_s(
    std::size_t d, std::size_t n,
    QuadrupleScan mode = QuadrupleScan::kTwoSymbol) {
  if (d < 2 || n < 2) throw InvalidParameterError("need d >= 2 and n >= 2");
  double best = 1.0;
  for_each_quadruple(d, n, mode, [&](const IndexQuadruple& q) {
    const auto a = detail::werner_entry(q.j(), q.j());
    const auto b = detail::werner_entry(q.k(), q.k());
    const auto c = detail::werner_entry(q.u(), q.v());
    // (a0 + a1 s)(b0 + b1 s) - (c0 + c1 s)^2
    const double quad = a.slope * b.slope - c.slope * c.slope;
    const double lin =
        a.offset * b.slope + a.slope * b.offset - 2.0 * c.offset * c.slope;
    const double cst = a.offset * b.offset - c.offset * c.offset;
    best = std::min(best, detail::largest_nonnegative_prefix(quad, lin, cst));
  });
  return best;
}

/// Minimum eigenvalue of the partial transpose over `cut`. The cut must be
/// a nonempty proper subset of the qudit positions.
inline double ppt_min_eig(const DensityMatrix& rho,
                          const std::set<std::size_t>& cut,
                          const Tolerances& tol = {}) {
  if (cut.empty()) throw InvalidParameterError("partial-transpose cut is empty");
  if (cut.size() >= rho.n()) {
    throw InvalidParameterError("partial-transpose cut must be a proper subset");
  }
  return eig_min_hermitian(
      partial_transpose(rho.matrix(), cut, rho.d(), rho.n()), tol);
}

/// ppt_min_eig for each single-qudit cut {0}, {1}, ..., {n-1}.
inline std::vector<double> ppt_single_qudit_min_eigs(const DensityMatrix& rho,
                                                     const Tolerances& tol = {}) {
  std::vector<double> out;
  out.reserve(rho.n());
  for (std::size_t r = 0; r < rho.n(); ++r) {
    out.push_back(ppt_min_eig(rho, {r}, tol));
  }
  return out;
}

}  // namespace wernersep
