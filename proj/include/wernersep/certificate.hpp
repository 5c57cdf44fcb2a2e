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

// Certificate documents and the independent verifier.
//
// Document layout (UTF-8 JSON, one term per line, fixed key order):
//
//   {
//     "format_version": "1",
//     "d": 2,
//     "n": 2,
//     "target": {"family": "werner", "params": {"s": "1/3"}},
//     "term_count": 18,
//     "terms": [
//       {"weight": 0.16666666666666666, "locals": [[[1,0],[0,0]], ...]},
//       ...
//     ]
//   }
//
// Reals are written with 17 significant digits, complex numbers as [re, im].
// The document never contains a density matrix; verify() rebuilds the
// mixture from the local states.

#pragma once

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "wernersep/decomposition.hpp"
#include "wernersep/errors.hpp"
#include "wernersep/format.hpp"
#include "wernersep/tensor_core.hpp"

namespace wernersep {

inline constexpr std::string_view kFormatVersion = "1";

namespace detail {

inline std::string json_string(const std::string& s) {
  return nlohmann::json(s).dump();
}

}  // namespace detail

/// Renders the certificate document. Rejects certificates that break an
/// invariant, including empty ones.
inline std::string serialize(const SeparableCertificate& cert) {
  cert.check_invariants();
  std::string out;
  out += "{\n";
  out += "  \"format_version\": " + detail::json_string(std::string(kFormatVersion)) + ",\n";
  out += "  \"d\": " + std::to_string(cert.d) + ",\n";
  out += "  \"n\": " + std::to_string(cert.n) + ",\n";
  out += "  \"target\": {\"family\": " + detail::json_string(cert.target.family) +
         ", \"params\": {";
  for (std::size_t i = 0; i < cert.target.params.size(); ++i) {
    if (i) out += ", ";
    out += detail::json_string(cert.target.params[i].first) + ": " +
           detail::json_string(cert.target.params[i].second);
  }
  out += "}},\n";
  out += "  \"term_count\": " + std::to_string(cert.terms.size()) + ",\n";
  out += "  \"terms\": [\n";
  for (std::size_t a = 0; a < cert.terms.size(); ++a) {
    const auto& term = cert.terms[a];
    out += "    {\"weight\": " + format_real(term.weight) + ", \"locals\": [";
    for (std::size_t r = 0; r < term.locals.size(); ++r) {
      if (r) out += ",";
      out += "[";
      for (Eigen::Index i = 0; i < term.locals[r].size(); ++i) {
        if (i) out += ",";
        out += format_complex(term.locals[r](i));
      }
      out += "]";
    }
    out += "]}";
    out += a + 1 < cert.terms.size() ? ",\n" : "\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

namespace detail {

using Json = nlohmann::ordered_json;

inline const Json& require(const Json& obj, const char* key,
                           const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(where + ": missing field \"" + key + "\"");
  }
  return obj.at(key);
}

inline std::size_t require_size(const Json& obj, const char* key) {
  const Json& v = require(obj, key, "header");
  if (!v.is_number_unsigned()) {
    throw ValidationError(std::string("header: \"") + key +
                          "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

inline double require_real(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ValidationError(where + ": expected a number");
  return v.get<double>();
}

}  // namespace detail

/// Parses and validates a certificate document.
inline SeparableCertificate parse(std::string_view doc) {
  detail::Json root;
  try {
    root = detail::Json::parse(doc.begin(), doc.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed certificate document: " + std::string(e.what()),
                     e.byte);
  }
  if (!root.is_object()) throw ValidationError("document root must be an object");

  const auto& version = detail::require(root, "format_version", "header");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    throw ValidationError("header: unsupported format_version");
  }

  SeparableCertificate cert;
  cert.d = detail::require_size(root, "d");
  cert.n = detail::require_size(root, "n");
  if (cert.d < 1 || cert.n < 1) {
    throw ValidationError("header: d and n must be >= 1");
  }

  const auto& target = detail::require(root, "target", "header");
  const auto& family = detail::require(target, "family", "target");
  if (!family.is_string()) throw ValidationError("target: family must be a string");
  cert.target.family = family.get<std::string>();
  const auto& params = detail::require(target, "params", "target");
  if (!params.is_object()) throw ValidationError("target: params must be an object");
  for (const auto& [key, value] : params.items()) {
    if (!value.is_string()) {
      throw ValidationError("target: param \"" + key + "\" must be a string");
    }
    cert.target.params.emplace_back(key, value.get<std::string>());
  }

  const std::size_t declared = detail::require_size(root, "term_count");
  const auto& terms = detail::require(root, "terms", "header");
  if (!terms.is_array()) throw ValidationError("header: terms must be an array");
  if (terms.size() != declared) {
    throw ValidationError("header: term_count " + std::to_string(declared) +
                          " does not match " + std::to_string(terms.size()) +
                          " terms");
  }

  cert.terms.reserve(terms.size());
  for (std::size_t a = 0; a < terms.size(); ++a) {
    const std::string where = "term " + std::to_string(a);
    const auto& t = terms[a];
    ProductTerm term;
    term.weight = detail::require_real(detail::require(t, "weight", where), where);
    const auto& locals = detail::require(t, "locals", where);
    if (!locals.is_array() || locals.size() != cert.n) {
      throw ValidationError(where + ": expected " + std::to_string(cert.n) +
                            " local states");
    }
    for (std::size_t r = 0; r < cert.n; ++r) {
      const std::string at = where + ", qudit " + std::to_string(r);
      const auto& vec = locals[r];
      if (!vec.is_array() || vec.size() != cert.d) {
        throw ValidationError(at + ": local state must have length " +
                              std::to_string(cert.d));
      }
      ComplexVector psi(static_cast<Eigen::Index>(cert.d));
      for (std::size_t i = 0; i < cert.d; ++i) {
        const auto& z = vec[i];
        if (!z.is_array() || z.size() != 2) {
          throw ValidationError(at + ": amplitudes must be [re, im] pairs");
        }
        psi(static_cast<Eigen::Index>(i)) =
            Complex(detail::require_real(z[0], at), detail::require_real(z[1], at));
      }
      term.locals.push_back(std::move(psi));
    }
    cert.terms.push_back(std::move(term));
  }
  cert.check_invariants();
  return cert;
}

inline SeparableCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return parse(buf.str());
}

inline void write_certificate_file(const SeparableCertificate& cert,
                                   const std::string& path) {
  const std::string doc = serialize(cert);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << doc;
  out.flush();
  if (!out) throw IoError("error writing " + path);
}

struct VerifyTolerances {
  double weights = 1e-12;
  double norms = 1e-12;
  double residual = 1e-10;
};

struct VerificationReport {
  double weights_sum_err = 0.0;
  double worst_local_norm_err = 0.0;
  double reconstruction_residual_maxabs = 0.0;
  double reconstruction_residual_frobenius = 0.0;
  double min_weight = 0.0;
  std::size_t term_count = 0;
  bool pass = false;
};

/// Rebuilds sum_a p(a) (x)_r |psi_r(a)><psi_r(a)| from the certificate
/// alone and compares it to `target`. Terms are accumulated in document
/// order. A negative weight fails the verdict.
inline VerificationReport verify(const SeparableCertificate& cert,
                                 const DensityMatrix& target,
                                 const VerifyTolerances& tol = {}) {
  if (cert.d != target.d() || cert.n != target.n()) {
    throw InvalidParameterError(
        "certificate shape (d = " + std::to_string(cert.d) +
        ", n = " + std::to_string(cert.n) + ") does not match the target (d = " +
        std::to_string(target.d()) + ", n = " + std::to_string(target.n()) + ")");
  }
  const auto dim = static_cast<Eigen::Index>(target.dim());

  VerificationReport report;
  report.term_count = cert.terms.size();
  report.min_weight = cert.terms.empty() ? 0.0
                                         : std::numeric_limits<double>::infinity();
  ComplexMatrix mixture = ComplexMatrix::Zero(dim, dim);
  double total = 0.0;
  ComplexVector product(dim);
  for (std::size_t a = 0; a < cert.terms.size(); ++a) {
    const auto& term = cert.terms[a];
    if (term.locals.size() != cert.n) {
      throw InvalidParameterError("term " + std::to_string(a) +
                                  " has the wrong number of local states");
    }
    total += term.weight;
    report.min_weight = std::min(report.min_weight, term.weight);

    // Tensor the local vectors, most significant qudit first.
    Eigen::Index len = 1;
    product(0) = 1.0;
    for (const auto& local : term.locals) {
      if (static_cast<std::size_t>(local.size()) != cert.d) {
        throw InvalidParameterError("term " + std::to_string(a) +
                                    " has a local state of the wrong length");
      }
      report.worst_local_norm_err =
          std::max(report.worst_local_norm_err, std::abs(local.norm() - 1.0));
      for (Eigen::Index i = len; i-- > 0;) {
        const Complex head = product(i);
        for (Eigen::Index b = 0; b < local.size(); ++b) {
          product(i * local.size() + b) = head * local(b);
        }
      }
      len *= local.size();
    }
    mixture.noalias() += term.weight * (product * product.adjoint());
  }

  report.weights_sum_err = std::abs(total - 1.0);
  const ComplexMatrix diff = mixture - target.matrix();
  report.reconstruction_residual_maxabs = diff.cwiseAbs().maxCoeff();
  report.reconstruction_residual_frobenius = diff.norm();
  report.pass = !cert.terms.empty() && report.min_weight >= 0.0 &&
                report.weights_sum_err <= tol.weights &&
                report.worst_local_norm_err <= tol.norms &&
                report.reconstruction_residual_maxabs <= tol.residual;
  return report;
}

}  // namespace wernersep
