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

// Command-line front end. Kept in a header so tests can drive run()
// in-process.
//
// Exit codes: 0 ok, 1 usage or input error, 2 threshold exceeded,
// 3 verification failed, 4 capacity exceeded.

#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "wernersep/wernersep.hpp"

namespace wernersep::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kThresholdExceeded = 2,
  kVerificationFailed = 3,
  kCapacityExceeded = 4,
};

struct Config {
  std::size_t d = 2;
  std::size_t n = 2;
  std::string s_text;
  std::string out_path;
  std::string cert_path;
  std::size_t term_cap = kDefaultTermCap;
  VerifyTolerances tolerances;
  bool json = false;
  bool full_scan = false;
};

namespace detail {

using OJson = nlohmann::ordered_json;

inline ExactRational parse_s(const std::string& text) {
  const ExactRational s = parse_rational(text);
  if (s < 0 || s > 1) {
    throw InvalidParameterError("s must lie in [0, 1], got " + text);
  }
  return s;
}

inline int cmd_threshold(const Config& cfg, std::ostream& out) {
  const ExactRational t = threshold(cfg.d, cfg.n);
  if (cfg.json) {
    OJson j;
    j["d"] = cfg.d;
    j["n"] = cfg.n;
    j["threshold"] = to_string(t);
    j["decimal"] = to_double(t);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(t) << " = " << format_short(to_double(t)) << "\n";
  }
  return kOk;
}

inline int cmd_generate(const Config& cfg, std::ostream& out) {
  const ExactRational s = parse_s(cfg.s_text);
  const auto cert = decompose_werner(cfg.d, cfg.n, s, cfg.term_cap);
  if (cfg.out_path.empty()) {
    out << serialize(cert);
  } else {
    write_certificate_file(cert, cfg.out_path);
  }
  return kOk;
}

inline void print_report(const VerificationReport& r, bool json,
                         std::ostream& out) {
  if (json) {
    OJson j;
    j["term_count"] = r.term_count;
    j["weights_sum_err"] = r.weights_sum_err;
    j["worst_local_norm_err"] = r.worst_local_norm_err;
    j["reconstruction_residual_maxabs"] = r.reconstruction_residual_maxabs;
    j["reconstruction_residual_frobenius"] = r.reconstruction_residual_frobenius;
    j["min_weight"] = r.min_weight;
    j["verdict"] = r.pass ? "pass" : "fail";
    out << j.dump(2) << "\n";
    return;
  }
  out << "term_count: " << r.term_count << "\n"
      << "weights_sum_err: " << format_short(r.weights_sum_err) << "\n"
      << "worst_local_norm_err: " << format_short(r.worst_local_norm_err) << "\n"
      << "reconstruction_residual_maxabs: "
      << format_short(r.reconstruction_residual_maxabs) << "\n"
      << "reconstruction_residual_frobenius: "
      << format_short(r.reconstruction_residual_frobenius) << "\n"
      << "min_weight: " << format_short(r.min_weight) << "\n"
      << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
  const ExactRational s = parse_s(cfg.s_text);
  const auto cert = read_certificate_file(cfg.cert_path);
  const auto target = werner(cfg.d, cfg.n, s);
  const auto report = verify(cert, target, cfg.tolerances);
  print_report(report, cfg.json, out);
  return report.pass ? kOk : kVerificationFailed;
}

inline std::string cut_name(std::size_t r) {
  return "{" + std::to_string(r) + "}";
}

inline int cmd_criteria(const Config& cfg, std::ostream& out) {
  const ExactRational s = parse_s(cfg.s_text);
  const auto rho = werner(cfg.d, cfg.n, s);
  const auto worst = worst_cauchy_schwarz_margin(
      rho, cfg.full_scan ? QuadrupleScan::kFull : QuadrupleScan::kTwoSymbol);
  const auto ppt = ppt_single_qudit_min_eigs(rho);
  const ExactRational t = threshold(cfg.d, cfg.n);

  if (cfg.json) {
    OJson j;
    j["d"] = cfg.d;
    j["n"] = cfg.n;
    j["s"] = to_string(s);
    j["threshold"] = to_string(t);
    j["cauchy_schwarz"] = {
        {"worst_margin", worst.margin},
        {"j", worst.quadruple->j().digits()},
        {"k", worst.quadruple->k().digits()},
        {"u", worst.quadruple->u().digits()},
        {"v", worst.quadruple->v().digits()},
    };
    OJson cuts = OJson::array();
    for (std::size_t r = 0; r < ppt.size(); ++r) {
      cuts.push_back({{"cut", std::vector<std::size_t>{r}}, {"min_eig", ppt[r]}});
    }
    j["ppt"] = cuts;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "d = " << cfg.d << ", n = " << cfg.n << ", s = " << to_string(s)
      << ", threshold = " << to_string(t) << "\n";
  out << "worst Cauchy-Schwarz margin: " << format_short(worst.margin) << " at "
      << worst.quadruple->to_string() << "\n";
  for (std::size_t r = 0; r < ppt.size(); ++r) {
    out << "PPT min eigenvalue, cut " << cut_name(r) << ": "
        << format_short(ppt[r]) << "\n";
  }
  return kOk;
}

inline constexpr std::size_t kMaxFourthMomentScan = 5;

inline int cmd_moments(const Config& cfg, std::ostream& out) {
  const std::size_t d = cfg.d;
  const auto sums = moment_sums(d);
  const std::int64_t count = std::int64_t{1} << (2 * d);

  bool first_zero = true, second_zero = true, abs_ok = true;
  for (std::size_t r = 0; r < d; ++r) {
    first_zero = first_zero && sums.first[r] == GaussianInt{};
    second_zero = second_zero && sums.second[r] == GaussianInt{};
    abs_ok = abs_ok && sums.abs_squared[r] == count;
  }
  bool cross_zero = true;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) {
      if (r != s) cross_zero = cross_zero && cross_moment(d, r, s) == GaussianInt{};
    }
  }
  const bool fourth_checked = d >= 2 && d <= kMaxFourthMomentScan;
  bool fourth_ok = true;
  if (fourth_checked) {
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s) {
            if (j == k || r == s) continue;
            const auto m = fourth_moment(d, j, k, r, s);
            const int expect = (j == r && k == s) ? 1 : 0;
            fourth_ok = fourth_ok && m.re == expect && m.im == 0;
          }
  }

  if (cfg.json) {
    OJson j;
    j["d"] = d;
    j["ensemble_size"] = count;
    j["first_moments_zero"] = first_zero;
    j["second_moments_zero"] = second_zero;
    j["abs_square_sums_equal_ensemble_size"] = abs_ok;
    j["cross_moments_zero"] = cross_zero;
    j["fourth_moment_is_delta"] =
        fourth_checked ? OJson(fourth_ok) : OJson(nullptr);
    out << j.dump(2) << "\n";
  } else {
    auto yes = [](bool b) { return b ? "yes" : "NO"; };
    out << "ensemble size: " << count << " = 4^" << d << "\n"
        << "sum_m z_r = 0 for every slot: " << yes(first_zero) << "\n"
        << "sum_m z_r^2 = 0 for every slot: " << yes(second_zero) << "\n"
        << "sum_m |z_r|^2 = " << count << " for every slot: " << yes(abs_ok)
        << "\n"
        << "sum_m conj(z_r) z_s = 0 for r != s: " << yes(cross_zero) << "\n";
    if (fourth_checked) {
      out << "4^-d sum_m z_j conj(z_k) conj(z_r) z_s = delta(j,r) delta(k,s): "
          << yes(fourth_ok) << "\n";
    } else {
      out << "fourth-moment scan skipped (d outside [2, "
          << kMaxFourthMomentScan << "])\n";
    }
  }
  const bool all = first_zero && second_zero && abs_ok && cross_zero && fourth_ok;
  return all ? kOk : kVerificationFailed;
}

}  // namespace detail

/// Parses argv and dispatches. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Separability tools for generalized Werner states"};
  app.require_subcommand(1);
  Config cfg;

  auto add_shape = [&cfg](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "local dimension")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    sub->add_option("--n", cfg.n, "number of qudits")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  };
  auto add_s = [&cfg](CLI::App* sub) {
    sub->add_option("--s", cfg.s_text, "mixing weight, decimal or p/q")
        ->required();
  };

  auto* threshold_cmd = app.add_subcommand("threshold", "exact separability threshold");
  add_shape(threshold_cmd);
  threshold_cmd->add_flag("--json", cfg.json, "machine-readable output");

  auto* generate_cmd = app.add_subcommand("generate", "write a separable certificate");
  add_shape(generate_cmd);
  add_s(generate_cmd);
  generate_cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
  generate_cmd->add_option("--term-cap", cfg.term_cap, "maximum number of terms")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against W(s)");
  verify_cmd->add_option("--cert", cfg.cert_path, "certificate file")
      ->required()
      ->check(CLI::ExistingFile);
  add_shape(verify_cmd);
  add_s(verify_cmd);
  verify_cmd->add_option("--tol-weights", cfg.tolerances.weights);
  verify_cmd->add_option("--tol-norms", cfg.tolerances.norms);
  verify_cmd->add_option("--tol-residual", cfg.tolerances.residual);
  verify_cmd->add_flag("--json", cfg.json, "machine-readable output");

  auto* criteria_cmd = app.add_subcommand("criteria", "necessary-condition margins");
  add_shape(criteria_cmd);
  add_s(criteria_cmd);
  criteria_cmd->add_flag("--full-scan", cfg.full_scan,
                         "scan every index quadruple instead of two-symbol ones");
  criteria_cmd->add_flag("--json", cfg.json, "machine-readable output");

  auto* moments_cmd = app.add_subcommand("moments", "exact phase-ensemble moments");
  moments_cmd->add_option("--d", cfg.d, "vector length")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxEnsembleDimension));
  moments_cmd->add_flag("--json", cfg.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (threshold_cmd->parsed()) return detail::cmd_threshold(cfg, out);
    if (generate_cmd->parsed()) return detail::cmd_generate(cfg, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(cfg, out);
    if (criteria_cmd->parsed()) return detail::cmd_criteria(cfg, out);
    if (moments_cmd->parsed()) return detail::cmd_moments(cfg, out);
  } catch (const ThresholdExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kThresholdExceeded;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacityExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wernersep::cli
