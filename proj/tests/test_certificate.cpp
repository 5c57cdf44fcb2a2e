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

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wernersep/certificate.hpp"

namespace wernersep {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kGolden = std::string(WERNERSEP_TEST_DATA) + "/werner_d2_n2_s1_3.json";

TEST(FormatReal, FixedPoint) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng) * std::pow(10.0, (i % 21) - 10);
    const std::string s = format_real(x);
    EXPECT_EQ(std::strtod(s.c_str(), nullptr), x);
    EXPECT_EQ(format_real(std::strtod(s.c_str(), nullptr)), s);
  }
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(0.5), "0.5");
}

TEST(Serialize, HeaderAndTermCount) {
  const auto cert = decompose_werner(2, 2, ExactRational(1, 3));
  const std::string doc = serialize(cert);
  EXPECT_EQ(doc.rfind("{\n  \"format_version\": \"1\",\n  \"d\": 2,\n  \"n\": 2,\n", 0), 0u);
  EXPECT_NE(doc.find("\"term_count\": 18"), std::string::npos);
  EXPECT_NE(doc.find("\"params\": {\"s\": \"1/3\"}"), std::string::npos);
  EXPECT_EQ(std::count(doc.begin(), doc.end(), '\n'), 9 + 18);
}

TEST(Serialize, RejectsEmptyCertificate) {
  SeparableCertificate cert;
  cert.d = 2;
  cert.n = 2;
  cert.target = {"werner", {{"s", "0"}}};
  EXPECT_THROW(serialize(cert), ValidationError);
}

TEST(Serialize, RoundTripIsByteIdentical) {
  std::mt19937 rng(5);
  for (const auto& cert : {decompose_werner(2, 3, ExactRational(1, 7)),
                           decompose_werner(3, 2, ExactRational(1, 4)),
                           decompose_rho_n(3, 2, oracle::random_phases(3, rng))}) {
    const std::string doc = serialize(cert);
    const auto back = parse(doc);
    EXPECT_EQ(serialize(back), doc);
    ASSERT_EQ(back.terms.size(), cert.terms.size());
    EXPECT_EQ(back.target, cert.target);
    for (std::size_t a = 0; a < cert.terms.size(); ++a) {
      EXPECT_EQ(back.terms[a].weight, cert.terms[a].weight);
      for (std::size_t r = 0; r < cert.n; ++r) {
        // Negative zero is folded to zero, which compares equal.
        EXPECT_EQ(back.terms[a].locals[r], cert.terms[a].locals[r]);
      }
    }
  }
}

TEST(Parse, TruncatedDocument) {
  const std::string doc = serialize(decompose_werner(2, 2, ExactRational(1, 3)));
  try {
    parse(doc.substr(0, doc.size() / 2));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(parse(""), ParseError);
}

TEST(Parse, ShortLocalVectorIsCited) {
  auto doc = nlohmann::ordered_json::parse(
      serialize(decompose_werner(2, 2, ExactRational(1, 3))));
  for (auto& amp : doc["terms"][5]["locals"][0]) {
    amp[0] = amp[0].get<double>() * 0.9;
    amp[1] = amp[1].get<double>() * 0.9;
  }
  try {
    parse(doc.dump());
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("term 5"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("norm"), std::string::npos) << e.what();
  }
}

TEST(Parse, StructuralErrors) {
  EXPECT_THROW(parse("[]"), ValidationError);
  EXPECT_THROW(parse(R"({"format_version": "2"})"), ValidationError);
  const std::string base = serialize(decompose_werner(2, 2, ExactRational(0)));
  std::string wrong_count = base;
  wrong_count.replace(wrong_count.find("\"term_count\": 4"), 15, "\"term_count\": 5");
  EXPECT_THROW(parse(wrong_count), ValidationError);
  std::string wrong_n = base;
  wrong_n.replace(wrong_n.find("\"n\": 2"), 6, "\"n\": 3");
  EXPECT_THROW(parse(wrong_n), ValidationError);
}

TEST(Parse, WeightSumChecked) {
  std::string doc = serialize(decompose_werner(2, 2, ExactRational(0)));
  const std::size_t at = doc.find("\"weight\": 0.25");
  doc.replace(at, 14, "\"weight\": 0.26");
  try {
    parse(doc);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("weights sum"), std::string::npos);
  }
}

TEST(Parse, GoldenFile) {
  const std::string doc = read_file(kGolden);
  ASSERT_FALSE(doc.empty()) << kGolden;
  const auto cert = parse(doc);
  EXPECT_EQ(cert.terms.size(), 18u);
  EXPECT_EQ(serialize(cert), doc);
  EXPECT_EQ(serialize(decompose_werner(2, 2, ExactRational(1, 3))), doc);
  EXPECT_TRUE(verify(cert, werner(2, 2, ExactRational(1, 3))).pass);
}

TEST(Verify, ThresholdCertificatePasses) {
  const auto cert = decompose_werner(2, 2, ExactRational(1, 3));
  const auto report = verify(cert, werner(2, 2, ExactRational(1, 3)));
  EXPECT_TRUE(report.pass);
  EXPECT_LE(report.reconstruction_residual_maxabs, 1e-12);
  EXPECT_LE(report.weights_sum_err, 1e-12);
  EXPECT_LE(report.worst_local_norm_err, 1e-12);
  EXPECT_EQ(report.term_count, 18u);
}

TEST(Verify, WrongTargetFails) {
  const auto cert = decompose_werner(2, 2, ExactRational(1, 3));
  const auto report = verify(cert, werner(2, 2, 0.4));
  EXPECT_FALSE(report.pass);
  // Largest gap sits on the |00><11| coherence: 0.4/2 - (1/3)/2.
  EXPECT_NEAR(report.reconstruction_residual_maxabs, 0.2 - 1.0 / 6.0, 1e-12);
}

TEST(Verify, PerturbedWeightFails) {
  auto cert = decompose_werner(2, 2, ExactRational(1, 3));
  cert.terms[3].weight += 1e-6;
  const auto report = verify(cert, werner(2, 2, ExactRational(1, 3)));
  EXPECT_FALSE(report.pass);
  EXPECT_NEAR(report.weights_sum_err, 1e-6, 1e-12);
}

TEST(Verify, NegativeWeightFails) {
  auto cert = decompose_werner(2, 2, ExactRational(0));
  cert.terms[0].weight = -0.25;
  cert.terms[1].weight = 0.75;
  const auto report = verify(cert, werner(2, 2, 0.0));
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.min_weight, -0.25);
}

TEST(Verify, ShapeMismatch) {
  const auto cert = decompose_werner(2, 2, ExactRational(1, 3));
  EXPECT_THROW(verify(cert, werner(2, 3, 0.1)), InvalidParameterError);
}

TEST(Verify, TermOrderDoesNotMatter) {
  auto cert = decompose_werner(3, 2, ExactRational(1, 8));
  const auto target = werner(3, 2, ExactRational(1, 8));
  const auto before = verify(cert, target);
  std::mt19937 rng(8);
  std::shuffle(cert.terms.begin(), cert.terms.end(), rng);
  const auto after = verify(cert, target);
  EXPECT_EQ(before.pass, after.pass);
  EXPECT_EQ(before.term_count, after.term_count);
  EXPECT_NEAR(before.weights_sum_err, after.weights_sum_err, 1e-15);
  EXPECT_NEAR(before.reconstruction_residual_maxabs,
              after.reconstruction_residual_maxabs, 1e-15);
}

TEST(Verify, IndependentOfDensityKronOracle) {
  const auto cert = decompose_werner(2, 3, ExactRational(1, 5));
  const auto target = werner(2, 3, ExactRational(1, 5));
  const auto report = verify(cert, target);
  EXPECT_NEAR(report.reconstruction_residual_maxabs,
              max_abs_diff(oracle::mixture_by_density_kron(cert), target.matrix()),
              1e-14);
}

TEST(Files, WriteAndRead) {
  const auto cert = decompose_werner(2, 2, ExactRational(1, 6));
  const std::string path = ::testing::TempDir() + "/cert_roundtrip.json";
  write_certificate_file(cert, path);
  EXPECT_EQ(read_file(path), serialize(cert));
  EXPECT_EQ(serialize(read_certificate_file(path)), serialize(cert));
  EXPECT_THROW(read_certificate_file(path + ".missing"), IoError);
}

}  // namespace
}  // namespace wernersep
