// Copyright 2026 The cuetrunc Authors.
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

#include "cuetrunc/cli/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cuetrunc/exact_dist.hpp"
#include "cuetrunc/normalization.hpp"
#include "cuetrunc/sampler.hpp"

namespace cuetrunc::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cuetrunc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, ConstantsJson) {
  const Outcome o = invoke({"constants", "--n", "100000", "--k", "133", "--regime", "thm4", "--format", "json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const std::vector<std::string> keys{"\"n\"", "\"k\"", "\"regime\"", "\"lambda\"", "\"residual\"", "\"A\"", "\"B\"", "\"law\""};
  std::size_t last = 0;
  for (const auto& key : keys) {
    const std::size_t pos = o.out.find(key);
    ASSERT_NE(pos, std::string::npos) << key;
    EXPECT_GT(pos, last) << key;
    last = pos;
  }
  const std::size_t at = o.out.find("\"residual\": ") + 12;
  EXPECT_LE(std::stod(o.out.substr(at)), 1e-12);
  EXPECT_NE(o.out.find("\"regime\": \"thm4\""), std::string::npos);
}

TEST(Cli, CdfValue) {
  const Outcome o = invoke({"cdf", "--n", "4", "--k", "2", "--r", "0.7071067811865476", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "n,k,r,cdf");
  EXPECT_NEAR(std::stod(split_csv_line(rows[1])[3]), 0.375, 1e-12);
}

TEST(Cli, ThinAdapterOverLibrary) {
  const Outcome o = invoke({"quantile", "--n", "500", "--k", "40", "--q", "0.5", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk);
  const double r = std::stod(split_csv_line(lines(o.out)[1])[3]);
  EXPECT_EQ(r, radius_quantile(EnsembleSpec::from_depth(500, 40), 0.5));
}

TEST(Cli, SampleIsDeterministicAndRoundTrips) {
  const std::vector<std::string> args{"sample", "--n", "500", "--k", "40", "--count", "1000", "--seed", "7", "--format", "csv"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const SampleBatch batch = sample_beta_max(EnsembleSpec::from_depth(500, 40), 1000, 7);
  const auto rows = lines(a.out);
  ASSERT_EQ(rows.size(), 1001u);
  EXPECT_EQ(rows[0], "index,r");
  for (std::size_t i = 0; i < batch.values.size(); ++i) {
    const auto fields = split_csv_line(rows[i + 1]);
    EXPECT_EQ(std::stoll(fields[0]), static_cast<long long>(i));
    EXPECT_EQ(std::stod(fields[1]), batch.values[i]);
  }
}

TEST(Cli, AmbiguousRegimeListsCandidates) {
  const Outcome o = invoke({"constants", "--n", "1000000", "--k", "3"});
  EXPECT_EQ(o.code, kExitValidation);
  EXPECT_NE(o.err.find("thm2"), std::string::npos);
  EXPECT_NE(o.err.find("thm3"), std::string::npos);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(invoke({"constants", "--n", "1000000", "--k", "3", "--regime", "thm3"}).code, kExitOk);
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(invoke({"cdf", "--n", "1", "--k", "1", "--r", "0.5"}).code, kExitValidation);
  EXPECT_EQ(invoke({"cdf", "--n", "10", "--k", "10", "--r", "0.5"}).code, kExitValidation);
  EXPECT_EQ(invoke({"cdf", "--n", "10", "--k", "2", "--p", "8", "--r", "0.5"}).code, kExitValidation);
  EXPECT_EQ(invoke({"converge", "--n", "2000", "--k", "58", "--grid", "0:1:0"}).code, kExitValidation);
  EXPECT_EQ(invoke({"sample", "--n", "10", "--k", "2"}).code, kExitValidation);
  EXPECT_EQ(invoke({"sample", "--n", "10", "--k", "2", "--count", "3", "--format", "xml"}).code, kExitValidation);
  EXPECT_EQ(invoke({"lemma", "--which", "9", "--n", "100"}).code, kExitValidation);
  EXPECT_EQ(invoke({"quantile", "--n", "10", "--k", "2", "--q", "1"}).code, kExitValidation);
  EXPECT_EQ(invoke({"nonsense"}).code, kExitValidation);
  const Outcome o = invoke({"cdf", "--n", "10", "--k", "2", "--r", "abc"});
  EXPECT_EQ(o.code, kExitValidation);
  EXPECT_EQ(lines(o.err).size(), 1u);
}

TEST(Cli, OutWritesAtomically) {
  const auto dir = std::filesystem::temp_directory_path() / "cuetrunc_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "constants.json").string();
  const Outcome o = invoke({"constants", "--n", "1000000", "--k", "191", "--out", path});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("\"regime\": \"thm4\""), std::string::npos);
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1u);
  std::filesystem::remove_all(dir);
  EXPECT_EQ(invoke({"constants", "--n", "1000000", "--k", "191", "--out", "/nonexistent-dir/x.json"}).code,
            kExitIo);
}

TEST(Cli, ConvergeAndLemmaTables) {
  const Outcome c = invoke({"converge", "--n", "2000,8000,32000", "--k", "logsq", "--regime", "thm4", "--format", "csv"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(lines(c.out).size(), 4u);
  const Outcome l = invoke({"lemma", "--which", "5", "--n", "1e4,1e5,1e6,1e7", "--format", "csv"});
  ASSERT_EQ(l.code, kExitOk) << l.err;
  const auto rows = lines(l.out);
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(split_csv_line(rows[i]).back(), "true");
  const Outcome l7 = invoke({"lemma", "--which", "7", "--n", "1e6", "--k", "logsq", "--x", "-1,0,1"});
  ASSERT_EQ(l7.code, kExitOk);
  EXPECT_EQ(lines(l7.out).size(), 5u);  // JSON array of three objects
  const Outcome l11 = invoke({"lemma", "--which", "11", "--n", "20000", "--m", "2000", "--count", "5"});
  ASSERT_EQ(l11.code, kExitOk) << l11.err;
  EXPECT_NE(l11.out.find("\"lemma\": \"L11\""), std::string::npos);
}

TEST(Cli, OracleAndGof) {
  const Outcome o = invoke({"oracle", "--n", "16", "--p", "12", "--count", "50", "--seed", "3"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("\"ks_statistic\""), std::string::npos);
  const Outcome g = invoke({"gof", "--n", "800", "--k", "1", "--regime", "thm3", "--count", "500", "--method", "gamma-ratio"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  EXPECT_NE(g.out.find("\"law\": \"reversed_weibull_1\""), std::string::npos);
  EXPECT_EQ(invoke({"oracle", "--n", "300", "--k", "10", "--count", "1"}).code, kExitValidation);
}

TEST(Emit, Formats) {
  EXPECT_THROW(emit(std::vector<Record>{}, Format::kJson), std::invalid_argument);
  EXPECT_THROW(emit(std::vector<Record>{}, Format::kCsv), std::invalid_argument);
  std::vector<Record> recs(2);
  recs[0].add("b", 0.1).add("a", std::int64_t{3}).add("s", std::string("x,\"y\""));
  recs[1].add("b", 2.5).add("c", true);
  EXPECT_EQ(emit(recs, Format::kCsv), "b,a,s,c\n0.10000000000000001,3,\"x,\"\"y\"\"\",\n2.5,,,true\n");
  EXPECT_EQ(emit(std::span(recs).first(1), Format::kJson), "{\"b\": 0.10000000000000001, \"a\": 3, \"s\": \"x,\\\"y\\\"\"}\n");
  EXPECT_EQ(split_csv_line("0.5,\"x,\"\"y\"\"\",,true"), (std::vector<std::string>{"0.5", "x,\"y\"", "", "true"}));
  EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
  for (double v : {0.1, 1e-300, 123456.789, -2.5e17}) EXPECT_EQ(std::stod(format_double(v)), v);
}

}  // namespace
}  // namespace cuetrunc::cli
