// Copyright 2026 The mompoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& cache_env = "") {
  std::ostringstream out, err;
  const int code = mompoly::cli::run(args, out, err, cache_env);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& name)
      : path_(fs::temp_directory_path() / (name + "-" + std::to_string(::getpid()))) {
    fs::remove(path_);
  }
  ~TempFile() { fs::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

TEST(Cli, CountSingle) {
  auto r = run({"count", "--group", "sp", "-k", "1", "-q", "2", "-N", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "190\n");
  r = run({"count", "--group", "u", "-k", "2", "-q", "1", "-N", "0"});
  EXPECT_EQ(r.out, "1\n");
  // Strict side starts at the shift: U(2;1) has shift 4.
  r = run({"count", "--group", "u", "-k", "2", "-q", "1", "-N", "4", "--strict"});
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, CountSeriesFormats) {
  auto r = run({"count", "--group", "u", "-k", "2", "-q", "1", "--n-max", "3"});
  EXPECT_EQ(r.out, "0 1\n1 4\n2 10\n3 20\n");
  r = run({"count", "--group", "u", "-k", "2", "-q", "1", "--n-max", "1", "--format", "csv"});
  EXPECT_EQ(r.out, "group,k,q,N,strict,count\nu,2,1,0,false,1\nu,2,1,1,false,4\n");
  r = run({"count", "--group", "sp", "-k", "2", "-q", "1", "--n-max", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "mompoly.counts/1");
  EXPECT_EQ(j["counts"][2]["count"], "62");
}

TEST(Cli, EnginesAgree) {
  const auto r = run({"count", "--group", "sp", "-k", "2", "-q", "1", "--n-max", "3", "--engine", "both"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0 1\n1 10\n2 62\n3 283\n");
}

TEST(Cli, Fit) {
  const auto r = run({"fit", "--group", "u", "-k", "2", "-q", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "mompoly.poly/1");
  EXPECT_EQ(j["coeffs"], json({"1/1", "11/6", "1/1", "1/6"}));
  EXPECT_TRUE(j["polynomiality"]["pass"].get<bool>());
}

TEST(Cli, VerifySymmetryCenter) {
  const auto r = run({"verify", "symmetry", "--group", "sp", "-k", "1", "-q", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "mompoly.verdicts/1");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["reports"][0]["detail"]["center"], "-3/2");
}

TEST(Cli, VerifyBijectionSingleDilation) {
  const auto r = run({"verify", "bijection", "--group", "u", "-k", "2", "-q", "1", "-N", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 1u);
  const auto& d = j["reports"][0]["detail"];
  EXPECT_EQ(d["lax_count"], 10);
  EXPECT_EQ(d["strict_count"], 10);
}

TEST(Cli, VerifyAll) {
  const auto r = run({"verify", "all", "--group", "u", "-k", "2", "-q", "1"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  std::set<std::string> claims;
  for (const auto& rep : j["reports"]) claims.insert(rep["claim"].get<std::string>());
  EXPECT_TRUE(claims.count("vertex"));
  EXPECT_TRUE(claims.count("reciprocity"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--group", "u", "-k", "1", "-q", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--group", "u", "-k", "1", "-q", "1", "-N", "1", "--n-max", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--group", "x", "-k", "1", "-q", "1", "-N", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--group", "u", "-k", "0", "-q", "1", "-N", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--group", "u", "-k", "1", "-q", "1", "-N", "1", "--engine", "fast"}).code, 2);
  EXPECT_EQ(run({"fit", "--group", "u", "-k", "1", "-q", "1", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"verify", "vertex", "--group", "u", "-k", "1", "-q", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense", "--group", "u", "-k", "1", "-q", "2"}).code, 2);
}

TEST(Cli, BudgetExit) {
  const auto r = run({"count", "--group", "u", "-k", "2", "-q", "2", "-N", "6", "--budget-states", "10"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"verify", "all", "--group", "sp", "-k", "1", "-q", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Reference) {
  auto r = run({"reference", "--group", "sp", "-k", "2", "-q", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["available"].get<bool>());
  EXPECT_EQ(j["degree"], 8);
  r = run({"reference", "--group", "u", "-k", "2", "-q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(json::parse(r.out)["available"].get<bool>());
}

TEST(Cli, CacheRoundTrip) {
  TempFile cache("mompoly-cli-cache");
  const std::vector<std::string> args{"count", "--group", "u", "-k", "2", "-q", "1", "--n-max", "4"};
  auto first = run(args, cache.str());
  ASSERT_EQ(first.code, 0) << first.err;
  ASSERT_TRUE(fs::exists(cache.str()));
  std::ifstream in(cache.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("#mompoly-count-cache format=1", 0), 0u);
  auto second = run(args, cache.str());
  EXPECT_EQ(second.out, first.out);
  EXPECT_TRUE(second.err.empty()) << second.err;
}

TEST(Cli, MismatchedCacheIsIgnored) {
  TempFile cache("mompoly-cli-stale");
  {
    std::ofstream out(cache.str());
    out << "#mompoly-count-cache format=1 engine=old checksum=0\n";
    out << R"({"group":"u","k":2,"q":1,"N":1,"strict":false,"count":"999","engine":"old","crc":"0"})" << "\n";
  }
  const auto r = run({"count", "--group", "u", "-k", "2", "-q", "1", "-N", "1", "--cache", cache.str()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
  EXPECT_NE(r.err.find("cache"), std::string::npos);
  std::ifstream in(cache.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 2);
}

}  // namespace
