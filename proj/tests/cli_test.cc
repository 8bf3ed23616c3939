// Copyright 2026 The icsim Authors
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


#include "cli.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/test_data.h"

namespace icsim::cli {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunWith(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"icsim"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = Run(argv, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const char* name) { return testing::DataPath(name).string(); }

std::vector<std::string> Toy() {
  return {"--taxonomy", Data("toy.edges"), "--lexicon", Data("toy.lexicon"),
          "--counts", Data("toy.counts")};
}

Result RunToy(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"icsim"};
  storage.insert(storage.end(), args.begin(), args.end());
  for (const auto& s : Toy()) storage.push_back(s);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = Run(argv, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(CliValidateTest, ToyStats) {
  const Result r = RunToy({"validate"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "5 concepts, 4 edges, 3 words, MAX=2\n");
}

TEST(CliValidateTest, CycleExitsWithValidationCode) {
  const Result r = RunWith({"validate", "--taxonomy", Data("cycle.edges"),
                            "--lexicon", Data("cycle.lexicon")});
  EXPECT_EQ(r.code, kValidation);
  EXPECT_THAT(r.err, HasSubstr("A -> B -> A"));
}

TEST(CliValidateTest, MissingFileExitsWithIoCode) {
  const Result r = RunWith({"validate", "--taxonomy", Data("nope.edges"),
                            "--lexicon", Data("toy.lexicon")});
  EXPECT_EQ(r.code, kIo);
  EXPECT_THAT(r.err, HasSubstr("nope.edges"));
  EXPECT_EQ(RunWith({"validate"}).code, kIo);
}

TEST(CliSimTest, ResnikToy) {
  const Result r = RunToy({"sim", "x", "y", "--measure", "resnik"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "x\ty\tresnik\t0.4150\tA\n");
  EXPECT_EQ(RunToy({"sim", "x", "x", "--measure", "resnik"}).out,
            "x\tx\tresnik\t1.0000\tA1\n");
}

TEST(CliSimTest, AllMeasures) {
  const Result r = RunToy({"sim", "X", "y"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out,
            "x\ty\tresnik\t0.4150\tA\n"
            "x\ty\tedge\t2.0000\t-\n"
            "x\ty\tprob\t0.2500\tA\n"
            "x\ty\tlch\t1.0000\t-\n");
}

TEST(CliSimTest, UnknownWordExitsWithQueryCode) {
  const Result r = RunToy({"sim", "x", "unlisted"});
  EXPECT_EQ(r.code, kQuery);
  EXPECT_THAT(r.err, HasSubstr("unlisted"));
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSimTest, LogBaseChangesMagnitudeNotWitness) {
  const Result base2 = RunToy({"sim", "x", "y", "--measure", "resnik"});
  const Result base_e = RunToy(
      {"sim", "x", "y", "--measure", "resnik", "--log-base", "2.718281828459045"});
  EXPECT_EQ(base_e.out, "x\ty\tresnik\t0.2877\tA\n");
  EXPECT_NE(base2.out, base_e.out);
  EXPECT_NE(RunToy({"sim", "x", "y", "--log-base", "1"}).code, kOk);
}

TEST(CliSimTest, LchFloorFlag) {
  const Result r =
      RunToy({"sim", "x", "x", "--measure", "lch", "--lch-floor", "0.5"});
  EXPECT_EQ(r.out, "x\tx\tlch\t3.0000\t-\n");
}

TEST(CliStatsTest, DumpIsDeterministic) {
  const Result r = RunToy({"stats"});
  EXPECT_EQ(r.code, kOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines.back(), "root\t4\t1.0000\t0.0000");
  EXPECT_EQ(lines[0], "A\t3\t0.7500\t0.4150");
  EXPECT_EQ(RunToy({"stats"}).out, r.out);
}

TEST(CliStatsTest, EmptyCountsReportsZeroTotal) {
  const Result r = RunWith({"stats", "--taxonomy", Data("toy.edges"),
                            "--lexicon", Data("toy.lexicon"), "--counts",
                            Data("empty.counts")});
  EXPECT_EQ(r.code, kValidation);
  EXPECT_THAT(r.err, HasSubstr("N = 0"));
}

TEST(CliStatsTest, MalformedCountsLine) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "icsim_bad.counts";
  std::ofstream(path) << "x\t1\ny\tlots\n";
  const Result r = RunWith({"stats", "--taxonomy", Data("toy.edges"),
                            "--lexicon", Data("toy.lexicon"), "--counts",
                            path.string()});
  EXPECT_EQ(r.code, kIo);
  EXPECT_THAT(r.err, HasSubstr(path.string() + ":2"));
  std::filesystem::remove(path);
}

TEST(CliEvalTest, FixtureModeReproducesTable) {
  const Result r = RunWith({"eval"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("ic\t0.7911\t0.7911\t0.005\tPASS"));
  EXPECT_THAT(r.out, HasSubstr("prob\t0.6671\t0.6671\t0.005\tPASS"));
  EXPECT_THAT(r.out, HasSubstr("edge\t0.6644\t0.6645\t0.005\tPASS"));
  EXPECT_THAT(r.out, HasSubstr("r=0.9583"));
}

TEST(CliEvalTest, LiveModeWithJsonLines) {
  const std::filesystem::path json_path =
      std::filesystem::temp_directory_path() / "icsim_eval.jsonl";
  const Result r = RunToy({"eval", "--benchmark", Data("toy_benchmark.csv"),
                           "--measure", "resnik", "--json-out",
                           json_path.string()});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("resnik\t1.0000\t1.0000\t2\t1"));
  EXPECT_THAT(r.out, HasSubstr("# excluded x,unlisted: unknown word"));

  std::ifstream in(json_path);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(in, line);) {
    rows.push_back(nlohmann::json::parse(line));
  }
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["pair"], nlohmann::json({"x", "y"}));
  EXPECT_NEAR(rows[0]["score"].get<double>(), 0.415037, 1e-6);
  EXPECT_TRUE(rows[0]["included"].get<bool>());
  EXPECT_TRUE(rows[0]["reason"].is_null());
  EXPECT_FALSE(rows[2]["included"].get<bool>());
  EXPECT_TRUE(rows[2]["score"].is_null());
  EXPECT_THAT(rows[2]["reason"].get<std::string>(), HasSubstr("unlisted"));
  std::filesystem::remove(json_path);
}

TEST(CliEvalTest, DegenerateBenchmarkExitCode) {
  const Result r = RunToy(
      {"eval", "--benchmark", Data("degenerate_benchmark.csv")});
  EXPECT_EQ(r.code, kEvaluation);
  EXPECT_THAT(r.err, HasSubstr("degenerate"));
}

TEST(CliTest, RequiresASubcommand) {
  EXPECT_NE(RunWith({}).code, kOk);
  EXPECT_NE(RunToy({"sim", "x", "y", "--measure", "cosine"}).code, kOk);
}

}  // namespace
}  // namespace icsim::cli
