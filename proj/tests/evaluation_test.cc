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


#include "icsim/evaluation.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "icsim/error.h"
#include "icsim/miller_charles.h"
#include "support/test_data.h"

namespace icsim {
namespace {

using ::testing::HasSubstr;

Benchmark BenchmarkFrom(const std::string& text) {
  std::istringstream in(text);
  return LoadBenchmark(in, "<bench>");
}

TEST(PearsonTest, PerfectRelations) {
  const std::vector<double> x = {1, 2, 3};
  EXPECT_DOUBLE_EQ(Pearson(x, std::vector<double>{2, 4, 6}), 1.0);
  EXPECT_DOUBLE_EQ(Pearson(x, std::vector<double>{6, 4, 2}), -1.0);
}

TEST(PearsonTest, Errors) {
  const std::vector<double> x = {1, 2, 3};
  EXPECT_THROW(Pearson(x, std::vector<double>{1, 2}), EvaluationError);
  EXPECT_THROW(Pearson(std::vector<double>{1}, std::vector<double>{1}),
               EvaluationError);
  EXPECT_THROW(Pearson(x, std::vector<double>{5, 5, 5}), EvaluationError);
}

TEST(PearsonTest, RandomizedProperties) {
  std::mt19937 rng(42);
  std::normal_distribution<double> normal(0.0, 3.0);
  std::uniform_real_distribution<double> positive(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 40;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = normal(rng);
      ys[i] = 0.5 * xs[i] + normal(rng);
    }
    const double r = Pearson(xs, ys);
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    EXPECT_NEAR(Pearson(xs, xs), 1.0, 1e-12);
    EXPECT_NEAR(Pearson(ys, xs), r, 1e-12);

    const double scale = positive(rng);
    const double shift = normal(rng);
    std::vector<double> affine(ys), negated(ys);
    for (std::size_t i = 0; i < n; ++i) {
      affine[i] = scale * ys[i] + shift;
      negated[i] = -scale * ys[i] + shift;
    }
    EXPECT_NEAR(Pearson(xs, affine), r, 1e-9);
    EXPECT_NEAR(Pearson(xs, negated), -r, 1e-9);
  }
}

TEST(SpearmanTest, AveragesTiedRanks) {
  EXPECT_NEAR(Spearman(std::vector<double>{1, 2, 2, 3},
                       std::vector<double>{1, 2, 3, 4}),
              4.5 / std::sqrt(22.5), 1e-15);
  EXPECT_DOUBLE_EQ(Spearman(std::vector<double>{1, 10, 100},
                            std::vector<double>{3, 4, 5}),
                   1.0);
}

TEST(FlipCheckTest, OppositeSignsEqualMagnitude) {
  const auto [r, flipped] = FlipCheck(std::vector<double>{1, 2, 3},
                                      std::vector<double>{1, 2, 4}, 10.0);
  EXPECT_NEAR(r, -flipped, 1e-15);
  EXPECT_GT(r, 0.0);
  EXPECT_THROW(FlipCheck(std::vector<double>{1, 2, 3},
                         std::vector<double>{2, 2, 2}, 10.0),
               EvaluationError);
}

TEST(BenchmarkTest, ParsesCsv) {
  const Benchmark b =
      BenchmarkFrom("word1,word2,rating\nCar, automobile ,3.92\n\nx,y,0\n");
  ASSERT_EQ(b.rows.size(), 2u);
  EXPECT_EQ(b.rows[0].word1, "car");
  EXPECT_EQ(b.rows[0].word2, "automobile");
  EXPECT_DOUBLE_EQ(b.rows[0].rating, 3.92);
}

TEST(BenchmarkTest, RejectsMalformedInput) {
  EXPECT_THROW(BenchmarkFrom(""), ParseError);
  EXPECT_THROW(BenchmarkFrom("a,b,c\n"), ParseError);
  try {
    BenchmarkFrom("word1,word2,rating\nx,y,1\nx,y,high\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(BenchmarkFrom("word1,word2,rating\nx,1\n"), ParseError);
  EXPECT_THROW(LoadBenchmarkFile(testing::DataPath("missing.csv")), IoError);
}

struct ToyFixture {
  Taxonomy taxonomy = Taxonomy::LoadFiles(testing::DataPath("toy.edges"),
                                          testing::DataPath("toy.lexicon"));
  ProbabilityModel model = ProbabilityModel::Build(
      taxonomy, LoadCountsFile(testing::DataPath("toy.counts")));
  Similarity sim{taxonomy, model};
};

TEST(EvaluateTest, ExcludesUnknownWords) {
  const ToyFixture toy;
  const Benchmark b =
      LoadBenchmarkFile(testing::DataPath("toy_benchmark.csv"));
  for (Measure m : kAllMeasures) {
    const EvalReport report = Evaluate(m, toy.sim, b);
    EXPECT_EQ(report.n_included, 2u);
    ASSERT_EQ(report.excluded().size(), 1u);
    EXPECT_EQ(report.excluded()[0]->row.word2, "unlisted");
    EXPECT_THAT(report.excluded()[0]->reason, HasSubstr("unlisted"));
    EXPECT_EQ(report.n_included + report.excluded().size(), b.rows.size());
    EXPECT_DOUBLE_EQ(report.r, 1.0);  // (x,y) outscores (x,z) everywhere
  }
  const EvalReport resnik = Evaluate(Measure::kResnik, toy.sim, b);
  EXPECT_EQ(resnik.items[0].witness, "A");
}

TEST(EvaluateTest, DegenerateBenchmark) {
  const ToyFixture toy;
  const Benchmark b =
      LoadBenchmarkFile(testing::DataPath("degenerate_benchmark.csv"));
  EXPECT_THROW(Evaluate(Measure::kResnik, toy.sim, b), EvaluationError);
}

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(MillerCharlesTest, DataFileIsPinned) {
  const std::string bytes = ReadFile(ICSIM_TABLE2_PATH);
  EXPECT_EQ(bytes.size(), 1223u);
  EXPECT_EQ(Fnv1a(bytes), 0x44b1d2750017a53eull);
  EXPECT_EQ(MillerCharlesTable2Source(), bytes);
}

TEST(MillerCharlesTest, FixtureShape) {
  const auto rows = MillerCharlesTable2();
  ASSERT_EQ(rows.size(), 28u);
  EXPECT_EQ(rows[0].word1, "car");
  EXPECT_EQ(rows[0].word2, "automobile");
  EXPECT_EQ(rows[0].mc_mean, 3.92);
  EXPECT_EQ(rows[0].replication_mean, 3.9);
  EXPECT_EQ(rows[0].sim_ic, 8.0411);
  EXPECT_EQ(rows[0].sim_edge, 30);
  EXPECT_EQ(rows[0].sim_prob, 0.9962);
  EXPECT_EQ(rows[27].word1, "rooster");
  EXPECT_EQ(rows[27].word2, "voyage");
  for (const Table2Row& row : rows) {
    EXPECT_GE(row.mc_mean, 0.0);
    EXPECT_LE(row.mc_mean, 4.0);
    EXPECT_LE(row.sim_edge, kFixtureEdgeCeiling);
  }
}

// Reference correlations from an independent numpy.corrcoef run over the
// same 28 rows.
TEST(MillerCharlesTest, ReplayMatchesIndependentComputation) {
  EXPECT_NEAR(ReplayFixture(FixtureColumn::kInformationContent).r,
              0.79113628790605, 1e-12);
  EXPECT_NEAR(ReplayFixture(FixtureColumn::kEdge).r, 0.6644367797780407,
              1e-12);
  EXPECT_NEAR(ReplayFixture(FixtureColumn::kProbability).r,
              0.6671257330578816, 1e-12);
  EXPECT_NEAR(ReplayFixture(FixtureColumn::kReplication).r, 0.95834457313752,
              1e-12);
}

TEST(MillerCharlesTest, ReplayReproducesPublishedCorrelations) {
  for (const PublishedCorrelation& target : kPublishedCorrelations) {
    const EvalReport report = ReplayFixture(target.column);
    EXPECT_EQ(report.n_included, 28u);
    EXPECT_NEAR(report.r, target.r, kReproductionTolerance)
        << FixtureColumnName(target.column);
  }
}

TEST(MillerCharlesTest, EdgeDistanceFlipKeepsMagnitude) {
  const std::vector<double> mc = [] {
    std::vector<double> v;
    for (const Table2Row& row : MillerCharlesTable2()) v.push_back(row.mc_mean);
    return v;
  }();
  std::vector<double> minlen;
  for (double edge : FixtureColumnValues(FixtureColumn::kEdge)) {
    minlen.push_back(kFixtureEdgeCeiling - edge);
  }
  const auto [r_len, r_sim] = FlipCheck(mc, minlen, kFixtureEdgeCeiling);
  EXPECT_LT(r_len, 0.0);
  EXPECT_NEAR(std::abs(r_len), std::abs(r_sim), 1e-12);
}

}  // namespace
}  // namespace icsim
