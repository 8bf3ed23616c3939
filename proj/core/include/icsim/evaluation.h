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


#ifndef ICSIM_EVALUATION_H_
#define ICSIM_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icsim/similarity.h"

namespace icsim {

struct BenchmarkRow {
  std::string word1;
  std::string word2;
  double rating = 0.0;
};

struct Benchmark {
  std::string name;
  std::vector<BenchmarkRow> rows;
};

// CSV with header `word1,word2,rating`. Words are lowercased.
Benchmark LoadBenchmark(std::istream& in, std::string_view name);
Benchmark LoadBenchmarkFile(const std::filesystem::path& path);

// Sample Pearson correlation, two-pass (means, then centred sums). Throws
// EvaluationError on length mismatch, fewer than two points or a constant
// input.
double Pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson over average ranks. Reported alongside r, never used for pass/fail.
double Spearman(std::span<const double> xs, std::span<const double> ys);

// (pearson(xs, ys), pearson(xs, a - ys)).
std::pair<double, double> FlipCheck(std::span<const double> xs,
                                    std::span<const double> ys, double a);

struct EvalItem {
  BenchmarkRow row;
  std::optional<double> score;
  std::string witness;  // empty when the measure has none
  bool included = false;
  std::string reason;  // why the row was excluded
};

struct EvalReport {
  std::string measure;
  double r = 0.0;
  double spearman = 0.0;
  std::size_t n_included = 0;
  std::vector<EvalItem> items;  // benchmark order

  std::vector<const EvalItem*> excluded() const;
};

// Scores every benchmark row. Rows with a word outside the taxonomy are
// excluded from both score and rating vectors and listed with a reason.
// Throws EvaluationError when fewer than two rows remain.
EvalReport Evaluate(Measure measure, const Similarity& similarity,
                    const Benchmark& benchmark);

// Builds a report from precomputed per-row scores (nullopt = excluded).
EvalReport ReportFromScores(std::string measure, const Benchmark& benchmark,
                            std::span<const std::optional<double>> scores,
                            std::string_view exclusion_reason);

}  // namespace icsim

#endif  // ICSIM_EVALUATION_H_
