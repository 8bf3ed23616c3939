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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include "icsim/error.h"
#include "line_reader.h"

namespace icsim {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

Benchmark LoadBenchmark(std::istream& in, std::string_view name) {
  Benchmark benchmark;
  benchmark.name = std::string(name);
  internal::LineReader lines(in, name);
  std::string line;
  if (!lines.Next(line)) {
    throw ParseError(lines.source(), lines.line_number(),
                     "missing header 'word1,word2,rating'");
  }
  {
    const auto header = internal::Split(line, ',');
    if (header.size() != 3 || Trim(header[0]) != "word1" ||
        Trim(header[1]) != "word2" || Trim(header[2]) != "rating") {
      throw ParseError(lines.source(), lines.line_number(),
                       "expected header 'word1,word2,rating'");
    }
  }
  while (lines.Next(line)) {
    const auto fields = internal::Split(line, ',');
    if (fields.size() != 3 || Trim(fields[0]).empty() ||
        Trim(fields[1]).empty()) {
      throw ParseError(lines.source(), lines.line_number(),
                       "expected 'word1,word2,rating'");
    }
    const std::string_view text = Trim(fields[2]);
    double rating = 0.0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), rating);
    if (ec != std::errc() || end != text.data() + text.size() ||
        !std::isfinite(rating)) {
      throw ParseError(lines.source(), lines.line_number(),
                       "invalid rating '" + std::string(text) + "'");
    }
    benchmark.rows.push_back({NormalizeWord(Trim(fields[0])),
                              NormalizeWord(Trim(fields[1])), rating});
  }
  if (in.bad()) throw IoError("read error in " + lines.source());
  return benchmark;
}

Benchmark LoadBenchmarkFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return LoadBenchmark(in, path.string());
}

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw EvaluationError("pearson: length mismatch (" +
                          std::to_string(xs.size()) + " vs " +
                          std::to_string(ys.size()) + ")");
  }
  if (xs.size() < 2) throw EvaluationError("pearson: fewer than 2 points");
  const double n = static_cast<double>(xs.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw EvaluationError("pearson: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double Spearman(std::span<const double> xs, std::span<const double> ys) {
  const std::vector<double> rx = AverageRanks(xs);
  const std::vector<double> ry = AverageRanks(ys);
  return Pearson(rx, ry);
}

std::pair<double, double> FlipCheck(std::span<const double> xs,
                                    std::span<const double> ys, double a) {
  std::vector<double> flipped(ys.begin(), ys.end());
  for (double& y : flipped) y = a - y;
  return {Pearson(xs, ys), Pearson(xs, flipped)};
}

std::vector<const EvalItem*> EvalReport::excluded() const {
  std::vector<const EvalItem*> out;
  for (const EvalItem& item : items) {
    if (!item.included) out.push_back(&item);
  }
  return out;
}

namespace {

void FinishReport(EvalReport& report) {
  std::vector<double> ratings;
  std::vector<double> scores;
  for (const EvalItem& item : report.items) {
    if (!item.included) continue;
    ratings.push_back(item.row.rating);
    scores.push_back(*item.score);
  }
  report.n_included = scores.size();
  if (scores.size() < 2) {
    throw EvaluationError("degenerate benchmark: " +
                          std::to_string(scores.size()) +
                          " usable rows for measure " + report.measure);
  }
  report.r = Pearson(scores, ratings);
  report.spearman = Spearman(scores, ratings);
}

}  // namespace

EvalReport Evaluate(Measure measure, const Similarity& similarity,
                    const Benchmark& benchmark) {
  EvalReport report;
  report.measure = std::string(MeasureName(measure));
  report.items.reserve(benchmark.rows.size());
  for (const BenchmarkRow& row : benchmark.rows) {
    EvalItem item;
    item.row = row;
    try {
      const SimScore score = similarity.Words(measure, row.word1, row.word2);
      item.score = score.value;
      if (score.witness) {
        item.witness = similarity.taxonomy().name(*score.witness);
      }
      item.included = true;
    } catch (const UnknownWordError& e) {
      item.reason = "unknown word '" + e.word() + "'";
    }
    report.items.push_back(std::move(item));
  }
  FinishReport(report);
  return report;
}

EvalReport ReportFromScores(std::string measure, const Benchmark& benchmark,
                            std::span<const std::optional<double>> scores,
                            std::string_view exclusion_reason) {
  if (scores.size() != benchmark.rows.size()) {
    throw EvaluationError("score count does not match benchmark rows");
  }
  EvalReport report;
  report.measure = std::move(measure);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    EvalItem item;
    item.row = benchmark.rows[i];
    item.score = scores[i];
    item.included = scores[i].has_value();
    if (!item.included) item.reason = std::string(exclusion_reason);
    report.items.push_back(std::move(item));
  }
  FinishReport(report);
  return report;
}

}  // namespace icsim
