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


#include "icsim/miller_charles.h"

#include <charconv>
#include <sstream>

#include "icsim/error.h"
#include "line_reader.h"

namespace icsim {
namespace internal {
extern const std::string_view kTable2Data;
}  // namespace internal

namespace {

template <typename T>
T ParseNumber(std::string_view text, const internal::LineReader& lines) {
  T value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(lines.source(), lines.line_number(),
                     "invalid number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view FixtureColumnName(FixtureColumn column) {
  switch (column) {
    case FixtureColumn::kInformationContent:
      return "ic";
    case FixtureColumn::kEdge:
      return "edge";
    case FixtureColumn::kProbability:
      return "prob";
    case FixtureColumn::kReplication:
      return "replication";
  }
  return "?";
}

std::vector<Table2Row> ParseTable2(std::istream& in,
                                   std::string_view source_name) {
  std::vector<Table2Row> rows;
  internal::LineReader lines(in, source_name);
  std::string line;
  while (lines.Next(line)) {
    const auto f = internal::Split(line, '\t');
    if (f.size() != 7) {
      throw ParseError(lines.source(), lines.line_number(),
                       "expected 7 tab-separated fields");
    }
    Table2Row row;
    row.word1 = std::string(f[0]);
    row.word2 = std::string(f[1]);
    row.mc_mean = ParseNumber<double>(f[2], lines);
    row.replication_mean = ParseNumber<double>(f[3], lines);
    row.sim_ic = ParseNumber<double>(f[4], lines);
    row.sim_edge = ParseNumber<int>(f[5], lines);
    row.sim_prob = ParseNumber<double>(f[6], lines);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view MillerCharlesTable2Source() { return internal::kTable2Data; }

std::span<const Table2Row> MillerCharlesTable2() {
  static const std::vector<Table2Row> rows = [] {
    std::istringstream in{std::string(internal::kTable2Data)};
    return ParseTable2(in, "<embedded table2>");
  }();
  return rows;
}

Benchmark MillerCharlesBenchmark() {
  Benchmark benchmark;
  benchmark.name = "miller-charles-28";
  for (const Table2Row& row : MillerCharlesTable2()) {
    benchmark.rows.push_back({row.word1, row.word2, row.mc_mean});
  }
  return benchmark;
}

std::vector<double> FixtureColumnValues(FixtureColumn column) {
  std::vector<double> values;
  for (const Table2Row& row : MillerCharlesTable2()) {
    switch (column) {
      case FixtureColumn::kInformationContent:
        values.push_back(row.sim_ic);
        break;
      case FixtureColumn::kEdge:
        values.push_back(row.sim_edge);
        break;
      case FixtureColumn::kProbability:
        values.push_back(row.sim_prob);
        break;
      case FixtureColumn::kReplication:
        values.push_back(row.replication_mean);
        break;
    }
  }
  return values;
}

EvalReport ReplayFixture(FixtureColumn column) {
  const std::vector<double> values = FixtureColumnValues(column);
  const std::vector<std::optional<double>> scores(values.begin(),
                                                  values.end());
  return ReportFromScores(std::string(FixtureColumnName(column)),
                          MillerCharlesBenchmark(), scores, "");
}

}  // namespace icsim
