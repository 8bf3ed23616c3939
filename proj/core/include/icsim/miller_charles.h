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


#ifndef ICSIM_MILLER_CHARLES_H_
#define ICSIM_MILLER_CHARLES_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icsim/evaluation.h"

namespace icsim {

// One printed row of the 28-pair per-item similarity table.
struct Table2Row {
  std::string word1;
  std::string word2;
  double mc_mean = 0.0;
  double replication_mean = 0.0;
  double sim_ic = 0.0;
  int sim_edge = 0;
  double sim_prob = 0.0;
};

enum class FixtureColumn {
  kInformationContent,
  kEdge,
  kProbability,
  kReplication,
};

std::string_view FixtureColumnName(FixtureColumn column);

// Published correlations of each column against the Miller-Charles means.
struct PublishedCorrelation {
  FixtureColumn column;
  double r;
};

inline constexpr PublishedCorrelation kPublishedCorrelations[] = {
    {FixtureColumn::kInformationContent, 0.7911},
    {FixtureColumn::kProbability, 0.6671},
    {FixtureColumn::kEdge, 0.6645},
};
// Human replication upper bound over the 28 included pairs; derived from
// per-subject data that is not published, so it is reported, not recomputed.
inline constexpr double kHumanUpperBound = 0.9015;
inline constexpr double kReproductionTolerance = 0.005;
// 2 * MAX implied by the fixture's edge column.
inline constexpr int kFixtureEdgeCeiling = 30;

std::vector<Table2Row> ParseTable2(std::istream& in,
                                   std::string_view source_name);

// The embedded data file, byte for byte.
std::string_view MillerCharlesTable2Source();
// Parsed once from the embedded data.
std::span<const Table2Row> MillerCharlesTable2();

// Benchmark of the fixture's word pairs rated by Miller-Charles means.
Benchmark MillerCharlesBenchmark();
std::vector<double> FixtureColumnValues(FixtureColumn column);

// Correlation pipeline run on the printed scores instead of live queries.
EvalReport ReplayFixture(FixtureColumn column);

}  // namespace icsim

#endif  // ICSIM_MILLER_CHARLES_H_
