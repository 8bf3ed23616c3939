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


#ifndef ICSIM_PROBABILITY_MODEL_H_
#define ICSIM_PROBABILITY_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "icsim/taxonomy.h"

namespace icsim {

// Raw word counts, merged by lowercased word.
struct FrequencyTable {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  std::uint64_t total_raw = 0;

  void Add(std::string_view word, std::uint64_t count);
};

// Parses `word<TAB>count` lines. Duplicate words are summed.
FrequencyTable LoadCounts(std::istream& in,
                          std::string_view source_name = "<counts>");
FrequencyTable LoadCountsFile(const std::filesystem::path& path);

// Folds the count of a word ending in "s" into its stripped form when the
// stripped form has senses and the word itself does not.
FrequencyTable FoldPlurals(const FrequencyTable& table,
                           const Taxonomy& taxonomy);

inline constexpr double kInfiniteIc = std::numeric_limits<double>::infinity();

// Corpus-derived concept frequencies, probabilities and information content.
//
// A word credits its count once to every concept that subsumes at least one
// of its senses: the union of the senses' ancestor sets is taken before the
// count is added, so diamonds and polysemy never double count.
class ProbabilityModel {
 public:
  // Throws ValidationError when no counted word attaches to the taxonomy
  // and std::invalid_argument for log_base <= 1.
  static ProbabilityModel Build(const Taxonomy& taxonomy,
                                const FrequencyTable& table,
                                double log_base = 2.0);

  std::uint64_t freq(ConceptId c) const { return freq_.at(c.index); }
  double p(ConceptId c) const { return p_.at(c.index); }
  // -log_base p(c); kInfiniteIc when freq(c) == 0.
  double ic(ConceptId c) const { return ic_.at(c.index); }

  std::uint64_t total() const { return total_; }
  double log_base() const { return log_base_; }
  std::size_t num_concepts() const { return freq_.size(); }

  // Same frequencies, information content rescaled to another base.
  ProbabilityModel WithLogBase(double log_base) const;

 private:
  ProbabilityModel() = default;
  void ComputeDerived();

  std::vector<std::uint64_t> freq_;
  std::vector<double> p_;
  std::vector<double> ic_;
  std::uint64_t total_ = 0;
  double log_base_ = 2.0;
};

// `concept_id<TAB>freq<TAB>p<TAB>ic` rows sorted by concept id, four
// decimals, infinite ic printed as `inf`.
void WriteModelDump(std::ostream& out, const Taxonomy& taxonomy,
                    const ProbabilityModel& model);

}  // namespace icsim

#endif  // ICSIM_PROBABILITY_MODEL_H_
