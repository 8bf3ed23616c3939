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


#ifndef ICSIM_SIMILARITY_H_
#define ICSIM_SIMILARITY_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "icsim/probability_model.h"
#include "icsim/taxonomy.h"

namespace icsim {

// Word-level measures. The alpha-weighted measure is concept-level only and
// lives on Similarity::Weighted.
enum class Measure {
  kResnik,  // max information content over common subsumers
  kEdge,    // 2 * MAX - shortest IS-A path
  kProb,    // max 1 - p(c) over common subsumers
  kLch,     // -log(path / (2 * MAX)), zero paths floored
};

inline constexpr std::array<Measure, 4> kAllMeasures = {
    Measure::kResnik, Measure::kEdge, Measure::kProb, Measure::kLch};

std::string_view MeasureName(Measure m);
std::optional<Measure> ParseMeasure(std::string_view name);

struct SimScore {
  double value = 0.0;
  // Maximising subsumer for resnik and prob.
  std::optional<ConceptId> witness;
  // Maximising (or path-minimising) senses for word queries.
  std::optional<std::pair<ConceptId, ConceptId>> sense_pair;
};

// Relevance weights over the finite-ic common subsumers of a concept pair.
struct AlphaWeights {
  std::map<ConceptId, double> weights;

  static AlphaWeights Uniform(std::span<const ConceptId> domain);
  static AlphaWeights PointMass(std::span<const ConceptId> domain,
                                ConceptId target);
};

struct SimilarityOptions {
  // Path length substituted for 0 in the Leacock-Chodorow measure.
  double lch_floor = 1.0;
};

// Query interface over one taxonomy and a model built from it. Holds
// references; both must outlive the Similarity. Stateless otherwise, so
// concurrent queries are safe.
//
// Ties: the witness with the smallest concept index wins, then the
// lexicographically smallest sense pair.
class Similarity {
 public:
  Similarity(const Taxonomy& taxonomy, const ProbabilityModel& model,
             SimilarityOptions options = {});

  // Max ic(c) over common subsumers with finite ic.
  SimScore ResnikConcepts(ConceptId c1, ConceptId c2) const;
  // Max 1 - p(c) over common subsumers with nonzero frequency.
  SimScore ProbConcepts(ConceptId c1, ConceptId c2) const;

  // Word queries throw UnknownWordError when either word has no senses.
  SimScore Resnik(std::string_view w1, std::string_view w2) const;
  SimScore Edge(std::string_view w1, std::string_view w2) const;
  SimScore Prob(std::string_view w1, std::string_view w2) const;
  SimScore Lch(std::string_view w1, std::string_view w2) const;
  SimScore Words(Measure measure, std::string_view w1,
                 std::string_view w2) const;

  // Common subsumers of (c1, c2) with finite information content; the
  // required key set of AlphaWeights.
  std::vector<ConceptId> WeightDomain(ConceptId c1, ConceptId c2) const;
  // Sum of alpha(c) * ic(c). Throws QueryError if the weight keys differ from
  // WeightDomain(c1, c2), a weight is outside [0, 1], or the weights do not
  // sum to 1 within 1e-9.
  double Weighted(ConceptId c1, ConceptId c2,
                  const AlphaWeights& alpha) const;

  const Taxonomy& taxonomy() const { return taxonomy_; }
  const ProbabilityModel& model() const { return model_; }
  const SimilarityOptions& options() const { return options_; }

 private:
  std::span<const ConceptId> RequireSenses(std::string_view word) const;
  template <typename ConceptScore>
  SimScore MaxOverSenses(std::string_view w1, std::string_view w2,
                         ConceptScore score) const;

  const Taxonomy& taxonomy_;
  const ProbabilityModel& model_;
  SimilarityOptions options_;
};

}  // namespace icsim

#endif  // ICSIM_SIMILARITY_H_
