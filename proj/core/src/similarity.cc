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


#include "icsim/similarity.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "icsim/error.h"

namespace icsim {
namespace {

constexpr double kAlphaSumTolerance = 1e-9;

// Candidate (value, witness) ordering: larger value first, then smaller
// witness index.
bool Better(double value, ConceptId witness, const SimScore& best) {
  if (!best.witness) return true;
  if (value != best.value) return value > best.value;
  return witness < *best.witness;
}

}  // namespace

std::string_view MeasureName(Measure m) {
  switch (m) {
    case Measure::kResnik:
      return "resnik";
    case Measure::kEdge:
      return "edge";
    case Measure::kProb:
      return "prob";
    case Measure::kLch:
      return "lch";
  }
  return "?";
}

std::optional<Measure> ParseMeasure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (MeasureName(m) == name) return m;
  }
  return std::nullopt;
}

AlphaWeights AlphaWeights::Uniform(std::span<const ConceptId> domain) {
  AlphaWeights alpha;
  for (ConceptId c : domain) {
    alpha.weights[c] = 1.0 / static_cast<double>(domain.size());
  }
  return alpha;
}

AlphaWeights AlphaWeights::PointMass(std::span<const ConceptId> domain,
                                     ConceptId target) {
  AlphaWeights alpha;
  for (ConceptId c : domain) alpha.weights[c] = c == target ? 1.0 : 0.0;
  return alpha;
}

Similarity::Similarity(const Taxonomy& taxonomy, const ProbabilityModel& model,
                       SimilarityOptions options)
    : taxonomy_(taxonomy), model_(model), options_(options) {
  if (model.num_concepts() != taxonomy.num_concepts()) {
    throw std::invalid_argument("model was not built over this taxonomy");
  }
  if (!(options_.lch_floor > 0.0)) {
    throw std::invalid_argument("lch floor must be positive");
  }
}

SimScore Similarity::ResnikConcepts(ConceptId c1, ConceptId c2) const {
  SimScore best;
  for (ConceptId c : taxonomy_.CommonSubsumers(c1, c2)) {
    const double ic = model_.ic(c);
    if (std::isinf(ic)) continue;
    if (Better(ic, c, best)) {
      best.value = ic;
      best.witness = c;
    }
  }
  if (!best.witness) {
    throw QueryError("every common subsumer of '" + taxonomy_.name(c1) +
                     "' and '" + taxonomy_.name(c2) +
                     "' has zero frequency");
  }
  best.sense_pair = {c1, c2};
  return best;
}

SimScore Similarity::ProbConcepts(ConceptId c1, ConceptId c2) const {
  SimScore best;
  for (ConceptId c : taxonomy_.CommonSubsumers(c1, c2)) {
    if (model_.freq(c) == 0) continue;
    const double value = 1.0 - model_.p(c);
    if (Better(value, c, best)) {
      best.value = value;
      best.witness = c;
    }
  }
  if (!best.witness) {
    throw QueryError("every common subsumer of '" + taxonomy_.name(c1) +
                     "' and '" + taxonomy_.name(c2) +
                     "' has zero frequency");
  }
  best.sense_pair = {c1, c2};
  return best;
}

std::span<const ConceptId> Similarity::RequireSenses(
    std::string_view word) const {
  const auto senses = taxonomy_.SensesOf(word);
  if (senses.empty()) throw UnknownWordError(NormalizeWord(word));
  return senses;
}

template <typename ConceptScore>
SimScore Similarity::MaxOverSenses(std::string_view w1, std::string_view w2,
                                   ConceptScore score) const {
  const auto s1 = RequireSenses(w1);
  const auto s2 = RequireSenses(w2);
  SimScore best;
  for (ConceptId c1 : s1) {
    for (ConceptId c2 : s2) {
      SimScore candidate;
      try {
        candidate = (this->*score)(c1, c2);
      } catch (const QueryError&) {
        continue;  // degenerate pair, no finite candidate
      }
      if (Better(candidate.value, *candidate.witness, best)) best = candidate;
    }
  }
  if (!best.witness) {
    throw QueryError("no sense pair of '" + std::string(w1) + "' and '" +
                     std::string(w2) + "' has a counted common subsumer");
  }
  return best;
}

SimScore Similarity::Resnik(std::string_view w1, std::string_view w2) const {
  return MaxOverSenses(w1, w2, &Similarity::ResnikConcepts);
}

SimScore Similarity::Prob(std::string_view w1, std::string_view w2) const {
  return MaxOverSenses(w1, w2, &Similarity::ProbConcepts);
}

SimScore Similarity::Edge(std::string_view w1, std::string_view w2) const {
  const auto s1 = RequireSenses(w1);
  const auto s2 = RequireSenses(w2);
  const PathMatch match = taxonomy_.MinPathLength(s1, s2);
  SimScore score;
  score.value = 2.0 * taxonomy_.max_depth() - match.length;
  score.sense_pair = {match.from, match.to};
  return score;
}

SimScore Similarity::Lch(std::string_view w1, std::string_view w2) const {
  const auto s1 = RequireSenses(w1);
  const auto s2 = RequireSenses(w2);
  if (taxonomy_.max_depth() < 1) {
    throw QueryError("lch needs a taxonomy of depth >= 1");
  }
  const PathMatch match = taxonomy_.MinPathLength(s1, s2);
  const double length =
      match.length == 0 ? options_.lch_floor : match.length;
  SimScore score;
  score.value = -std::log(length / (2.0 * taxonomy_.max_depth())) /
                std::log(model_.log_base());
  score.sense_pair = {match.from, match.to};
  return score;
}

SimScore Similarity::Words(Measure measure, std::string_view w1,
                           std::string_view w2) const {
  switch (measure) {
    case Measure::kResnik:
      return Resnik(w1, w2);
    case Measure::kEdge:
      return Edge(w1, w2);
    case Measure::kProb:
      return Prob(w1, w2);
    case Measure::kLch:
      return Lch(w1, w2);
  }
  throw std::invalid_argument("unknown measure");
}

std::vector<ConceptId> Similarity::WeightDomain(ConceptId c1,
                                                ConceptId c2) const {
  std::vector<ConceptId> domain;
  for (ConceptId c : taxonomy_.CommonSubsumers(c1, c2)) {
    if (!std::isinf(model_.ic(c))) domain.push_back(c);
  }
  return domain;
}

double Similarity::Weighted(ConceptId c1, ConceptId c2,
                            const AlphaWeights& alpha) const {
  const std::vector<ConceptId> domain = WeightDomain(c1, c2);
  if (alpha.weights.size() != domain.size()) {
    throw QueryError("alpha weights do not cover the common subsumers");
  }
  double sum = 0.0;
  double total = 0.0;
  for (ConceptId c : domain) {
    auto it = alpha.weights.find(c);
    if (it == alpha.weights.end()) {
      throw QueryError("alpha weights missing common subsumer '" +
                       taxonomy_.name(c) + "'");
    }
    const double w = it->second;
    if (!(w >= 0.0 && w <= 1.0)) {
      throw QueryError("alpha weight outside [0, 1] for '" +
                       taxonomy_.name(c) + "'");
    }
    sum += w;
    if (w != 0.0) total += w * model_.ic(c);
  }
  if (std::abs(sum - 1.0) > kAlphaSumTolerance) {
    throw QueryError("alpha weights sum to " + std::to_string(sum) +
                     ", expected 1");
  }
  return total;
}

}  // namespace icsim
