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


#ifndef ICSIM_TESTS_SUPPORT_RANDOM_INSTANCE_H_
#define ICSIM_TESTS_SUPPORT_RANDOM_INSTANCE_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "icsim/probability_model.h"
#include "icsim/taxonomy.h"

namespace icsim::testing {

// A random single-rooted IS-A taxonomy with diamonds, polysemous words and
// counts, kept in raw string form so oracles never touch the library's
// indexes.
struct RandomInstance {
  std::vector<std::string> concepts;  // concepts[0] is the root
  std::vector<std::pair<std::string, std::string>> edges;  // child, parent
  std::vector<std::pair<std::string, std::string>> senses;  // word, concept
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  std::vector<std::string> words;  // words with at least one sense

  std::string EdgesText() const {
    std::ostringstream out;
    for (const auto& [c, p] : edges) out << c << '\t' << p << '\n';
    return out.str();
  }
  std::string LexiconText() const {
    std::ostringstream out;
    for (const auto& [w, c] : senses) out << w << '\t' << c << '\n';
    return out.str();
  }
  std::string CountsText() const {
    std::ostringstream out;
    for (const auto& [w, n] : counts) out << w << '\t' << n << '\n';
    return out.str();
  }

  Taxonomy BuildTaxonomy() const {
    std::istringstream e(EdgesText());
    std::istringstream l(LexiconText());
    return Taxonomy::Load(e, l);
  }
  FrequencyTable BuildCounts() const {
    std::istringstream c(CountsText());
    return LoadCounts(c);
  }
};

inline std::string Numbered(char prefix, std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 2) digits.insert(0, "0");
  return prefix + digits;
}

// At least two concepts (so MAX >= 1) and at least one counted word.
inline RandomInstance GenerateInstance(std::uint32_t seed,
                                       std::size_t max_concepts = 50,
                                       std::size_t max_words = 30) {
  std::mt19937 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto chance = [&](double p) {
    return std::bernoulli_distribution(p)(rng);
  };

  RandomInstance inst;
  const std::size_t n = uniform(2, max_concepts);
  for (std::size_t i = 0; i < n; ++i) inst.concepts.push_back(Numbered('c', i));
  for (std::size_t i = 1; i < n; ++i) {
    std::set<std::size_t> parents{uniform(0, i - 1)};
    while (chance(0.3)) parents.insert(uniform(0, i - 1));
    for (std::size_t p : parents) {
      inst.edges.emplace_back(inst.concepts[i], inst.concepts[p]);
    }
  }
  std::shuffle(inst.edges.begin(), inst.edges.end(), rng);

  const std::size_t num_words = uniform(1, max_words);
  for (std::size_t w = 0; w < num_words; ++w) {
    const std::string word = Numbered('w', w);
    inst.words.push_back(word);
    std::set<std::size_t> senses{uniform(0, n - 1)};
    while (chance(0.35)) senses.insert(uniform(0, n - 1));
    for (std::size_t s : senses) inst.senses.emplace_back(word, inst.concepts[s]);
    // Some words stay uncounted; zero counts are legal too.
    if (w == 0 || chance(0.85)) {
      inst.counts.emplace_back(word, w == 0 ? uniform(1, 100) : uniform(0, 100));
    }
  }
  // Words outside the lexicon must not contribute to N.
  for (std::size_t u = 0, k = uniform(0, 3); u < k; ++u) {
    inst.counts.emplace_back(Numbered('u', u), uniform(1, 100));
  }
  return inst;
}

}  // namespace icsim::testing

#endif  // ICSIM_TESTS_SUPPORT_RANDOM_INSTANCE_H_
