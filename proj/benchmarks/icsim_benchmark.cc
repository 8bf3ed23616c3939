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


#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "icsim/evaluation.h"
#include "icsim/miller_charles.h"
#include "icsim/probability_model.h"
#include "icsim/similarity.h"
#include "icsim/taxonomy.h"

namespace icsim {
namespace {

// Roughly WordNet-noun shaped: a bushy tree with ~2% multiple inheritance
// and a few senses per word.
struct Corpus {
  std::string edges;
  std::string lexicon;
  std::string counts;
  std::vector<std::string> words;
};

Corpus MakeCorpus(int num_concepts, int num_words) {
  std::mt19937 rng(12345);
  Corpus corpus;
  std::ostringstream edges, lexicon, counts;
  for (int i = 1; i < num_concepts; ++i) {
    // Parents drawn near the child keep depths in the teens.
    const int lo = std::max(0, i / 3 - 50);
    std::uniform_int_distribution<int> parent(lo, i - 1);
    edges << 'n' << i << "\tn" << parent(rng) << '\n';
    if (std::bernoulli_distribution(0.02)(rng)) {
      edges << 'n' << i << "\tn" << parent(rng) << '\n';
    }
  }
  std::uniform_int_distribution<int> any_concept(0, num_concepts - 1);
  std::geometric_distribution<int> extra_senses(0.6);
  std::geometric_distribution<int> count(0.01);
  for (int w = 0; w < num_words; ++w) {
    const std::string word = "w" + std::to_string(w);
    corpus.words.push_back(word);
    for (int s = 0, k = 1 + extra_senses(rng); s < k; ++s) {
      lexicon << word << "\tn" << any_concept(rng) << '\n';
    }
    counts << word << '\t' << count(rng) << '\n';
  }
  corpus.edges = edges.str();
  corpus.lexicon = lexicon.str();
  corpus.counts = counts.str();
  return corpus;
}

const Corpus& SharedCorpus() {
  static const Corpus corpus = MakeCorpus(50000, 30000);
  return corpus;
}

Taxonomy LoadTaxonomy(const Corpus& corpus) {
  std::istringstream e(corpus.edges);
  std::istringstream l(corpus.lexicon);
  return Taxonomy::Load(e, l);
}

FrequencyTable LoadTable(const Corpus& corpus) {
  std::istringstream c(corpus.counts);
  return LoadCounts(c);
}

void BM_LoadTaxonomy(benchmark::State& state) {
  const Corpus& corpus = SharedCorpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(LoadTaxonomy(corpus));
  }
}
BENCHMARK(BM_LoadTaxonomy)->Unit(benchmark::kMillisecond);

void BM_BuildModel(benchmark::State& state) {
  const Corpus& corpus = SharedCorpus();
  const Taxonomy t = LoadTaxonomy(corpus);
  const FrequencyTable table = LoadTable(corpus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProbabilityModel::Build(t, table));
  }
}
BENCHMARK(BM_BuildModel)->Unit(benchmark::kMillisecond);

template <Measure kMeasure>
void BM_WordQuery(benchmark::State& state) {
  const Corpus& corpus = SharedCorpus();
  const Taxonomy t = LoadTaxonomy(corpus);
  const ProbabilityModel m = ProbabilityModel::Build(t, LoadTable(corpus));
  const Similarity sim(t, m);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.words.size() - 1);
  for (auto _ : state) {
    const std::string& a = corpus.words[pick(rng)];
    const std::string& b = corpus.words[pick(rng)];
    benchmark::DoNotOptimize(sim.Words(kMeasure, a, b));
  }
}
BENCHMARK(BM_WordQuery<Measure::kResnik>);
BENCHMARK(BM_WordQuery<Measure::kProb>);
BENCHMARK(BM_WordQuery<Measure::kEdge>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_WordQuery<Measure::kLch>)->Unit(benchmark::kMicrosecond);

void BM_FixtureReplay(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ReplayFixture(FixtureColumn::kInformationContent));
  }
}
BENCHMARK(BM_FixtureReplay);

}  // namespace
}  // namespace icsim

BENCHMARK_MAIN();
