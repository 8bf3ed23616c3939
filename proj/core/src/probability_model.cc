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


#include "icsim/probability_model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "icsim/error.h"
#include "line_reader.h"

namespace icsim {

void FrequencyTable::Add(std::string_view word, std::uint64_t count) {
  const std::string key = NormalizeWord(word);
  auto it = counts.find(key);
  if (it == counts.end()) {
    counts.emplace(key, count);
  } else {
    it->second += count;
  }
  total_raw += count;
}

FrequencyTable LoadCounts(std::istream& in, std::string_view source_name) {
  FrequencyTable table;
  internal::LineReader lines(in, source_name);
  std::string line;
  while (lines.Next(line)) {
    const auto fields = internal::Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(lines.source(), lines.line_number(),
                       "expected 'word<TAB>count'");
    }
    const std::string_view text = fields[1];
    if (text.front() == '-') {
      throw ParseError(lines.source(), lines.line_number(),
                       "negative count '" + std::string(text) + "'");
    }
    std::uint64_t count = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), count);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw ParseError(lines.source(), lines.line_number(),
                       "invalid count '" + std::string(text) + "'");
    }
    table.Add(fields[0], count);
  }
  if (in.bad()) throw IoError("read error in " + lines.source());
  return table;
}

FrequencyTable LoadCountsFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return LoadCounts(in, path.string());
}

FrequencyTable FoldPlurals(const FrequencyTable& table,
                           const Taxonomy& taxonomy) {
  FrequencyTable folded;
  for (const auto& [word, count] : table.counts) {
    std::string_view target = word;
    if (word.size() > 1 && word.back() == 's' &&
        taxonomy.SensesOf(word).empty()) {
      const std::string_view stem(word.data(), word.size() - 1);
      if (!taxonomy.SensesOf(stem).empty()) target = stem;
    }
    folded.Add(target, count);
  }
  return folded;
}

ProbabilityModel ProbabilityModel::Build(const Taxonomy& taxonomy,
                                         const FrequencyTable& table,
                                         double log_base) {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw std::invalid_argument("log base must be a finite value > 1");
  }
  ProbabilityModel model;
  model.log_base_ = log_base;
  model.freq_.assign(taxonomy.num_concepts(), 0);

  std::vector<ConceptId> closure;
  for (const auto& [word, count] : table.counts) {
    const auto senses = taxonomy.SensesOf(word);
    if (senses.empty() || count == 0) continue;
    closure.clear();
    for (ConceptId sense : senses) {
      const auto s = taxonomy.Subsumers(sense);
      closure.insert(closure.end(), s.begin(), s.end());
    }
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    for (ConceptId c : closure) model.freq_[c.index] += count;
  }

  model.total_ = model.freq_[taxonomy.root().index];
  if (model.total_ == 0) {
    throw ValidationError(
        "N = 0: no counted word is attached to the taxonomy");
  }
  model.ComputeDerived();
  return model;
}

void ProbabilityModel::ComputeDerived() {
  const double n = static_cast<double>(total_);
  const double ln_base = std::log(log_base_);
  p_.resize(freq_.size());
  ic_.resize(freq_.size());
  for (std::size_t i = 0; i < freq_.size(); ++i) {
    const double f = static_cast<double>(freq_[i]);
    p_[i] = f / n;
    // log(N / f) keeps the root at exactly +0.
    ic_[i] = freq_[i] == 0 ? kInfiniteIc : std::log(n / f) / ln_base;
  }
}

ProbabilityModel ProbabilityModel::WithLogBase(double log_base) const {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw std::invalid_argument("log base must be a finite value > 1");
  }
  ProbabilityModel copy = *this;
  copy.log_base_ = log_base;
  copy.ComputeDerived();
  return copy;
}

void WriteModelDump(std::ostream& out, const Taxonomy& taxonomy,
                    const ProbabilityModel& model) {
  std::vector<ConceptId> ids;
  ids.reserve(taxonomy.num_concepts());
  for (std::uint32_t i = 0; i < taxonomy.num_concepts(); ++i) {
    ids.push_back(ConceptId{i});
  }
  std::sort(ids.begin(), ids.end(), [&](ConceptId a, ConceptId b) {
    return taxonomy.name(a) < taxonomy.name(b);
  });
  char buf[64];
  for (ConceptId c : ids) {
    out << taxonomy.name(c) << '\t' << model.freq(c) << '\t';
    std::snprintf(buf, sizeof buf, "%.4f", model.p(c));
    out << buf << '\t';
    if (std::isinf(model.ic(c))) {
      out << "inf";
    } else {
      std::snprintf(buf, sizeof buf, "%.4f", model.ic(c));
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace icsim
