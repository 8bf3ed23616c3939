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


#ifndef ICSIM_TAXONOMY_H_
#define ICSIM_TAXONOMY_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace icsim {

// Dense handle for a concept, valid only for the Taxonomy that issued it.
// Indices follow the lexicographic order of the concept ids, with a
// synthetic root (if any) last.
struct ConceptId {
  std::uint32_t index = 0;

  friend auto operator<=>(ConceptId, ConceptId) = default;
};

// Longest-path depth below the root; `max_depth` is the taxonomy's MAX.
struct DepthInfo {
  int max_depth = 0;
  std::vector<int> depth;

  int operator[](ConceptId c) const { return depth[c.index]; }
};

// Result of a minimum over sense pairs of IS-A path lengths.
struct PathMatch {
  int length = 0;
  ConceptId from;
  ConceptId to;
};

// Lowercases ASCII letters; other bytes pass through untouched.
std::string NormalizeWord(std::string_view word);

class TaxonomyBuilder;

// Immutable IS-A taxonomy with multiple inheritance and a word -> senses
// index. All reflexive-transitive subsumer sets are materialised at build
// time, so every const member is safe to call concurrently.
class Taxonomy {
 public:
  // Reads the tab-separated edge and lexicon formats. Throws ParseError on
  // malformed lines and ValidationError on cycles, dangling lexicon
  // references or an empty edge source.
  static Taxonomy Load(std::istream& edges, std::istream& lexicon,
                       std::string_view edges_name = "<edges>",
                       std::string_view lexicon_name = "<lexicon>");
  static Taxonomy LoadFiles(const std::filesystem::path& edges,
                            const std::filesystem::path& lexicon);

  std::size_t num_concepts() const { return names_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t num_words() const { return senses_.size(); }

  ConceptId root() const { return root_; }
  bool has_synthetic_root() const { return synthetic_root_; }

  const std::string& name(ConceptId c) const { return names_[c.index]; }
  std::optional<ConceptId> Find(std::string_view name) const;
  // Like Find, but throws QueryError for an unknown id.
  ConceptId Require(std::string_view name) const;

  std::span<const ConceptId> parents(ConceptId c) const;
  std::span<const ConceptId> children(ConceptId c) const;

  // Every concept, parents before children.
  std::span<const ConceptId> topological_order() const { return topo_order_; }

  // Ancestors of `c` including `c` itself, sorted by index. Always contains
  // the root.
  std::span<const ConceptId> Subsumers(ConceptId c) const;
  bool Subsumes(ConceptId ancestor, ConceptId c) const;
  // Subsumers(c1) intersected with Subsumers(c2), sorted by index.
  std::vector<ConceptId> CommonSubsumers(ConceptId c1, ConceptId c2) const;

  // Fewest IS-A edges between two concepts, edges walked in either direction.
  int ShortestPathLength(ConceptId c1, ConceptId c2) const;
  // Minimum path length over the cross product of two concept sets. Ties
  // resolve to the smallest (from, to) index pair. Both sets must be
  // non-empty.
  PathMatch MinPathLength(std::span<const ConceptId> from,
                          std::span<const ConceptId> to) const;

  const DepthInfo& depths() const { return depths_; }
  int max_depth() const { return depths_.max_depth; }

  // s(w) after case normalisation, sorted by index; empty for unknown words.
  std::span<const ConceptId> SensesOf(std::string_view word) const;
  const std::map<std::string, std::vector<ConceptId>, std::less<>>& lexicon()
      const {
    return senses_;
  }

 private:
  friend class TaxonomyBuilder;
  Taxonomy() = default;

  void CheckConcept(ConceptId c) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ConceptId> index_;
  std::vector<std::vector<ConceptId>> parents_;
  std::vector<std::vector<ConceptId>> children_;
  std::vector<std::vector<ConceptId>> subsumers_;
  std::vector<ConceptId> topo_order_;
  std::map<std::string, std::vector<ConceptId>, std::less<>> senses_;
  DepthInfo depths_;
  ConceptId root_;
  bool synthetic_root_ = false;
  std::size_t num_edges_ = 0;
};

// Longest-path depths in one pass over the topological order.
DepthInfo ComputeDepths(const Taxonomy& taxonomy);

// Programmatic construction. Concepts must be declared before edges or
// senses refer to them.
class TaxonomyBuilder {
 public:
  // Throws ValidationError if `id` was already added or is empty.
  TaxonomyBuilder& AddConcept(std::string id);
  // Adds `id` unless present.
  TaxonomyBuilder& DeclareConcept(std::string id);
  // `child` IS-A `parent`. Repeated edges are idempotent.
  TaxonomyBuilder& AddEdge(std::string_view child, std::string_view parent);
  TaxonomyBuilder& AddSense(std::string_view word, std::string_view concept_id);

  bool Contains(std::string_view id) const;

  // Validates, inserts a synthetic root above multiple parentless concepts
  // and materialises the derived indexes. The builder is left empty.
  Taxonomy Build();

 private:
  std::map<std::string, std::size_t, std::less<>> ids_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::pair<std::string, std::size_t>> senses_;
};

}  // namespace icsim

#endif  // ICSIM_TAXONOMY_H_
