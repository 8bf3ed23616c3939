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


#include "icsim/taxonomy.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>

#include "icsim/error.h"
#include "line_reader.h"

namespace icsim {
namespace {

constexpr std::string_view kSyntheticRootName = "<root>";

std::vector<ConceptId> SortedUnique(std::vector<ConceptId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Follows unfinished parents from `start` until a concept repeats. Every
// concept left over by Kahn's algorithm has at least one unfinished parent,
// so the walk always closes a cycle.
std::string DescribeCycle(const std::vector<std::vector<std::size_t>>& parents,
                          const std::vector<int>& pending, std::size_t start,
                          const std::vector<std::string>& names) {
  std::vector<std::size_t> path;
  std::vector<int> seen_at(parents.size(), -1);
  std::size_t current = start;
  while (seen_at[current] < 0) {
    seen_at[current] = static_cast<int>(path.size());
    path.push_back(current);
    for (std::size_t parent : parents[current]) {
      if (pending[parent] > 0) {
        current = parent;
        break;
      }
    }
  }
  std::string out;
  for (std::size_t i = static_cast<std::size_t>(seen_at[current]);
       i < path.size(); ++i) {
    out += names[path[i]];
    out += " -> ";
  }
  out += names[current];
  return out;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

std::string NormalizeWord(std::string_view word) {
  std::string out(word);
  for (char& ch : out) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

Taxonomy Taxonomy::Load(std::istream& edges, std::istream& lexicon,
                        std::string_view edges_name,
                        std::string_view lexicon_name) {
  TaxonomyBuilder builder;
  std::vector<std::pair<std::string, std::string>> edge_list;
  internal::LineReader edge_lines(edges, edges_name);
  std::string line;
  while (edge_lines.Next(line)) {
    const auto fields = internal::Split(line, '\t');
    if (fields.size() > 2 || fields[0].empty() ||
        (fields.size() == 2 && fields[1].empty())) {
      throw ParseError(edge_lines.source(), edge_lines.line_number(),
                       "expected 'child<TAB>parent'");
    }
    builder.DeclareConcept(std::string(fields[0]));
    if (fields.size() == 2) {
      builder.DeclareConcept(std::string(fields[1]));
      edge_list.emplace_back(fields[0], fields[1]);
    }
  }
  if (edges.bad()) throw IoError("read error in " + edge_lines.source());
  for (const auto& [child, parent] : edge_list) builder.AddEdge(child, parent);

  internal::LineReader sense_lines(lexicon, lexicon_name);
  while (sense_lines.Next(line)) {
    const auto fields = internal::Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(sense_lines.source(), sense_lines.line_number(),
                       "expected 'word<TAB>concept_id'");
    }
    if (!builder.Contains(fields[1])) {
      throw ValidationError(sense_lines.source() + ":" +
                            std::to_string(sense_lines.line_number()) +
                            ": dangling concept reference '" +
                            std::string(fields[1]) + "'");
    }
    builder.AddSense(fields[0], fields[1]);
  }
  if (lexicon.bad()) throw IoError("read error in " + sense_lines.source());
  return builder.Build();
}

Taxonomy Taxonomy::LoadFiles(const std::filesystem::path& edges,
                             const std::filesystem::path& lexicon) {
  std::ifstream edge_in = OpenOrThrow(edges);
  std::ifstream lexicon_in = OpenOrThrow(lexicon);
  return Load(edge_in, lexicon_in, edges.string(), lexicon.string());
}

std::optional<ConceptId> Taxonomy::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ConceptId Taxonomy::Require(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw QueryError("unknown concept '" + std::string(name) + "'");
}

void Taxonomy::CheckConcept(ConceptId c) const {
  if (c.index >= names_.size()) {
    throw QueryError("unknown concept index " + std::to_string(c.index));
  }
}

std::span<const ConceptId> Taxonomy::parents(ConceptId c) const {
  CheckConcept(c);
  return parents_[c.index];
}

std::span<const ConceptId> Taxonomy::children(ConceptId c) const {
  CheckConcept(c);
  return children_[c.index];
}

std::span<const ConceptId> Taxonomy::Subsumers(ConceptId c) const {
  CheckConcept(c);
  return subsumers_[c.index];
}

bool Taxonomy::Subsumes(ConceptId ancestor, ConceptId c) const {
  const auto s = Subsumers(c);
  return std::binary_search(s.begin(), s.end(), ancestor);
}

std::vector<ConceptId> Taxonomy::CommonSubsumers(ConceptId c1,
                                                 ConceptId c2) const {
  const auto s1 = Subsumers(c1);
  const auto s2 = Subsumers(c2);
  std::vector<ConceptId> common;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                        std::back_inserter(common));
  return common;
}

int Taxonomy::ShortestPathLength(ConceptId c1, ConceptId c2) const {
  const ConceptId from[] = {c1};
  const ConceptId to[] = {c2};
  return MinPathLength(from, to).length;
}

PathMatch Taxonomy::MinPathLength(std::span<const ConceptId> from,
                                  std::span<const ConceptId> to) const {
  if (from.empty() || to.empty()) {
    throw QueryError("path query over an empty concept set");
  }
  std::vector<ConceptId> sources(from.begin(), from.end());
  std::vector<ConceptId> targets(to.begin(), to.end());
  for (ConceptId c : sources) CheckConcept(c);
  for (ConceptId c : targets) CheckConcept(c);
  sources = SortedUnique(std::move(sources));
  targets = SortedUnique(std::move(targets));

  std::vector<char> is_target(names_.size(), 0);
  for (ConceptId c : targets) is_target[c.index] = 1;

  PathMatch best{std::numeric_limits<int>::max(), {}, {}};
  std::vector<int> dist(names_.size());
  std::vector<ConceptId> frontier;
  std::vector<ConceptId> next;
  for (ConceptId source : sources) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[source.index] = 0;
    frontier.assign(1, source);
    for (int level = 0; !frontier.empty() && level < best.length; ++level) {
      // Smallest-index target on this level, if any.
      std::optional<ConceptId> hit;
      for (ConceptId c : frontier) {
        if (is_target[c.index] && (!hit || c < *hit)) hit = c;
      }
      if (hit) {
        best = {level, source, *hit};
        break;
      }
      next.clear();
      auto visit = [&](ConceptId n) {
        if (dist[n.index] < 0) {
          dist[n.index] = level + 1;
          next.push_back(n);
        }
      };
      for (ConceptId c : frontier) {
        for (ConceptId p : parents_[c.index]) visit(p);
        for (ConceptId ch : children_[c.index]) visit(ch);
      }
      frontier.swap(next);
    }
  }
  if (best.length == std::numeric_limits<int>::max()) {
    throw QueryError("concepts are not connected");
  }
  return best;
}

std::span<const ConceptId> Taxonomy::SensesOf(std::string_view word) const {
  auto it = senses_.find(NormalizeWord(word));
  if (it == senses_.end()) return {};
  return it->second;
}

DepthInfo ComputeDepths(const Taxonomy& taxonomy) {
  DepthInfo info;
  info.depth.assign(taxonomy.num_concepts(), 0);
  for (ConceptId c : taxonomy.topological_order()) {
    int d = 0;
    for (ConceptId p : taxonomy.parents(c)) {
      d = std::max(d, info.depth[p.index] + 1);
    }
    info.depth[c.index] = d;
    info.max_depth = std::max(info.max_depth, d);
  }
  return info;
}

TaxonomyBuilder& TaxonomyBuilder::AddConcept(std::string id) {
  if (id.empty()) throw ValidationError("empty concept id");
  if (ids_.contains(id)) {
    throw ValidationError("duplicate concept id '" + id + "'");
  }
  const std::size_t next = ids_.size();
  ids_.emplace(std::move(id), next);
  return *this;
}

TaxonomyBuilder& TaxonomyBuilder::DeclareConcept(std::string id) {
  if (!Contains(id)) AddConcept(std::move(id));
  return *this;
}

bool TaxonomyBuilder::Contains(std::string_view id) const {
  return ids_.find(id) != ids_.end();
}

TaxonomyBuilder& TaxonomyBuilder::AddEdge(std::string_view child,
                                          std::string_view parent) {
  auto c = ids_.find(child);
  auto p = ids_.find(parent);
  if (c == ids_.end() || p == ids_.end()) {
    throw ValidationError("dangling concept reference in edge '" +
                          std::string(child) + "' -> '" + std::string(parent) +
                          "'");
  }
  edges_.emplace_back(c->second, p->second);
  return *this;
}

TaxonomyBuilder& TaxonomyBuilder::AddSense(std::string_view word,
                                           std::string_view concept_id) {
  auto c = ids_.find(concept_id);
  if (c == ids_.end()) {
    throw ValidationError("dangling concept reference '" +
                          std::string(concept_id) + "' for word '" +
                          std::string(word) + "'");
  }
  if (word.empty()) throw ValidationError("empty word in lexicon");
  senses_.emplace_back(NormalizeWord(word), c->second);
  return *this;
}

Taxonomy TaxonomyBuilder::Build() {
  if (ids_.empty()) throw ValidationError("empty taxonomy: no concepts");

  // Insertion order -> lexicographic order.
  std::vector<std::size_t> remap(ids_.size());
  std::vector<std::string> names;
  names.reserve(ids_.size() + 1);
  for (const auto& [name, inserted] : ids_) {
    remap[inserted] = names.size();
    names.push_back(name);
  }
  const std::size_t n = names.size();

  std::vector<std::vector<std::size_t>> parents(n);
  for (auto [child, parent] : edges_) {
    parents[remap[child]].push_back(remap[parent]);
  }
  for (auto& list : parents) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // Kahn's algorithm, parents before children.
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<int> pending(n);
  for (std::size_t c = 0; c < n; ++c) {
    pending[c] = static_cast<int>(parents[c].size());
    for (std::size_t p : parents[c]) children[p].push_back(c);
  }
  std::vector<std::size_t> order;
  order.reserve(n + 1);
  for (std::size_t c = 0; c < n; ++c) {
    if (pending[c] == 0) order.push_back(c);
  }
  const std::size_t num_parentless = order.size();
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t child : children[order[head]]) {
      if (--pending[child] == 0) order.push_back(child);
    }
  }
  if (order.size() != n) {
    for (std::size_t c = 0; c < n; ++c) {
      if (pending[c] > 0) {
        throw ValidationError("cycle detected: " +
                              DescribeCycle(parents, pending, c, names));
      }
    }
  }

  Taxonomy t;
  std::size_t root = order.front();
  if (num_parentless > 1) {
    std::string root_name(kSyntheticRootName);
    for (int suffix = 1; ids_.contains(root_name); ++suffix) {
      root_name = std::string(kSyntheticRootName) + "#" + std::to_string(suffix);
    }
    root = n;
    names.push_back(std::move(root_name));
    parents.emplace_back();
    for (std::size_t i = 0; i < num_parentless; ++i) {
      parents[order[i]].push_back(root);
    }
    order.insert(order.begin(), root);
    t.synthetic_root_ = true;
  }

  const std::size_t total = names.size();
  t.root_ = ConceptId{static_cast<std::uint32_t>(root)};
  t.parents_.resize(total);
  t.children_.resize(total);
  for (std::size_t c = 0; c < total; ++c) {
    for (std::size_t p : parents[c]) {
      const ConceptId pid{static_cast<std::uint32_t>(p)};
      const ConceptId cid{static_cast<std::uint32_t>(c)};
      t.parents_[c].push_back(pid);
      t.children_[p].push_back(cid);
      ++t.num_edges_;
    }
  }
  for (auto& list : t.children_) std::sort(list.begin(), list.end());

  t.topo_order_.reserve(total);
  for (std::size_t c : order) {
    t.topo_order_.push_back(ConceptId{static_cast<std::uint32_t>(c)});
  }

  t.subsumers_.resize(total);
  for (ConceptId c : t.topo_order_) {
    std::vector<ConceptId> s{c};
    for (ConceptId p : t.parents_[c.index]) {
      const auto& ps = t.subsumers_[p.index];
      s.insert(s.end(), ps.begin(), ps.end());
    }
    t.subsumers_[c.index] = SortedUnique(std::move(s));
  }

  for (std::size_t c = 0; c < total; ++c) {
    t.index_.emplace(names[c], ConceptId{static_cast<std::uint32_t>(c)});
  }
  t.names_ = std::move(names);

  for (auto& [word, inserted] : senses_) {
    t.senses_[word].push_back(
        ConceptId{static_cast<std::uint32_t>(remap[inserted])});
  }
  for (auto& [word, list] : t.senses_) list = SortedUnique(std::move(list));

  t.depths_ = ComputeDepths(t);

  ids_.clear();
  edges_.clear();
  senses_.clear();
  return t;
}

}  // namespace icsim
