// Copyright 2026 The litgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "litgraph/metrics/metrics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "litgraph/regex.hpp"

namespace litgraph::metrics {

namespace {

std::vector<NodeId> entities_named(const PropertyGraph& g, std::string_view name) {
  auto found = g.index_lookup(NodeLabel::Entity, "name", PropertyValue(std::string(name)));
  if (found.empty()) throw EntityNotFound("no entity named \"" + std::string(name) + "\"");
  return found;
}

std::vector<NodeId> far_nodes(const PropertyGraph& g, NodeId n, EdgeLabel label, Direction dir) {
  std::vector<NodeId> out;
  for (const Adjacent& a : g.adjacency(n, label, dir)) out.push_back(a.node);
  return out;
}

bool text_matches(const PropertyGraph& g, NodeId n, const char* prop, const WholeStringRegex& re) {
  const PropertyValue& v = g.property(n, prop);
  return v.is_text() && re.matches(v.as_text());
}

void require_author(const PropertyGraph& g, NodeId author) {
  if (!g.contains(author) || g.label(author) != NodeLabel::Author)
    throw AuthorNotFound("node " + std::to_string(author.value) + " is not an author");
}

}  // namespace

NodeId find_author(const PropertyGraph& g, const AuthorRef& ref) {
  if (ref.author_id) {
    auto found = g.index_lookup(NodeLabel::Author, "author_id", PropertyValue(*ref.author_id));
    if (found.empty()) throw AuthorNotFound("no author with id " + std::to_string(*ref.author_id));
    if (found.size() > 1)
      throw AmbiguousName("author id " + std::to_string(*ref.author_id) + " is not unique");
    return found.front();
  }
  std::vector<NodeId> found;
  for (NodeId a : g.index_lookup(NodeLabel::Author, "last", PropertyValue(ref.last)))
    if (g.property(a, "first") == PropertyValue(ref.first)) found.push_back(a);
  std::string name = ref.first + " " + ref.last;
  if (found.empty()) throw AuthorNotFound("no author named " + name);
  if (found.size() > 1)
    throw AmbiguousName(std::to_string(found.size()) + " authors named " + name +
                        "; use author_id");
  return found.front();
}

std::optional<Path> coauthor_shortest_path(const PropertyGraph& g, NodeId a, NodeId b,
                                           std::int64_t max_author_edges) {
  require_author(g, a);
  require_author(g, b);
  return shortest_path(g, a, b, {EdgeLabel::AUTHORS}, max_author_edges, Direction::Any);
}

std::optional<Path> coauthor_shortest_path(const PropertyGraph& g, const AuthorRef& a,
                                           const AuthorRef& b, std::int64_t max_author_edges) {
  return coauthor_shortest_path(g, find_author(g, a), find_author(g, b), max_author_edges);
}

ExpertRanking find_experts(const PropertyGraph& g, std::string_view entity_name,
                           std::optional<std::int64_t> since_year,
                           std::optional<std::size_t> limit) {
  std::map<NodeId, std::int64_t> counts;
  for (NodeId e : entities_named(g, entity_name)) {
    for (const Adjacent& m : g.adjacency(e, EdgeLabel::MENTIONS, Direction::In)) {
      if (since_year) {
        const PropertyValue& y = g.property(m.node, "year");
        bool later = (y.is_integer() && y.as_integer() > *since_year) ||
                     (y.is_real() && y.as_real() > static_cast<double>(*since_year));
        if (!later) continue;
      }
      for (const Adjacent& w : g.adjacency(m.node, EdgeLabel::AUTHORS, Direction::In))
        ++counts[w.node];
    }
  }
  ExpertRanking out;
  for (const auto& [a, c] : counts) out.push_back({a, c});
  std::stable_sort(out.begin(), out.end(),
                   [](const Expert& x, const Expert& y) { return x.paper_count > y.paper_count; });
  if (limit && out.size() > *limit) out.resize(*limit);
  return out;
}

std::vector<NodeId> fuzzy_entity(const PropertyGraph& g, std::string_view pattern) {
  WholeStringRegex re(pattern);
  std::vector<NodeId> out;
  for (NodeId e : g.nodes_with_label(NodeLabel::Entity))
    if (text_matches(g, e, "name", re)) out.push_back(e);
  return out;
}

std::vector<NodeId> papers_mentioning_all(const PropertyGraph& g,
                                          const std::vector<std::string>& entity_names,
                                          std::optional<std::size_t> limit) {
  if (entity_names.empty()) throw EntityNotFound("no entity names given");
  std::vector<std::set<NodeId>> sets;
  for (const auto& name : entity_names) {
    std::set<NodeId> papers;
    for (NodeId e : entities_named(g, name))
      for (NodeId p : far_nodes(g, e, EdgeLabel::MENTIONS, Direction::In)) papers.insert(p);
    sets.push_back(std::move(papers));
  }
  std::vector<NodeId> out;
  for (NodeId p : sets.front()) {
    bool all = std::all_of(sets.begin() + 1, sets.end(),
                           [&](const std::set<NodeId>& s) { return s.count(p) > 0; });
    if (all) out.push_back(p);
    if (limit && out.size() == *limit) break;
  }
  return out;
}

std::vector<RelationTriple> entity_relation_chain(const PropertyGraph& g,
                                                  std::string_view name_a,
                                                  std::string_view name_b,
                                                  std::int64_t max_hops) {
  NodeId a = entities_named(g, name_a).front();
  NodeId b = entities_named(g, name_b).front();
  auto path = shortest_path(g, a, b, {EdgeLabel::WITH_ENTITY}, max_hops, Direction::Any);
  if (!path)
    throw NoPath("no WITH_ENTITY path between \"" + std::string(name_a) + "\" and \"" +
                 std::string(name_b) + "\"");
  auto at_position = [&](NodeId n, std::int64_t pos) {
    std::vector<NodeId> out;
    for (const Adjacent& adj : g.adjacency(n, EdgeLabel::WITH_ENTITY, Direction::Out))
      if (g.edge_property(adj.edge, "position") == PropertyValue(pos)) out.push_back(adj.node);
    return out;
  };
  std::vector<RelationTriple> out;
  for (NodeId n : path->nodes) {
    if (g.label(n) != NodeLabel::RelationInstance) continue;
    auto e0s = at_position(n, 0);
    auto e1s = at_position(n, 1);
    auto rs = far_nodes(g, n, EdgeLabel::WITH_RELATIONSHIP, Direction::Out);
    for (NodeId e0 : e0s)
      for (NodeId r : rs)
        for (NodeId e1 : e1s) out.push_back({e0, r, e1});
  }
  return out;
}

std::int64_t venue_citation_count(const PropertyGraph& g, std::string_view citing_venue,
                                  std::string_view cited_venue) {
  WholeStringRegex citing(citing_venue), cited(cited_venue);
  // Matching APPEARS_IN edges per paper, for each side.
  auto attachments = [&](NodeId p, const WholeStringRegex& re) {
    std::vector<EdgeId> out;
    for (const Adjacent& adj : g.adjacency(p, EdgeLabel::APPEARS_IN, Direction::Out))
      if (text_matches(g, adj.node, "text", re)) out.push_back(adj.edge);
    return out;
  };
  std::int64_t total = 0;
  for (NodeId p1 : g.nodes_with_label(NodeLabel::Paper)) {
    auto from = attachments(p1, citing);
    if (from.empty()) continue;
    for (const Adjacent& c : g.adjacency(p1, EdgeLabel::CITES, Direction::Out)) {
      auto to = attachments(c.node, cited);
      std::int64_t pairs = static_cast<std::int64_t>(from.size() * to.size());
      if (c.node == p1) {
        // A self-citation cannot bind one APPEARS_IN edge on both sides.
        for (EdgeId e : from)
          if (std::find(to.begin(), to.end(), e) != to.end()) --pairs;
      }
      total += pairs;
    }
  }
  return total;
}

std::vector<NodeId> papers_of(const PropertyGraph& g, NodeId author) {
  require_author(g, author);
  auto out = far_nodes(g, author, EdgeLabel::AUTHORS, Direction::Out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t citation_count(const PropertyGraph& g, NodeId paper) {
  return static_cast<std::int64_t>(g.adjacency(paper, EdgeLabel::CITES, Direction::In).size());
}

std::int64_t h_index(std::vector<std::int64_t> c) {
  std::sort(c.begin(), c.end(), std::greater<>());
  std::int64_t h = 0;
  while (h < static_cast<std::int64_t>(c.size()) && c[h] >= h + 1) ++h;
  return h;
}

std::int64_t i10_index(const std::vector<std::int64_t>& c) {
  return std::count_if(c.begin(), c.end(), [](std::int64_t x) { return x >= 10; });
}

namespace {
std::vector<std::int64_t> author_citations(const PropertyGraph& g, NodeId author) {
  std::vector<std::int64_t> c;
  for (NodeId p : papers_of(g, author)) c.push_back(citation_count(g, p));
  return c;
}
}  // namespace

std::int64_t h_index(const PropertyGraph& g, NodeId author) {
  return h_index(author_citations(g, author));
}

std::int64_t i10_index(const PropertyGraph& g, NodeId author) {
  return i10_index(author_citations(g, author));
}

double cd_index(const PropertyGraph& g, NodeId paper) {
  if (!g.contains(paper) || g.label(paper) != NodeLabel::Paper)
    throw PaperNotFound("node " + std::to_string(paper.value) + " is not a paper");
  std::set<NodeId> refs;
  for (NodeId r : far_nodes(g, paper, EdgeLabel::CITES, Direction::Out)) refs.insert(r);

  // Candidates: citers of the focal paper and of its references.
  std::set<NodeId> candidates;
  for (NodeId q : far_nodes(g, paper, EdgeLabel::CITES, Direction::In)) candidates.insert(q);
  for (NodeId r : refs)
    for (NodeId q : far_nodes(g, r, EdgeLabel::CITES, Direction::In)) candidates.insert(q);
  candidates.erase(paper);
  if (candidates.empty())
    throw Undefined("nothing cites paper " + std::to_string(paper.value) + " or its references");

  std::int64_t sum = 0;
  for (NodeId q : candidates) {
    bool f = false, b = false;
    for (NodeId t : far_nodes(g, q, EdgeLabel::CITES, Direction::Out)) {
      if (t == paper) f = true;
      if (refs.count(t)) b = true;
    }
    sum += (f ? 1 : 0) - 2 * (f && b ? 1 : 0);
  }
  return static_cast<double>(sum) / static_cast<double>(candidates.size());
}

NodeId find_paper_by_id(const PropertyGraph& g, std::string_view paper_id) {
  auto found = g.index_lookup(NodeLabel::Paper, "paper_id", PropertyValue(std::string(paper_id)));
  if (found.empty()) throw PaperNotFound("no paper with id " + std::string(paper_id));
  return found.front();
}

}  // namespace litgraph::metrics
