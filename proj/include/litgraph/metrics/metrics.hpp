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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "litgraph/graph.hpp"

namespace litgraph::metrics {

// Author lookup by author_id or by exact (first, last).
struct AuthorRef {
  std::optional<std::int64_t> author_id;
  std::string first;
  std::string last;

  static AuthorRef by_id(std::int64_t id) { return {id, {}, {}}; }
  static AuthorRef by_name(std::string first, std::string last) {
    return {std::nullopt, std::move(first), std::move(last)};
  }
};

// Throws AuthorNotFound, or AmbiguousName when a name matches several nodes.
NodeId find_author(const PropertyGraph& graph, const AuthorRef& ref);

// Undirected path over AUTHORS edges; zero-length when a == b.
std::optional<Path> coauthor_shortest_path(const PropertyGraph& graph, NodeId a, NodeId b,
                                           std::int64_t max_author_edges = 6);
std::optional<Path> coauthor_shortest_path(const PropertyGraph& graph, const AuthorRef& a,
                                           const AuthorRef& b,
                                           std::int64_t max_author_edges = 6);

struct Expert {
  NodeId author;
  std::int64_t paper_count = 0;
  bool operator==(const Expert&) const = default;
};
using ExpertRanking = std::vector<Expert>;

// Authors ranked by papers with year > since_year mentioning the entity,
// highest count first, ties by ascending author id. Counts follow the
// pattern's bag semantics, so parallel edges count more than once. Papers
// without a year are skipped when since_year is set. Throws EntityNotFound.
ExpertRanking find_experts(const PropertyGraph& graph, std::string_view entity_name,
                           std::optional<std::int64_t> since_year,
                           std::optional<std::size_t> limit = std::nullopt);

// Entities whose whole name matches the pattern, ascending. Throws BadPattern.
std::vector<NodeId> fuzzy_entity(const PropertyGraph& graph, std::string_view pattern);

// Papers mentioning every named entity, ascending. Throws EntityNotFound.
std::vector<NodeId> papers_mentioning_all(const PropertyGraph& graph,
                                          const std::vector<std::string>& entity_names,
                                          std::optional<std::size_t> limit = std::nullopt);

struct RelationTriple {
  NodeId entity0;
  NodeId relation;
  NodeId entity1;
  bool operator==(const RelationTriple&) const = default;
};

// Triples of the relation instances on the shortest WITH_ENTITY path between
// two entities, in path order. Names resolve to their lowest node id.
// Throws EntityNotFound, NoPath.
std::vector<RelationTriple> entity_relation_chain(const PropertyGraph& graph,
                                                  std::string_view name_a,
                                                  std::string_view name_b,
                                                  std::int64_t max_hops = 15);

// CITES edges between papers at matching venues, one per matching
// (citing venue, cited venue) attachment pair. Throws BadPattern.
std::int64_t venue_citation_count(const PropertyGraph& graph, std::string_view citing_venue,
                                  std::string_view cited_venue);

// Distinct papers the author wrote, ascending.
std::vector<NodeId> papers_of(const PropertyGraph& graph, NodeId author);
// In-degree over CITES.
std::int64_t citation_count(const PropertyGraph& graph, NodeId paper);

// Throw AuthorNotFound when `author` is not an Author node.
std::int64_t h_index(const PropertyGraph& graph, NodeId author);
std::int64_t i10_index(const PropertyGraph& graph, NodeId author);

// Over a plain list of citation counts.
std::int64_t h_index(std::vector<std::int64_t> citations);
std::int64_t i10_index(const std::vector<std::int64_t>& citations);

// Disruption score in [-1, 1], no time window. Throws PaperNotFound, or
// Undefined when nobody cites the paper or its references.
double cd_index(const PropertyGraph& graph, NodeId paper);

// Paper by its 40-hex paper_id. Throws PaperNotFound.
NodeId find_paper_by_id(const PropertyGraph& graph, std::string_view paper_id);

}  // namespace litgraph::metrics
