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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "litgraph/cypher/value.hpp"
#include "litgraph/graph.hpp"
#include "litgraph/ingest/ingest.hpp"

namespace litgraph::testing {

std::string fixture_dir();
std::string source_dir();

// FIXTURE-A imported from its CSV manifest. Built once per process.
const ingest::ImportResult& fixture_a();

// First node with label and text property `prop` equal to `value`.
NodeId find_node(const PropertyGraph& g, NodeLabel label, const std::string& prop,
                 const std::string& value);

// Textbook BFS over an edge list; returns the hop distance only.
std::optional<std::int64_t> bfs_distance(const PropertyGraph& g, NodeId src, NodeId dst,
                                         const std::vector<EdgeLabel>& labels,
                                         Direction dir);

struct RandomGraphOptions {
  std::size_t max_nodes = 40;
  std::size_t max_edges = 120;
  bool self_loops = true;
};

// Random schema-valid graph with small property domains (so equality
// predicates hit), sealed, with a random subset of indexes.
PropertyGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});

// Random query text drawn from the supported grammar, biased toward
// patterns that match on random_graph output.
std::string random_query(std::mt19937_64& rng);

// Row multiset check that tolerates LIMIT without ORDER BY: `limited` must
// have min(k, n) rows, each drawn from `full` without replacement.
bool sub_bag(const cypher::ResultTable& limited, const cypher::ResultTable& full,
             std::size_t k);

}  // namespace litgraph::testing
