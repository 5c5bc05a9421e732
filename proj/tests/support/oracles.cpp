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

#include "oracles.hpp"

#include <algorithm>

namespace litgraph::testing::oracle {

std::int64_t brute_h(const std::vector<std::int64_t>& c) {
  std::int64_t best = 0;
  for (std::int64_t h = 0; h <= static_cast<std::int64_t>(c.size()); ++h) {
    auto at_least = std::count_if(c.begin(), c.end(), [&](std::int64_t x) { return x >= h; });
    if (at_least >= h) best = h;
  }
  return best;
}

std::optional<double> brute_cd(std::size_t n, const std::vector<Citation>& cites, std::size_t focal) {
  auto cites_edge = [&](std::size_t a, std::size_t b) {
    for (const auto& c : cites)
      if (c.from == a && c.to == b) return true;
    return false;
  };
  std::vector<std::size_t> refs;
  for (std::size_t r = 0; r < n; ++r)
    if (cites_edge(focal, r)) refs.push_back(r);
  int num = 0, den = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (q == focal) continue;
    int f = cites_edge(q, focal) ? 1 : 0;
    int b = 0;
    for (std::size_t r : refs)
      if (cites_edge(q, r)) b = 1;
    if (!f && !b) continue;
    ++den;
    num += f - 2 * f * b;
  }
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / den;
}

PropertyGraph author_with_citations(const std::vector<std::int64_t>& counts, NodeId& a) {
  PropertyGraph g;
  a = g.add_node(NodeLabel::Author);
  for (std::int64_t c : counts) {
    NodeId p = g.add_node(NodeLabel::Paper);
    g.add_edge(a, EdgeLabel::AUTHORS, p);
    for (std::int64_t i = 0; i < c; ++i) g.add_edge(g.add_node(NodeLabel::Paper), EdgeLabel::CITES, p);
  }
  g.seal();
  return g;
}

PropertyGraph build_dag(std::size_t n, const std::vector<Citation>& cites) {
  PropertyGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(NodeLabel::Paper);
  for (const auto& c : cites) g.add_edge(NodeId{c.from}, EdgeLabel::CITES, NodeId{c.to});
  g.seal();
  return g;
}

std::vector<Citation> random_dag(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Citation> cites;
  std::bernoulli_distribution edge(p);
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (edge(rng)) cites.push_back({a, b});
  return cites;
}

}  // namespace litgraph::testing::oracle
