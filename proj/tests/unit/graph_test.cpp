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

#include <gtest/gtest.h>

#include <random>

#include "litgraph/graph.hpp"
#include "support.hpp"

namespace litgraph {
namespace {

using testing::find_node;
using testing::fixture_a;

TEST(GraphTest, FirstNodeIdIsZero) {
  PropertyGraph g;
  NodeId n = g.add_node(NodeLabel::Author, {{"first", PropertyValue("Clarence")},
                                            {"last", PropertyValue("Ellis")}});
  EXPECT_EQ(n.value, 0u);
  EXPECT_NE(g.add_node(NodeLabel::Author).value, n.value);
}

TEST(GraphTest, IntegerPropertyRoundTrip) {
  PropertyGraph g;
  NodeId p = g.add_node(NodeLabel::Paper, {{"year", PropertyValue(std::int64_t{2017})}});
  const auto& year = g.property(p, "year");
  ASSERT_TRUE(year.is_integer());
  EXPECT_EQ(year.as_integer(), 2017);
  EXPECT_TRUE(g.property(p, "title").is_null());
}

TEST(GraphTest, EdgeSignatureChecked) {
  PropertyGraph g;
  NodeId a = g.add_node(NodeLabel::Author);
  NodeId p = g.add_node(NodeLabel::Paper);
  EXPECT_NO_THROW(g.add_edge(a, EdgeLabel::AUTHORS, p));
  EXPECT_THROW(g.add_edge(p, EdgeLabel::AUTHORS, a), SignatureViolation);
  EXPECT_THROW(g.add_edge(a, EdgeLabel::AUTHORS, NodeId{99}), UnknownNode);
}

TEST(GraphTest, EdgeProperties) {
  PropertyGraph g;
  NodeId ri = g.add_node(NodeLabel::RelationInstance);
  NodeId e = g.add_node(NodeLabel::Entity);
  EdgeId edge = g.add_edge(ri, EdgeLabel::WITH_ENTITY, e, {{"position", PropertyValue(std::int64_t{0})}});
  EXPECT_EQ(g.edge_property(edge, "position"), PropertyValue(std::int64_t{0}));
}

TEST(GraphTest, SealLifecycle) {
  PropertyGraph g;
  g.seal();
  EXPECT_EQ(g.counts().total_nodes(), 0u);
  EXPECT_EQ(g.counts(), GraphCounts{});
  EXPECT_THROW(g.add_node(NodeLabel::Paper), SealedGraph);
  g.seal();
  EXPECT_TRUE(g.sealed());
}

TEST(GraphTest, NeighborsBeforeSealThrows) {
  PropertyGraph g;
  NodeId a = g.add_node(NodeLabel::Author);
  EXPECT_THROW(g.neighbors(a, std::nullopt, Direction::Any), NotSealed);
}

TEST(GraphTest, NeighborsOnFixture) {
  const auto& g = fixture_a().graph;
  NodeId a1 = find_node(g, NodeLabel::Author, "last", "Swayamdipta");
  NodeId p1 = find_node(g, NodeLabel::Paper, "title", "T1");
  auto out = g.neighbors(a1, EdgeLabel::AUTHORS, Direction::Out);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].node, p1);
  auto in = g.neighbors(p1, EdgeLabel::AUTHORS, Direction::In);
  ASSERT_EQ(in.size(), 2u);
  for (const auto& nb : in) EXPECT_EQ(g.edge(nb.edge).target, p1);
}

TEST(GraphTest, IsolatedNodeHasNoNeighbors) {
  PropertyGraph g;
  NodeId n = g.add_node(NodeLabel::Venue);
  g.seal();
  EXPECT_TRUE(g.neighbors(n, std::nullopt, Direction::Any).empty());
}

TEST(GraphTest, SelfLoopListedOncePerDirection) {
  PropertyGraph g;
  NodeId p = g.add_node(NodeLabel::Paper);
  g.add_edge(p, EdgeLabel::CITES, p);
  g.seal();
  EXPECT_EQ(g.neighbors(p, EdgeLabel::CITES, Direction::Out).size(), 1u);
  EXPECT_EQ(g.neighbors(p, EdgeLabel::CITES, Direction::In).size(), 1u);
  EXPECT_EQ(g.neighbors(p, EdgeLabel::CITES, Direction::Any).size(), 2u);
}

TEST(GraphTest, IndexLookupOnFixture) {
  const auto& g = fixture_a().graph;
  NodeId a1 = find_node(g, NodeLabel::Author, "last", "Swayamdipta");
  EXPECT_EQ(g.index_lookup(NodeLabel::Author, "author_id", PropertyValue(std::int64_t{2705113})),
            std::vector<NodeId>{a1});
  NodeId e1 = find_node(g, NodeLabel::Entity, "name", "Relationship extraction");
  EXPECT_EQ(g.index_lookup(NodeLabel::Entity, "name", PropertyValue("Relationship extraction")),
            std::vector<NodeId>{e1});
  EXPECT_TRUE(g.index_lookup(NodeLabel::Entity, "name", PropertyValue("No Such Entity")).empty());
  EXPECT_TRUE(g.index_lookup(NodeLabel::Paper, "year", PropertyValue("2017")).empty());
  EXPECT_EQ(g.index_lookup(NodeLabel::Author, "last", PropertyValue("Ellis")).size(), 1u);
}

TEST(GraphTest, CreateIndexTwiceIsNoOp) {
  PropertyGraph g;
  g.add_node(NodeLabel::Entity, {{"name", PropertyValue("x")}});
  g.create_index(NodeLabel::Entity, "name");
  g.create_index(NodeLabel::Entity, "name");
  g.seal();
  EXPECT_EQ(g.indexes().size(), 1u);
  EXPECT_EQ(g.index_lookup(NodeLabel::Entity, "name", PropertyValue("x")).size(), 1u);
}

TEST(GraphTest, IndexMatchesScanOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    PropertyGraph g;
    std::uniform_int_distribution<int> year(2000, 2009), label(0, 1);
    std::size_t n = 200 + trial * 16;
    for (std::size_t i = 0; i < n; ++i) {
      PropertyMap props;
      if (rng() % 5) props.emplace("year", PropertyValue(std::int64_t{year(rng)}));
      if (rng() % 7 == 0) props.emplace("year", PropertyValue("2001"));
      g.add_node(label(rng) ? NodeLabel::Paper : NodeLabel::Venue, props);
    }
    g.create_index(NodeLabel::Paper, "year");
    g.seal();
    g.audit();
    for (int y = 1999; y <= 2010; ++y) {
      PropertyValue v(std::int64_t{y});
      std::vector<NodeId> scan;
      for (NodeId p : g.nodes_with_label(NodeLabel::Paper))
        if (g.property(p, "year") == v) scan.push_back(p);
      EXPECT_EQ(g.index_lookup(NodeLabel::Paper, "year", v), scan);
    }
  }
}

TEST(GraphTest, CountsOnFixture) {
  auto c = fixture_a().graph.counts();
  EXPECT_EQ(c.node(NodeLabel::Author), 4u);
  EXPECT_EQ(c.node(NodeLabel::Paper), 3u);
  EXPECT_EQ(c.node(NodeLabel::Entity), 5u);
  EXPECT_EQ(c.node(NodeLabel::Venue), 2u);
  EXPECT_EQ(c.node(NodeLabel::Affiliation), 0u);
  EXPECT_EQ(c.node(NodeLabel::Relation), 1u);
  EXPECT_EQ(c.node(NodeLabel::RelationInstance), 1u);
  EXPECT_EQ(c.edge(EdgeLabel::AUTHORS), 5u);
  EXPECT_EQ(c.edge(EdgeLabel::MENTIONS), 4u);
  EXPECT_EQ(c.edge(EdgeLabel::APPEARS_IN), 2u);
  EXPECT_EQ(c.edge(EdgeLabel::CITES), 1u);
  EXPECT_EQ(c.edge(EdgeLabel::MENTIONS_RELATION), 1u);
  EXPECT_EQ(c.edge(EdgeLabel::WITH_ENTITY), 2u);
  EXPECT_EQ(c.edge(EdgeLabel::WITH_RELATIONSHIP), 1u);
  EXPECT_EQ(c.edge(EdgeLabel::AFFILIATED_WITH), 0u);
  EXPECT_EQ(c.total_nodes(), 16u);
  EXPECT_EQ(c.total_edges(), 16u);
}

TEST(ShortestPathTest, FixtureAuthorsPath) {
  const auto& g = fixture_a().graph;
  NodeId a1 = find_node(g, NodeLabel::Author, "last", "Swayamdipta");
  NodeId a2 = find_node(g, NodeLabel::Author, "last", "Zettlemoyer");
  NodeId a3 = find_node(g, NodeLabel::Author, "last", "Barzilay");
  auto path = shortest_path(g, a1, a3, {EdgeLabel::AUTHORS}, 6);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->length(), 4u);
  EXPECT_EQ(path->nodes[2], a2);
  for (EdgeId e : path->edges) EXPECT_EQ(g.edge(e).label, EdgeLabel::AUTHORS);
  EXPECT_FALSE(shortest_path(g, a1, a3, {EdgeLabel::AUTHORS}, 3));
}

TEST(ShortestPathTest, SameEndpointsGiveZeroLengthPath) {
  const auto& g = fixture_a().graph;
  NodeId a1 = find_node(g, NodeLabel::Author, "last", "Swayamdipta");
  auto path = shortest_path(g, a1, a1, {EdgeLabel::AUTHORS}, 6);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->length(), 0u);
  EXPECT_EQ(path->nodes, std::vector<NodeId>{a1});

  ShortestPathOptions opts;
  opts.labels = {EdgeLabel::AUTHORS};
  opts.min_hops = 1;
  EXPECT_FALSE(shortest_path(g, a1, a1, opts));
}

TEST(ShortestPathTest, MatchesBfsOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    testing::RandomGraphOptions opts;
    opts.max_nodes = 120;
    opts.max_edges = 240;
    PropertyGraph g = testing::random_graph(rng, opts);
    if (g.node_count() == 0) continue;
    std::uniform_int_distribution<std::uint64_t> pick(0, g.node_count() - 1);
    for (int q = 0; q < 10; ++q) {
      NodeId s{pick(rng)}, t{pick(rng)};
      for (Direction dir : {Direction::Any, Direction::Out}) {
        auto oracle = testing::bfs_distance(g, s, t, {}, dir);
        auto path = shortest_path(g, s, t, {}, 15, dir);
        if (!oracle || *oracle > 15) {
          EXPECT_FALSE(path);
          continue;
        }
        ASSERT_TRUE(path);
        EXPECT_EQ(static_cast<std::int64_t>(path->length()), *oracle);
      }
    }
  }
}

}  // namespace
}  // namespace litgraph
