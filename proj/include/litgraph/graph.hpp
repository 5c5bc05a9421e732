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

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "litgraph/errors.hpp"
#include "litgraph/property_value.hpp"
#include "litgraph/schema.hpp"

namespace litgraph {

struct NodeId {
  std::uint64_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

struct EdgeId {
  std::uint64_t value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

enum class Direction { Out, In, Any };

// Interned property name. Keys are graph-local.
using PropertyKey = std::uint32_t;

struct EdgeRecord {
  EdgeLabel label;
  NodeId source;
  NodeId target;
};

// One entry of a sealed adjacency list. `node` is the far endpoint.
struct Adjacent {
  EdgeLabel label;
  NodeId node;
  EdgeId edge;
};

struct Neighbor {
  EdgeId edge;
  NodeId node;
  bool operator==(const Neighbor&) const = default;
};

// Alternating node/edge sequence; nodes.size() == edges.size() + 1.
struct Path {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const Path&) const = default;
};

struct GraphCounts {
  std::array<std::size_t, kNodeLabelCount> nodes{};
  std::array<std::size_t, kEdgeLabelCount> edges{};

  std::size_t node(NodeLabel l) const { return nodes[index_of(l)]; }
  std::size_t edge(EdgeLabel l) const { return edges[index_of(l)]; }
  std::size_t total_nodes() const;
  std::size_t total_edges() const;
  bool operator==(const GraphCounts&) const = default;
};

// Typed property graph with a build phase (single writer, add_node/add_edge/
// create_index) and a sealed phase (immutable, any number of readers).
class PropertyGraph {
 public:
  PropertyGraph() = default;

  NodeId add_node(NodeLabel label, const PropertyMap& props = {});
  EdgeId add_edge(NodeId source, EdgeLabel label, NodeId target,
                  const PropertyMap& props = {});

  // Freezes the graph and builds sorted adjacency. Idempotent.
  void seal();
  bool sealed() const { return sealed_; }

  std::size_t node_count() const { return node_labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains(NodeId n) const { return n.value < node_labels_.size(); }
  bool contains(EdgeId e) const { return e.value < edges_.size(); }

  NodeLabel label(NodeId n) const;
  const EdgeRecord& edge(EdgeId e) const;

  std::optional<PropertyKey> key(std::string_view name) const;
  const std::string& key_name(PropertyKey key) const { return key_names_[key]; }

  // Missing properties read as null.
  const PropertyValue& property(NodeId n, PropertyKey key) const;
  const PropertyValue& property(NodeId n, std::string_view name) const;
  const PropertyValue& edge_property(EdgeId e, PropertyKey key) const;
  const PropertyValue& edge_property(EdgeId e, std::string_view name) const;
  PropertyMap properties(NodeId n) const;
  PropertyMap edge_properties(EdgeId e) const;

  // Sealed adjacency of one direction (Out or In), sorted by
  // (label, far node, edge).
  std::span<const Adjacent> adjacency(NodeId n, Direction dir) const;
  std::span<const Adjacent> adjacency(NodeId n, EdgeLabel label,
                                      Direction dir) const;

  // Every incident edge matching label and direction, sorted by
  // (far node, edge). With Direction::Any a self-loop is listed twice.
  std::vector<Neighbor> neighbors(NodeId n, std::optional<EdgeLabel> label,
                                  Direction dir) const;

  // Ascending node ids carrying `label`.
  std::span<const NodeId> nodes_with_label(NodeLabel label) const {
    return label_members_[index_of(label)];
  }

  void create_index(NodeLabel label, std::string_view property);
  bool has_index(NodeLabel label, std::string_view property) const;
  std::vector<std::pair<NodeLabel, std::string>> indexes() const;

  // Exact, type-strict match. Served from an index when one exists,
  // otherwise by scanning the label. Result ascending.
  std::vector<NodeId> index_lookup(NodeLabel label, std::string_view property,
                                   const PropertyValue& value) const;
  // Index-only probe; empty span when the index or value is absent.
  std::span<const NodeId> index_seek(NodeLabel label, PropertyKey key,
                                     const PropertyValue& value) const;
  bool has_index(NodeLabel label, PropertyKey key) const;

  GraphCounts counts() const { return counts_; }

  // Full consistency check of edge table, adjacency and indexes; throws
  // Error describing the first violation found.
  void audit() const;

 private:
  struct PropEntry {
    PropertyKey key;
    PropertyValue value;
  };
  using PropList = std::vector<PropEntry>;

  struct IndexKey {
    NodeLabel label;
    PropertyKey key;
    bool operator==(const IndexKey&) const = default;
  };
  struct IndexKeyHash {
    std::size_t operator()(const IndexKey& k) const noexcept {
      return (static_cast<std::size_t>(k.key) << 4) ^ index_of(k.label);
    }
  };
  using ValueIndex = std::unordered_map<PropertyValue, std::vector<NodeId>>;

  void require_building(const char* op) const;
  void require_sealed(const char* op) const;
  void check_node(NodeId n) const;
  PropertyKey intern(std::string_view name);
  PropList to_prop_list(const PropertyMap& props);
  static const PropertyValue& find_prop(const PropList& list, PropertyKey key);

  bool sealed_ = false;

  std::vector<NodeLabel> node_labels_;
  std::vector<PropList> node_props_;
  std::array<std::vector<NodeId>, kNodeLabelCount> label_members_;

  std::vector<EdgeRecord> edges_;
  std::vector<PropList> edge_props_;

  std::vector<std::string> key_names_;
  std::unordered_map<std::string, PropertyKey> key_ids_;

  std::unordered_map<IndexKey, ValueIndex, IndexKeyHash> indexes_;

  // CSR adjacency, filled by seal().
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<Adjacent> out_, in_;

  GraphCounts counts_;
};

struct ShortestPathOptions {
  // Empty means every edge label.
  std::vector<EdgeLabel> labels;
  std::int64_t max_hops = 15;
  // 0 or 1. With 1, src == dst yields no path.
  std::int64_t min_hops = 0;
  Direction direction = Direction::Any;
  // Extra per-edge predicate (e.g. relationship property constraints).
  std::function<bool(EdgeId)> edge_filter;
  // Called once per dequeued node; may throw to abort (timeouts).
  std::function<void()> on_step;
};

// Breadth-first search from `source`. Neighbors are expanded in ascending
// (node id, edge id) order, so among all minimal paths the one with the
// lexicographically smallest (node, edge) sequence is returned.
std::optional<Path> shortest_path(const PropertyGraph& graph, NodeId source,
                                  NodeId target,
                                  const ShortestPathOptions& options);

std::optional<Path> shortest_path(const PropertyGraph& graph, NodeId source,
                                  NodeId target,
                                  const std::vector<EdgeLabel>& labels,
                                  std::int64_t max_hops,
                                  Direction direction = Direction::Any);

}  // namespace litgraph
