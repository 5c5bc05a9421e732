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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace litgraph {

enum class NodeLabel : std::uint8_t {
  Paper,
  Author,
  Entity,
  Venue,
  Affiliation,
  Relation,
  RelationInstance,
};

enum class EdgeLabel : std::uint8_t {
  CITES,
  AUTHORS,
  MENTIONS,
  APPEARS_IN,
  AFFILIATED_WITH,
  MENTIONS_RELATION,
  WITH_ENTITY,
  WITH_RELATIONSHIP,
};

inline constexpr std::size_t kNodeLabelCount = 7;
inline constexpr std::size_t kEdgeLabelCount = 8;

inline constexpr std::array<NodeLabel, kNodeLabelCount> kAllNodeLabels = {
    NodeLabel::Paper,       NodeLabel::Author,   NodeLabel::Entity,
    NodeLabel::Venue,       NodeLabel::Affiliation, NodeLabel::Relation,
    NodeLabel::RelationInstance,
};

inline constexpr std::array<EdgeLabel, kEdgeLabelCount> kAllEdgeLabels = {
    EdgeLabel::CITES,           EdgeLabel::AUTHORS,
    EdgeLabel::MENTIONS,        EdgeLabel::APPEARS_IN,
    EdgeLabel::AFFILIATED_WITH, EdgeLabel::MENTIONS_RELATION,
    EdgeLabel::WITH_ENTITY,     EdgeLabel::WITH_RELATIONSHIP,
};

struct EdgeSignature {
  NodeLabel source;
  NodeLabel target;
};

constexpr EdgeSignature signature(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::CITES:
      return {NodeLabel::Paper, NodeLabel::Paper};
    case EdgeLabel::AUTHORS:
      return {NodeLabel::Author, NodeLabel::Paper};
    case EdgeLabel::MENTIONS:
      return {NodeLabel::Paper, NodeLabel::Entity};
    case EdgeLabel::APPEARS_IN:
      return {NodeLabel::Paper, NodeLabel::Venue};
    case EdgeLabel::AFFILIATED_WITH:
      return {NodeLabel::Author, NodeLabel::Affiliation};
    case EdgeLabel::MENTIONS_RELATION:
      return {NodeLabel::Paper, NodeLabel::RelationInstance};
    case EdgeLabel::WITH_ENTITY:
      return {NodeLabel::RelationInstance, NodeLabel::Entity};
    case EdgeLabel::WITH_RELATIONSHIP:
      return {NodeLabel::RelationInstance, NodeLabel::Relation};
  }
  return {NodeLabel::Paper, NodeLabel::Paper};
}

std::string_view to_string(NodeLabel label);
std::string_view to_string(EdgeLabel label);

// Exact, case-sensitive names as they appear in queries and manifests.
std::optional<NodeLabel> parse_node_label(std::string_view name);
std::optional<EdgeLabel> parse_edge_label(std::string_view name);

constexpr std::size_t index_of(NodeLabel l) { return static_cast<std::size_t>(l); }
constexpr std::size_t index_of(EdgeLabel l) { return static_cast<std::size_t>(l); }

}  // namespace litgraph
