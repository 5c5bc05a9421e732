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

#include "litgraph/schema.hpp"

namespace litgraph {

std::string_view to_string(NodeLabel label) {
  switch (label) {
    case NodeLabel::Paper:
      return "Paper";
    case NodeLabel::Author:
      return "Author";
    case NodeLabel::Entity:
      return "Entity";
    case NodeLabel::Venue:
      return "Venue";
    case NodeLabel::Affiliation:
      return "Affiliation";
    case NodeLabel::Relation:
      return "Relation";
    case NodeLabel::RelationInstance:
      return "RelationInstance";
  }
  return "?";
}

std::string_view to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::CITES:
      return "CITES";
    case EdgeLabel::AUTHORS:
      return "AUTHORS";
    case EdgeLabel::MENTIONS:
      return "MENTIONS";
    case EdgeLabel::APPEARS_IN:
      return "APPEARS_IN";
    case EdgeLabel::AFFILIATED_WITH:
      return "AFFILIATED_WITH";
    case EdgeLabel::MENTIONS_RELATION:
      return "MENTIONS_RELATION";
    case EdgeLabel::WITH_ENTITY:
      return "WITH_ENTITY";
    case EdgeLabel::WITH_RELATIONSHIP:
      return "WITH_RELATIONSHIP";
  }
  return "?";
}

std::optional<NodeLabel> parse_node_label(std::string_view name) {
  for (NodeLabel l : kAllNodeLabels)
    if (to_string(l) == name) return l;
  return std::nullopt;
}

std::optional<EdgeLabel> parse_edge_label(std::string_view name) {
  for (EdgeLabel l : kAllEdgeLabels)
    if (to_string(l) == name) return l;
  return std::nullopt;
}

}  // namespace litgraph
