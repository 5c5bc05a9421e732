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

#include <string>
#include <variant>
#include <vector>

#include "litgraph/graph.hpp"
#include "litgraph/property_value.hpp"

namespace litgraph::cypher {

// A query-time value: a property literal (including null), a node, an edge,
// a path, or a list of values.
class Value {
 public:
  enum class Kind { Scalar, Node, Edge, Path, List };
  using List = std::vector<Value>;

  Value() = default;
  Value(PropertyValue v) : v_(std::move(v)) {}
  Value(NodeId n) : v_(n) {}
  Value(EdgeId e) : v_(e) {}
  Value(litgraph::Path p) : v_(std::move(p)) {}
  Value(List l) : v_(std::move(l)) {}

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_null() const { return kind() == Kind::Scalar && scalar().is_null(); }
  bool is_node() const { return kind() == Kind::Node; }
  bool is_edge() const { return kind() == Kind::Edge; }
  bool is_path() const { return kind() == Kind::Path; }
  bool is_list() const { return kind() == Kind::List; }
  bool is_scalar() const { return kind() == Kind::Scalar; }

  const PropertyValue& scalar() const { return std::get<PropertyValue>(v_); }
  NodeId node() const { return std::get<NodeId>(v_); }
  EdgeId edge() const { return std::get<EdgeId>(v_); }
  const litgraph::Path& path() const { return std::get<litgraph::Path>(v_); }
  const List& list() const { return std::get<List>(v_); }

  bool operator==(const Value&) const = default;

  std::size_t hash() const;

 private:
  std::variant<PropertyValue, NodeId, EdgeId, litgraph::Path, List> v_;
};

// Total order used for ORDER BY, grouping and bag comparison:
// node < edge < list < path < scalar, scalars per litgraph::total_compare
// (so null sorts last ascending).
int total_compare(const Value& a, const Value& b);

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept { return v.hash(); }
};

using Row = std::vector<Value>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  // Set when a row cap cut the result short.
  bool truncated = false;
};

// Column names equal and rows equal as multisets.
bool bag_equal(const ResultTable& a, const ResultTable& b);
// Column names equal and rows equal in order.
bool sequence_equal(const ResultTable& a, const ResultTable& b);

// Human-readable rendering: nodes as (:Label {k:v,...}), edges as
// [:LABEL {...}], paths as alternating node/edge text with arrows.
std::string format_value(const Value& v, const PropertyGraph& graph);

// Tab-separated table: a header line of column names, then one line per row.
std::string format_table(const ResultTable& table, const PropertyGraph& graph);

// Debug rendering with internal ids, e.g. #3 for node 3.
std::string debug_string(const Value& v);
std::string debug_string(const Row& row);

}  // namespace litgraph::cypher
