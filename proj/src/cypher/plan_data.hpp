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

// Internal representation of a physical plan, shared by the planner and the
// runtime.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "litgraph/cypher/executor.hpp"
#include "litgraph/regex.hpp"

namespace litgraph::cypher {

// Expression with variables resolved to row slots and property names
// resolved to graph keys.
struct CompiledExpr {
  enum class Op { Const, Slot, Property, Compare, Regex, And, Count, Nodes };

  Op op = Op::Const;
  Value constant;
  int slot = -1;
  // Unset when the property name does not occur in the graph at all.
  std::optional<PropertyKey> key;
  CompareOp cmp = CompareOp::Eq;
  std::shared_ptr<const WholeStringRegex> regex;
  std::vector<CompiledExpr> args;
};

struct PropertyCheck {
  std::optional<PropertyKey> key;
  PropertyValue value;
};

struct NodeConstraint {
  std::optional<NodeLabel> label;
  std::vector<PropertyCheck> props;
};

struct EdgeConstraint {
  std::optional<EdgeLabel> label;
  std::vector<PropertyCheck> props;
};

struct IndexSeekOp {
  int slot;
  NodeLabel label;
  PropertyKey key;
  PropertyValue value;
  NodeConstraint check;
};

struct ScanOp {
  int slot;
  // Unset: every node.
  std::optional<NodeLabel> label;
  NodeConstraint check;
};

struct CheckNodeOp {
  int slot;
  NodeConstraint check;
};

// Edge-uniqueness context: slots holding edges / edge lists already bound in
// the current MATCH clause.
struct UsedEdges {
  std::vector<int> edge_slots;
  std::vector<int> list_slots;
};

struct ExpandOp {
  int from;
  int edge_slot;
  int to;
  bool into;  // `to` already bound: only check adjacency
  Direction direction;
  EdgeConstraint edge;
  NodeConstraint target;
  UsedEdges used;
};

struct VarLengthExpandOp {
  int from;
  int list_slot;
  int to;
  bool into;
  Direction direction;
  EdgeConstraint edge;
  NodeConstraint target;
  std::int64_t min_hops;
  std::int64_t max_hops;
  // Traversal runs right-to-left in the pattern; store edges reversed so the
  // list is always in pattern order.
  bool reversed;
  UsedEdges used;
};

struct ShortestPathOp {
  int from;
  int to;
  int path_slot;
  int list_slot;  // -1 when the relationship is anonymous
  Direction direction;
  EdgeConstraint edge;
  std::int64_t min_hops;
  std::int64_t max_hops;
};

struct BuildPathOp {
  int path_slot;
  std::vector<int> node_slots;
  std::vector<int> rel_slots;
  std::vector<bool> rel_is_list;
};

struct FilterOp {
  CompiledExpr predicate;
};

struct ProjectOp {
  std::vector<std::pair<CompiledExpr, int>> items;
};

struct AggregateOp {
  std::vector<std::pair<CompiledExpr, int>> keys;
  // count(arg) -> slot
  std::vector<std::pair<CompiledExpr, int>> counts;
};

struct UnwindOp {
  CompiledExpr list;
  int slot;
};

struct SortOp {
  std::vector<std::pair<CompiledExpr, bool>> keys;  // (expr, descending)
  std::vector<int> column_slots;
};

struct LimitOp {
  std::int64_t count;
};

struct ProduceOp {
  std::vector<int> column_slots;
};

using Operator =
    std::variant<IndexSeekOp, ScanOp, CheckNodeOp, ExpandOp, VarLengthExpandOp,
                 ShortestPathOp, BuildPathOp, FilterOp, ProjectOp, AggregateOp,
                 UnwindOp, SortOp, LimitOp, ProduceOp>;

struct PlanData {
  const PropertyGraph* graph = nullptr;
  std::vector<Operator> operators;
  std::vector<PlanStep> steps;
  std::vector<std::string> columns;
  std::vector<std::string> warnings;
  int slot_count = 0;
};

Value evaluate(const CompiledExpr& expr, const Row& row,
               const PropertyGraph& graph);

// Filter semantics: true passes; false and null drop; anything else is an
// EvalError.
bool passes(const CompiledExpr& expr, const Row& row,
            const PropertyGraph& graph);

}  // namespace litgraph::cypher
