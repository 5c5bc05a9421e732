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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "litgraph/property_value.hpp"
#include "litgraph/schema.hpp"

namespace litgraph::cypher {

enum class ExprKind {
  Literal,
  Variable,
  Property,  // args[0].name
  Compare,   // args[0] op args[1]
  Regex,     // args[0] =~ args[1] (a text literal)
  And,       // args[0] AND args[1] AND ...
  Call,      // name(args...)
};

enum class CompareOp { Eq, Lt, Gt, Le, Ge };

struct Expression {
  ExprKind kind = ExprKind::Literal;
  PropertyValue literal;
  // Variable name, property name, or lower-cased function name.
  std::string name;
  CompareOp op = CompareOp::Eq;
  std::vector<Expression> args;

  static Expression make_literal(PropertyValue v);
  static Expression make_variable(std::string name);
  static Expression make_property(std::string variable, std::string property);
  static Expression make_compare(CompareOp op, Expression lhs, Expression rhs);
  static Expression make_regex(Expression lhs, std::string pattern);
  static Expression make_and(std::vector<Expression> operands);
  static Expression make_call(std::string function, std::vector<Expression> args);

  bool is_aggregate() const { return kind == ExprKind::Call && name == "count"; }

  bool operator==(const Expression&) const = default;
};

using PropertyConstraints = std::vector<std::pair<std::string, PropertyValue>>;

struct NodePattern {
  std::optional<std::string> variable;
  std::optional<NodeLabel> label;
  PropertyConstraints properties;
  bool operator==(const NodePattern&) const = default;
};

enum class RelDirection { Out, In, Undirected };

// `*`, `*n`, `*n..`, `*..m`, `*n..m`, remembered as written.
struct HopRange {
  std::optional<std::int64_t> min;
  std::optional<std::int64_t> max;
  bool has_dots = false;

  std::int64_t lower() const { return min.value_or(1); }
  // Upper bound as written; `*n` means exactly n.
  std::optional<std::int64_t> upper() const {
    if (!has_dots && min) return min;
    return max;
  }
  bool operator==(const HopRange&) const = default;
};

struct RelPattern {
  std::optional<std::string> variable;
  std::optional<EdgeLabel> label;
  RelDirection direction = RelDirection::Out;
  std::optional<HopRange> range;
  PropertyConstraints properties;

  bool variable_length() const { return range.has_value(); }
  bool operator==(const RelPattern&) const = default;
};

enum class PatternForm {
  Chain,
  Parenthesized,  // p=((a)-[]->(b))
  ShortestPath,
};

struct Pattern {
  std::optional<std::string> path_variable;
  PatternForm form = PatternForm::Chain;
  // nodes.size() == rels.size() + 1
  std::vector<NodePattern> nodes;
  std::vector<RelPattern> rels;
  bool operator==(const Pattern&) const = default;
};

struct MatchClause {
  std::vector<Pattern> patterns;
  std::optional<Expression> where;
  bool operator==(const MatchClause&) const = default;
};

struct ProjectionItem {
  Expression expr;
  std::optional<std::string> alias;
  bool operator==(const ProjectionItem&) const = default;
};

struct WithClause {
  std::vector<ProjectionItem> items;
  bool operator==(const WithClause&) const = default;
};

struct UnwindClause {
  Expression list;
  std::string variable;
  bool operator==(const UnwindClause&) const = default;
};

struct ReturnClause {
  std::vector<ProjectionItem> items;
  bool operator==(const ReturnClause&) const = default;
};

using Clause = std::variant<MatchClause, WithClause, UnwindClause, ReturnClause>;

struct SortItem {
  Expression expr;
  bool descending = false;
  // ASC written out explicitly (kept for faithful printing).
  bool explicit_direction = false;
  bool operator==(const SortItem&) const = default;
};

// Clauses in source order; the last clause is always the ReturnClause.
struct Query {
  std::vector<Clause> clauses;
  std::vector<SortItem> order_by;
  std::optional<std::int64_t> limit;

  const ReturnClause& return_clause() const {
    return std::get<ReturnClause>(clauses.back());
  }
  bool operator==(const Query&) const = default;
};

// Canonical text of an expression, e.g. `count(p)`, `a.name`.
std::string print(const Expression& expr);
// Canonical text of a whole query; parse(print(q)) == q.
std::string print(const Query& query);
std::string print(const Pattern& pattern);

// Output column name: the alias, or the printed expression.
std::string column_name(const ProjectionItem& item);

// Flattens nested AND into a conjunct list.
std::vector<Expression> conjuncts(const Expression& expr);

// Names of all variables an expression reads.
void collect_variables(const Expression& expr, std::vector<std::string>& out);

bool contains_aggregate(const Expression& expr);

}  // namespace litgraph::cypher
