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

#include "litgraph/cypher/ast.hpp"

#include <algorithm>

namespace litgraph::cypher {

Expression Expression::make_literal(PropertyValue v) {
  Expression e;
  e.kind = ExprKind::Literal;
  e.literal = std::move(v);
  return e;
}

Expression Expression::make_variable(std::string name) {
  Expression e;
  e.kind = ExprKind::Variable;
  e.name = std::move(name);
  return e;
}

Expression Expression::make_property(std::string variable,
                                     std::string property) {
  Expression e;
  e.kind = ExprKind::Property;
  e.name = std::move(property);
  e.args.push_back(make_variable(std::move(variable)));
  return e;
}

Expression Expression::make_compare(CompareOp op, Expression lhs,
                                    Expression rhs) {
  Expression e;
  e.kind = ExprKind::Compare;
  e.op = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expression Expression::make_regex(Expression lhs, std::string pattern) {
  Expression e;
  e.kind = ExprKind::Regex;
  e.args.push_back(std::move(lhs));
  e.args.push_back(make_literal(PropertyValue(std::move(pattern))));
  return e;
}

Expression Expression::make_and(std::vector<Expression> operands) {
  Expression e;
  e.kind = ExprKind::And;
  e.args = std::move(operands);
  return e;
}

Expression Expression::make_call(std::string function,
                                 std::vector<Expression> args) {
  Expression e;
  e.kind = ExprKind::Call;
  e.name = std::move(function);
  e.args = std::move(args);
  return e;
}

namespace {

std::string_view op_text(CompareOp op) {
  switch (op) {
    case CompareOp::Eq:
      return "=";
    case CompareOp::Lt:
      return "<";
    case CompareOp::Gt:
      return ">";
    case CompareOp::Le:
      return "<=";
    case CompareOp::Ge:
      return ">=";
  }
  return "=";
}

bool is_binary(const Expression& e) {
  return e.kind == ExprKind::Compare || e.kind == ExprKind::Regex ||
         e.kind == ExprKind::And;
}

std::string print_operand(const Expression& e) {
  return is_binary(e) ? "(" + print(e) + ")" : print(e);
}

std::string print_props(const PropertyConstraints& props) {
  std::string out = "{";
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (i) out += ", ";
    out += props[i].first + ": " + props[i].second.to_literal();
  }
  return out + "}";
}

std::string print_node(const NodePattern& n) {
  std::string out = "(";
  if (n.variable) out += *n.variable;
  if (n.label) out += ":" + std::string(to_string(*n.label));
  if (!n.properties.empty()) {
    if (n.variable || n.label) out += " ";
    out += print_props(n.properties);
  }
  return out + ")";
}

std::string print_rel(const RelPattern& r) {
  std::string out = r.direction == RelDirection::In ? "<-[" : "-[";
  if (r.variable) out += *r.variable;
  if (r.label) out += ":" + std::string(to_string(*r.label));
  if (r.range) {
    out += "*";
    if (r.range->min) out += std::to_string(*r.range->min);
    if (r.range->has_dots) {
      out += "..";
      if (r.range->max) out += std::to_string(*r.range->max);
    }
  }
  if (!r.properties.empty()) {
    if (r.variable || r.label || r.range) out += " ";
    out += print_props(r.properties);
  }
  out += r.direction == RelDirection::Out ? "]->" : "]-";
  return out;
}

std::string print_chain(const Pattern& p) {
  std::string out = print_node(p.nodes[0]);
  for (std::size_t i = 0; i < p.rels.size(); ++i)
    out += print_rel(p.rels[i]) + print_node(p.nodes[i + 1]);
  return out;
}

std::string print_items(const std::vector<ProjectionItem>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += print(items[i].expr);
    if (items[i].alias) out += " AS " + *items[i].alias;
  }
  return out;
}

}  // namespace

std::string print(const Expression& e) {
  switch (e.kind) {
    case ExprKind::Literal:
      return e.literal.to_literal();
    case ExprKind::Variable:
      return e.name;
    case ExprKind::Property:
      return print_operand(e.args[0]) + "." + e.name;
    case ExprKind::Compare:
      return print_operand(e.args[0]) + " " + std::string(op_text(e.op)) + " " +
             print_operand(e.args[1]);
    case ExprKind::Regex:
      return print_operand(e.args[0]) + " =~ " + print_operand(e.args[1]);
    case ExprKind::And: {
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += " AND ";
        out += print_operand(e.args[i]);
      }
      return out;
    }
    case ExprKind::Call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += print(e.args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

std::string print(const Pattern& p) {
  std::string out;
  if (p.path_variable) out += *p.path_variable + " = ";
  switch (p.form) {
    case PatternForm::Chain:
      out += print_chain(p);
      break;
    case PatternForm::Parenthesized:
      out += "(" + print_chain(p) + ")";
      break;
    case PatternForm::ShortestPath:
      out += "shortestPath(" + print_chain(p) + ")";
      break;
  }
  return out;
}

std::string print(const Query& q) {
  std::string out;
  for (const auto& clause : q.clauses) {
    if (!out.empty()) out += " ";
    if (const auto* m = std::get_if<MatchClause>(&clause)) {
      out += "MATCH ";
      for (std::size_t i = 0; i < m->patterns.size(); ++i)
        out += (i ? ", " : "") + print(m->patterns[i]);
      if (m->where) out += " WHERE " + print(*m->where);
    } else if (const auto* w = std::get_if<WithClause>(&clause)) {
      out += "WITH " + print_items(w->items);
    } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
      out += "UNWIND " + print(u->list) + " AS " + u->variable;
    } else if (const auto* r = std::get_if<ReturnClause>(&clause)) {
      out += "RETURN " + print_items(r->items);
    }
  }
  if (!q.order_by.empty()) {
    out += " ORDER BY ";
    for (std::size_t i = 0; i < q.order_by.size(); ++i) {
      if (i) out += ", ";
      out += print(q.order_by[i].expr);
      if (q.order_by[i].descending)
        out += " DESC";
      else if (q.order_by[i].explicit_direction)
        out += " ASC";
    }
  }
  if (q.limit) out += " LIMIT " + std::to_string(*q.limit);
  return out;
}

std::string column_name(const ProjectionItem& item) {
  return item.alias ? *item.alias : print(item.expr);
}

std::vector<Expression> conjuncts(const Expression& expr) {
  if (expr.kind != ExprKind::And) return {expr};
  std::vector<Expression> out;
  for (const auto& a : expr.args) {
    auto inner = conjuncts(a);
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

void collect_variables(const Expression& expr, std::vector<std::string>& out) {
  if (expr.kind == ExprKind::Variable) {
    if (std::find(out.begin(), out.end(), expr.name) == out.end())
      out.push_back(expr.name);
    return;
  }
  for (const auto& a : expr.args) collect_variables(a, out);
}

bool contains_aggregate(const Expression& expr) {
  if (expr.is_aggregate()) return true;
  for (const auto& a : expr.args)
    if (contains_aggregate(a)) return true;
  return false;
}

}  // namespace litgraph::cypher
