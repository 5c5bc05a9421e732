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

#include <algorithm>
#include <map>

#include "litgraph/cypher/parser.hpp"
#include "plan_data.hpp"

namespace litgraph::cypher {

namespace {

enum class VarKind { Node, Edge, EdgeList, Path, Value };

struct Binding {
  int slot;
  VarKind kind;
};

struct Pending {
  Expression expr;
  std::vector<std::string> vars;
};

std::string_view direction_arrow(Direction d) {
  switch (d) {
    case Direction::Out:
      return "->";
    case Direction::In:
      return "<-";
    case Direction::Any:
      return "--";
  }
  return "--";
}

std::string describe_props(const PropertyConstraints& props) {
  if (props.empty()) return "";
  std::string out = " {";
  for (std::size_t i = 0; i < props.size(); ++i)
    out += (i ? ", " : "") + props[i].first + ": " + props[i].second.to_literal();
  return out + "}";
}

class Planner {
 public:
  Planner(const PropertyGraph& graph, const PlanOptions& options)
      : graph_(graph), options_(options) {}

  std::shared_ptr<PlanData> build(const Query& query) {
    data_ = std::make_shared<PlanData>();
    data_->graph = &graph_;
    for (const auto& clause : query.clauses) {
      if (const auto* m = std::get_if<MatchClause>(&clause)) {
        plan_match(*m);
      } else if (const auto* w = std::get_if<WithClause>(&clause)) {
        plan_projection(w->items);
      } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
        int slot = new_slot();
        add(UnwindOp{compile(u->list), slot}, OperatorKind::Unwind,
            print(u->list) + " AS " + u->variable);
        scope_[u->variable] = {slot, VarKind::Value};
      } else if (const auto* r = std::get_if<ReturnClause>(&clause)) {
        plan_return(query, *r);
      }
    }
    data_->slot_count = slots_;
    return std::move(data_);
  }

 private:
  int new_slot() { return slots_++; }

  template <typename Op>
  void add(Op op, OperatorKind kind, std::string detail) {
    data_->operators.emplace_back(std::move(op));
    data_->steps.push_back({kind, std::move(detail)});
  }

  std::optional<PropertyKey> key(const std::string& name) const {
    return graph_.key(name);
  }

  CompiledExpr compile(const Expression& e) const {
    CompiledExpr c;
    switch (e.kind) {
      case ExprKind::Literal:
        c.op = CompiledExpr::Op::Const;
        c.constant = Value(e.literal);
        break;
      case ExprKind::Variable: {
        c.op = CompiledExpr::Op::Slot;
        auto it = scope_.find(e.name);
        if (it == scope_.end())
          throw UnboundVariable("variable '" + e.name + "' is not bound");
        c.slot = it->second.slot;
        break;
      }
      case ExprKind::Property:
        c.op = CompiledExpr::Op::Property;
        c.key = key(e.name);
        c.args.push_back(compile(e.args[0]));
        break;
      case ExprKind::Compare:
        c.op = CompiledExpr::Op::Compare;
        c.cmp = e.op;
        c.args.push_back(compile(e.args[0]));
        c.args.push_back(compile(e.args[1]));
        break;
      case ExprKind::Regex: {
        c.op = CompiledExpr::Op::Regex;
        c.args.push_back(compile(e.args[0]));
        try {
          c.regex = std::make_shared<WholeStringRegex>(e.args[1].literal.as_text());
        } catch (const BadPattern& ex) {
          throw EvalError(ex.what());
        }
        break;
      }
      case ExprKind::And:
        c.op = CompiledExpr::Op::And;
        for (const auto& a : e.args) c.args.push_back(compile(a));
        break;
      case ExprKind::Call:
        c.op = e.name == "count" ? CompiledExpr::Op::Count : CompiledExpr::Op::Nodes;
        c.args.push_back(compile(e.args[0]));
        break;
    }
    return c;
  }

  std::vector<PropertyCheck> checks(const PropertyConstraints& props) const {
    std::vector<PropertyCheck> out;
    for (const auto& [name, value] : props) out.push_back({key(name), value});
    return out;
  }

  NodeConstraint node_constraint(const NodePattern& n) const {
    return NodeConstraint{n.label, checks(n.properties)};
  }

  EdgeConstraint edge_constraint(const RelPattern& r) const {
    return EdgeConstraint{r.label, checks(r.properties)};
  }

  bool is_bound(const NodePattern& n) const {
    return n.variable && scope_.count(*n.variable);
  }

  std::string node_name(const NodePattern& n) const {
    return n.variable ? *n.variable : std::string("_anon");
  }

  struct SeekCandidate {
    PropertyKey key;
    PropertyValue value;
    // WHERE conjunct the seek answers, if it came from one.
    std::optional<std::size_t> pending;
  };

  // Key and value an IndexSeek could use for this node pattern.
  std::optional<SeekCandidate> index_candidate(const NodePattern& n) const {
    if (!options_.use_indexes || !n.label || is_bound(n)) return std::nullopt;
    for (const auto& [name, value] : n.properties) {
      auto k = key(name);
      if (k && graph_.has_index(*n.label, *k)) return SeekCandidate{*k, value, std::nullopt};
    }
    if (!n.variable) return std::nullopt;
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      const Expression& e = pending_[i].expr;
      if (e.kind != ExprKind::Compare || e.op != CompareOp::Eq) continue;
      for (int side = 0; side < 2; ++side) {
        const Expression& prop = e.args[side];
        const Expression& lit = e.args[1 - side];
        if (prop.kind != ExprKind::Property || lit.kind != ExprKind::Literal)
          continue;
        if (prop.args[0].kind != ExprKind::Variable ||
            prop.args[0].name != *n.variable)
          continue;
        auto k = key(prop.name);
        if (k && graph_.has_index(*n.label, *k)) return SeekCandidate{*k, lit.literal, i};
      }
    }
    return std::nullopt;
  }

  int selectivity(const NodePattern& n) const {
    if (is_bound(n)) return 3;
    if (index_candidate(n)) return 2;
    if (n.label) return 1;
    return 0;
  }

  // Binds a node pattern that has no incoming expansion: check it if the
  // variable is already bound, otherwise start a seek or scan.
  int bind_source(const NodePattern& n) {
    if (is_bound(n)) {
      int slot = scope_.at(*n.variable).slot;
      add(CheckNodeOp{slot, node_constraint(n)}, OperatorKind::CheckNode,
          *n.variable + ":" +
              (n.label ? std::string(to_string(*n.label)) : std::string("*")) +
              describe_props(n.properties));
      return slot;
    }
    int slot = new_slot();
    if (auto cand = index_candidate(n)) {
      add(IndexSeekOp{slot, *n.label, cand->key, cand->value, node_constraint(n)},
          OperatorKind::IndexSeek,
          std::string(to_string(*n.label)) + "." + graph_.key_name(cand->key) +
              " = " + cand->value.to_literal() + " -> " + node_name(n));
      if (cand->pending) pending_.erase(pending_.begin() + *cand->pending);
    } else if (n.label) {
      add(ScanOp{slot, n.label, node_constraint(n)}, OperatorKind::LabelScan,
          std::string(to_string(*n.label)) + describe_props(n.properties) +
              " -> " + node_name(n));
    } else {
      add(ScanOp{slot, std::nullopt, node_constraint(n)},
          OperatorKind::AllNodesScan,
          node_name(n) + describe_props(n.properties));
    }
    if (n.variable) scope_[*n.variable] = {slot, VarKind::Node};
    return slot;
  }

  void emit_ready() {
    for (auto it = pending_.begin(); it != pending_.end();) {
      bool ready = std::all_of(it->vars.begin(), it->vars.end(),
                               [&](const std::string& v) { return scope_.count(v); });
      if (ready) {
        add(FilterOp{compile(it->expr)}, OperatorKind::Filter, print(it->expr));
        it = pending_.erase(it);
      } else {
        ++it;
      }
    }
  }

  std::pair<std::int64_t, std::int64_t> hop_bounds(const RelPattern& r) {
    std::int64_t lo = r.range->lower();
    auto hi = r.range->upper();
    if (!hi) {
      data_->warnings.push_back(
          "variable-length relationship without an upper bound capped at " +
          std::to_string(kDefaultMaxHops) + " hops");
      hi = std::max(kDefaultMaxHops, lo);
    }
    return {lo, *hi};
  }

  static Direction traversal(RelDirection d, bool forward) {
    switch (d) {
      case RelDirection::Out:
        return forward ? Direction::Out : Direction::In;
      case RelDirection::In:
        return forward ? Direction::In : Direction::Out;
      case RelDirection::Undirected:
        return Direction::Any;
    }
    return Direction::Any;
  }

  // Expands from an already bound node to a neighbouring pattern node.
  void expand(const RelPattern& r, int from_slot, const NodePattern& target,
              bool forward, int& to_slot, int& rel_slot) {
    bool into = is_bound(target);
    to_slot = into ? scope_.at(*target.variable).slot : new_slot();
    rel_slot = new_slot();
    Direction dir = traversal(r.direction, forward);
    std::string label = r.label ? std::string(to_string(*r.label)) : "*";
    if (r.variable_length()) {
      auto [lo, hi] = hop_bounds(r);
      add(VarLengthExpandOp{from_slot, rel_slot, to_slot, into, dir,
                            edge_constraint(r), node_constraint(target), lo, hi,
                            !forward, used_},
          OperatorKind::VarLengthExpand,
          std::string(direction_arrow(dir)) + ":" + label + "*" +
              std::to_string(lo) + ".." + std::to_string(hi) +
              (into ? " into " : " -> ") + node_name(target));
      used_.list_slots.push_back(rel_slot);
      if (r.variable) scope_[*r.variable] = {rel_slot, VarKind::EdgeList};
    } else {
      add(ExpandOp{from_slot, rel_slot, to_slot, into, dir, edge_constraint(r),
                   node_constraint(target), used_},
          OperatorKind::ExpandEdge,
          std::string(direction_arrow(dir)) + ":" + label +
              (into ? " into " : " -> ") + node_name(target));
      used_.edge_slots.push_back(rel_slot);
      if (r.variable) scope_[*r.variable] = {rel_slot, VarKind::Edge};
    }
    if (!into && target.variable) scope_[*target.variable] = {to_slot, VarKind::Node};
  }

  void plan_chain(const Pattern& p) {
    const std::size_t k = p.nodes.size();
    std::size_t start = 0;
    int best = -1;
    for (std::size_t i = 0; i < k; ++i) {
      int s = selectivity(p.nodes[i]);
      if (s > best) {
        best = s;
        start = i;
      }
    }
    std::vector<int> node_slots(k, -1), rel_slots(p.rels.size(), -1);
    node_slots[start] = bind_source(p.nodes[start]);
    emit_ready();
    for (std::size_t i = start; i + 1 < k; ++i) {
      expand(p.rels[i], node_slots[i], p.nodes[i + 1], true, node_slots[i + 1],
             rel_slots[i]);
      emit_ready();
    }
    for (std::size_t i = start; i-- > 0;) {
      expand(p.rels[i], node_slots[i + 1], p.nodes[i], false, node_slots[i],
             rel_slots[i]);
      emit_ready();
    }
    if (p.path_variable) {
      int slot = new_slot();
      std::vector<bool> lists;
      for (const auto& r : p.rels) lists.push_back(r.variable_length());
      add(BuildPathOp{slot, node_slots, rel_slots, lists}, OperatorKind::BuildPath,
          *p.path_variable);
      scope_[*p.path_variable] = {slot, VarKind::Path};
      emit_ready();
    }
  }

  void plan_shortest(const Pattern& p) {
    int from = bind_source(p.nodes[0]);
    emit_ready();
    int to = bind_source(p.nodes[1]);
    emit_ready();
    const RelPattern& r = p.rels[0];
    std::int64_t lo = 1, hi = 1;
    if (r.range) std::tie(lo, hi) = hop_bounds(r);
    int path_slot = new_slot();
    int list_slot = r.variable ? new_slot() : -1;
    Direction dir = traversal(r.direction, true);
    add(ShortestPathOp{from, to, path_slot, list_slot, dir, edge_constraint(r), lo,
                       hi},
        OperatorKind::ShortestPathSearch,
        node_name(p.nodes[0]) + " " + std::string(direction_arrow(dir)) + ":" +
            (r.label ? std::string(to_string(*r.label)) : "*") + "*" +
            std::to_string(lo) + ".." + std::to_string(hi) + " " +
            node_name(p.nodes[1]));
    if (r.variable) scope_[*r.variable] = {list_slot, VarKind::EdgeList};
    if (p.path_variable) scope_[*p.path_variable] = {path_slot, VarKind::Path};
    emit_ready();
  }

  void plan_match(const MatchClause& m) {
    pending_.clear();
    used_ = UsedEdges{};
    if (m.where) {
      for (auto& c : conjuncts(*m.where)) {
        Pending p{c, {}};
        collect_variables(c, p.vars);
        pending_.push_back(std::move(p));
      }
    }
    emit_ready();
    for (const auto& p : m.patterns) {
      if (p.form == PatternForm::ShortestPath)
        plan_shortest(p);
      else
        plan_chain(p);
    }
    if (!pending_.empty())
      throw UnboundVariable("WHERE refers to unbound variables: " +
                            print(pending_.front().expr));
  }

  // Shared by WITH and RETURN; returns the output slots in item order.
  std::vector<int> plan_projection(const std::vector<ProjectionItem>& items) {
    bool aggregating = std::any_of(items.begin(), items.end(), [](const auto& i) {
      return i.expr.is_aggregate();
    });
    std::map<std::string, Binding> next;
    std::vector<int> slots;
    std::string detail;
    if (aggregating) {
      AggregateOp op;
      for (const auto& item : items) {
        int slot = new_slot();
        if (item.expr.is_aggregate())
          op.counts.emplace_back(compile(item.expr.args[0]), slot);
        else
          op.keys.emplace_back(compile(item.expr), slot);
        slots.push_back(slot);
        next[column_name(item)] = {slot, kind_of(item.expr)};
        detail += (detail.empty() ? "" : ", ") + column_name(item);
      }
      add(std::move(op), OperatorKind::Aggregate, detail);
    } else {
      ProjectOp op;
      for (const auto& item : items) {
        int slot = new_slot();
        op.items.emplace_back(compile(item.expr), slot);
        slots.push_back(slot);
        next[column_name(item)] = {slot, kind_of(item.expr)};
        detail += (detail.empty() ? "" : ", ") + column_name(item);
      }
      add(std::move(op), OperatorKind::Project, detail);
    }
    scope_ = std::move(next);
    return slots;
  }

  VarKind kind_of(const Expression& e) const {
    if (e.kind == ExprKind::Variable) return scope_.at(e.name).kind;
    return VarKind::Value;
  }

  void plan_return(const Query& q, const ReturnClause& r) {
    std::vector<int> slots = plan_projection(r.items);
    for (const auto& item : r.items) data_->columns.push_back(column_name(item));
    if (!q.order_by.empty()) {
      SortOp op;
      std::string detail;
      for (const auto& s : q.order_by) {
        CompiledExpr key;
        auto it = scope_.find(print(s.expr));
        if (it != scope_.end()) {
          key.op = CompiledExpr::Op::Slot;
          key.slot = it->second.slot;
        } else {
          key = compile(s.expr);
        }
        op.keys.emplace_back(std::move(key), s.descending);
        detail += (detail.empty() ? "" : ", ") + print(s.expr) +
                  (s.descending ? " DESC" : "");
      }
      op.column_slots = slots;
      add(std::move(op), OperatorKind::Sort, detail);
    }
    if (q.limit)
      add(LimitOp{*q.limit}, OperatorKind::Limit, std::to_string(*q.limit));
    std::string cols;
    for (const auto& c : data_->columns) cols += (cols.empty() ? "" : ", ") + c;
    add(ProduceOp{slots}, OperatorKind::Produce, cols);
  }

  const PropertyGraph& graph_;
  PlanOptions options_;
  std::shared_ptr<PlanData> data_;
  std::map<std::string, Binding> scope_;
  std::vector<Pending> pending_;
  UsedEdges used_;
  int slots_ = 0;
};

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::IndexSeek:
      return "IndexSeek";
    case OperatorKind::LabelScan:
      return "LabelScan";
    case OperatorKind::AllNodesScan:
      return "AllNodesScan";
    case OperatorKind::CheckNode:
      return "CheckNode";
    case OperatorKind::ExpandEdge:
      return "ExpandEdge";
    case OperatorKind::VarLengthExpand:
      return "VarLengthExpand";
    case OperatorKind::ShortestPathSearch:
      return "ShortestPathSearch";
    case OperatorKind::BuildPath:
      return "BuildPath";
    case OperatorKind::Filter:
      return "Filter";
    case OperatorKind::Project:
      return "Project";
    case OperatorKind::Aggregate:
      return "Aggregate";
    case OperatorKind::Unwind:
      return "Unwind";
    case OperatorKind::Sort:
      return "Sort";
    case OperatorKind::Limit:
      return "Limit";
    case OperatorKind::Produce:
      return "Produce";
  }
  return "?";
}

PhysicalPlan plan(const Query& query, const PropertyGraph& graph,
                  const PlanOptions& options) {
  validate(query);
  Planner planner(graph, options);
  return PhysicalPlan(planner.build(query));
}

}  // namespace litgraph::cypher
