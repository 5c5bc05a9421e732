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
#include <chrono>
#include <unordered_map>

#include "litgraph/cypher/parser.hpp"
#include "plan_data.hpp"

namespace litgraph::cypher {

namespace {

using Clock = std::chrono::steady_clock;

Value from_truth(Truth t) {
  if (!t) return Value();
  return Value(PropertyValue(*t));
}

bool props_match(const std::vector<PropertyCheck>& checks,
                 const std::function<const PropertyValue&(PropertyKey)>& get) {
  for (const auto& c : checks) {
    if (!c.key) return false;
    if (filter_equals(get(*c.key), c.value) != Truth(true)) return false;
  }
  return true;
}

bool node_ok(const PropertyGraph& g, NodeId n, const NodeConstraint& c) {
  if (c.label && g.label(n) != *c.label) return false;
  if (c.props.empty()) return true;
  return props_match(c.props, [&](PropertyKey k) -> const PropertyValue& {
    return g.property(n, k);
  });
}

bool edge_ok(const PropertyGraph& g, EdgeId e, const EdgeConstraint& c) {
  if (c.label && g.edge(e).label != *c.label) return false;
  if (c.props.empty()) return true;
  return props_match(c.props, [&](PropertyKey k) -> const PropertyValue& {
    return g.edge_property(e, k);
  });
}

bool edge_used(const Row& row, const UsedEdges& used, EdgeId e) {
  for (int s : used.edge_slots)
    if (row[s].is_edge() && row[s].edge() == e) return true;
  for (int s : used.list_slots) {
    if (!row[s].is_list()) continue;
    for (const auto& v : row[s].list())
      if (v.is_edge() && v.edge() == e) return true;
  }
  return false;
}

// Neighbors of `n`, with the doubled entry of an undirected self-loop
// collapsed to one.
std::vector<Neighbor> incident(const PropertyGraph& g, NodeId n,
                               std::optional<EdgeLabel> label, Direction dir) {
  auto list = g.neighbors(n, label, dir);
  if (dir == Direction::Any)
    list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

NodeId other_end(const PropertyGraph& g, EdgeId e, NodeId from) {
  const auto& rec = g.edge(e);
  return rec.source == from ? rec.target : rec.source;
}

int row_tiebreak(const Row& a, const Row& b, const std::vector<int>& cols) {
  for (int s : cols) {
    if (a[s].is_node() && b[s].is_node()) {
      if (a[s].node() != b[s].node()) return a[s].node() < b[s].node() ? -1 : 1;
      break;
    }
  }
  for (int s : cols)
    if (int c = total_compare(a[s], b[s])) return c;
  return 0;
}

struct RowHash {
  std::size_t operator()(const Row& r) const noexcept {
    std::size_t h = 0;
    for (const auto& v : r) h = h * 1000003u ^ v.hash();
    return h;
  }
};

class Runtime {
 public:
  Runtime(const PlanData& plan, const ExecutionLimits& limits)
      : plan_(plan), graph_(*plan.graph), limits_(limits), state_(plan.operators.size()) {
    if (limits.timeout) deadline_ = Clock::now() + *limits.timeout;
  }

  ResultTable run() {
    Row row(static_cast<std::size_t>(plan_.slot_count));
    push(0, row);
    for (std::size_t i = 0; i < plan_.operators.size(); ++i) finish(i);
    ResultTable out;
    out.columns = plan_.columns;
    out.rows = std::move(output_);
    out.warnings = plan_.warnings;
    out.truncated = truncated_;
    return out;
  }

 private:
  struct State {
    std::vector<Row> buffer;
    std::unordered_map<Row, std::size_t, RowHash> groups;
    std::vector<std::vector<std::int64_t>> counts;
    std::int64_t seen = 0;
    bool done = false;
  };

  void tick() {
    if (!deadline_) return;
    if (++ticks_ % 256 == 0 && Clock::now() > *deadline_) throw_timeout();
  }

  [[noreturn]] void throw_timeout() const {
    throw Timeout("query exceeded its time budget of " +
                  std::to_string(limits_.timeout->count()) + " ms");
  }

  Value eval(const CompiledExpr& e, const Row& row) const {
    return evaluate(e, row, graph_);
  }

  bool push(std::size_t i, Row& row) {
    tick();
    return std::visit([&](const auto& op) { return apply(i, op, row); },
                      plan_.operators[i]);
  }

  bool apply(std::size_t i, const IndexSeekOp& op, Row& row) {
    for (NodeId n : graph_.index_seek(op.label, op.key, op.value)) {
      if (!node_ok(graph_, n, op.check)) continue;
      row[op.slot] = Value(n);
      if (!push(i + 1, row)) return false;
    }
    return true;
  }

  bool apply(std::size_t i, const ScanOp& op, Row& row) {
    if (op.label) {
      for (NodeId n : graph_.nodes_with_label(*op.label)) {
        if (!node_ok(graph_, n, op.check)) continue;
        row[op.slot] = Value(n);
        if (!push(i + 1, row)) return false;
      }
      return true;
    }
    for (std::uint64_t v = 0; v < graph_.node_count(); ++v) {
      NodeId n{v};
      if (!node_ok(graph_, n, op.check)) continue;
      row[op.slot] = Value(n);
      if (!push(i + 1, row)) return false;
    }
    return true;
  }

  bool apply(std::size_t i, const CheckNodeOp& op, Row& row) {
    const Value& v = row[op.slot];
    if (!v.is_node() || !node_ok(graph_, v.node(), op.check)) return true;
    return push(i + 1, row);
  }

  bool apply(std::size_t i, const ExpandOp& op, Row& row) {
    if (!row[op.from].is_node()) return true;
    if (op.into && !row[op.to].is_node()) return true;
    NodeId from = row[op.from].node();
    for (const auto& nb : incident(graph_, from, op.edge.label, op.direction)) {
      tick();
      if (op.into && nb.node != row[op.to].node()) continue;
      if (!edge_ok(graph_, nb.edge, op.edge)) continue;
      if (!op.into && !node_ok(graph_, nb.node, op.target)) continue;
      if (edge_used(row, op.used, nb.edge)) continue;
      row[op.edge_slot] = Value(nb.edge);
      if (!op.into) row[op.to] = Value(nb.node);
      if (!push(i + 1, row)) return false;
    }
    return true;
  }

  bool apply(std::size_t i, const VarLengthExpandOp& op, Row& row) {
    if (!row[op.from].is_node()) return true;
    if (op.into && !row[op.to].is_node()) return true;
    std::vector<EdgeId> trail;
    return walk(i, op, row, row[op.from].node(), trail);
  }

  bool emit_walk(std::size_t i, const VarLengthExpandOp& op, Row& row, NodeId end,
                 const std::vector<EdgeId>& trail) {
    if (op.into) {
      if (end != row[op.to].node()) return true;
    } else if (!node_ok(graph_, end, op.target)) {
      return true;
    }
    Value::List edges;
    edges.reserve(trail.size());
    for (EdgeId e : trail) edges.emplace_back(e);
    if (op.reversed) std::reverse(edges.begin(), edges.end());
    row[op.list_slot] = Value(std::move(edges));
    if (!op.into) row[op.to] = Value(end);
    return push(i + 1, row);
  }

  bool walk(std::size_t i, const VarLengthExpandOp& op, Row& row, NodeId at,
            std::vector<EdgeId>& trail) {
    auto depth = static_cast<std::int64_t>(trail.size());
    if (depth >= op.min_hops && !emit_walk(i, op, row, at, trail)) return false;
    if (depth >= op.max_hops) return true;
    for (const auto& nb : incident(graph_, at, op.edge.label, op.direction)) {
      tick();
      if (std::find(trail.begin(), trail.end(), nb.edge) != trail.end()) continue;
      if (!edge_ok(graph_, nb.edge, op.edge)) continue;
      if (edge_used(row, op.used, nb.edge)) continue;
      trail.push_back(nb.edge);
      bool more = walk(i, op, row, nb.node, trail);
      trail.pop_back();
      if (!more) return false;
    }
    return true;
  }

  bool apply(std::size_t i, const ShortestPathOp& op, Row& row) {
    if (!row[op.from].is_node() || !row[op.to].is_node()) return true;
    ShortestPathOptions opts;
    if (op.edge.label) opts.labels.push_back(*op.edge.label);
    opts.min_hops = op.min_hops;
    opts.max_hops = op.max_hops;
    opts.direction = op.direction;
    if (!op.edge.props.empty())
      opts.edge_filter = [&](EdgeId e) { return edge_ok(graph_, e, op.edge); };
    if (deadline_) opts.on_step = [this] { tick(); };
    auto path = shortest_path(graph_, row[op.from].node(), row[op.to].node(), opts);
    if (!path) return true;
    if (op.list_slot >= 0) {
      Value::List edges;
      for (EdgeId e : path->edges) edges.emplace_back(e);
      row[op.list_slot] = Value(std::move(edges));
    }
    row[op.path_slot] = Value(std::move(*path));
    return push(i + 1, row);
  }

  bool apply(std::size_t i, const BuildPathOp& op, Row& row) {
    Path path;
    NodeId at = row[op.node_slots[0]].node();
    path.nodes.push_back(at);
    for (std::size_t r = 0; r < op.rel_slots.size(); ++r) {
      const Value& rel = row[op.rel_slots[r]];
      if (op.rel_is_list[r]) {
        for (const auto& e : rel.list()) {
          at = other_end(graph_, e.edge(), at);
          path.edges.push_back(e.edge());
          path.nodes.push_back(at);
        }
      } else {
        at = other_end(graph_, rel.edge(), at);
        path.edges.push_back(rel.edge());
        path.nodes.push_back(at);
      }
    }
    row[op.path_slot] = Value(std::move(path));
    return push(i + 1, row);
  }

  bool apply(std::size_t i, const FilterOp& op, Row& row) {
    if (!passes(op.predicate, row, graph_)) return true;
    return push(i + 1, row);
  }

  bool apply(std::size_t i, const ProjectOp& op, Row& row) {
    std::vector<Value> values;
    values.reserve(op.items.size());
    for (const auto& [expr, slot] : op.items) values.push_back(eval(expr, row));
    for (std::size_t k = 0; k < op.items.size(); ++k)
      row[op.items[k].second] = std::move(values[k]);
    return push(i + 1, row);
  }

  bool apply(std::size_t i, const AggregateOp& op, Row& row) {
    State& st = state_[i];
    Row key;
    key.reserve(op.keys.size());
    for (const auto& [expr, slot] : op.keys) key.push_back(eval(expr, row));
    auto [it, fresh] = st.groups.try_emplace(key, st.buffer.size());
    if (fresh) {
      st.buffer.push_back(key);
      st.counts.emplace_back(op.counts.size(), 0);
    }
    auto& counts = st.counts[it->second];
    for (std::size_t k = 0; k < op.counts.size(); ++k)
      if (!eval(op.counts[k].first, row).is_null()) ++counts[k];
    return true;
  }

  bool apply(std::size_t i, const UnwindOp& op, Row& row) {
    Value list = eval(op.list, row);
    if (list.is_null()) return true;
    if (!list.is_list()) throw EvalError("UNWIND expects a list");
    for (const auto& v : list.list()) {
      row[op.slot] = v;
      if (!push(i + 1, row)) return false;
    }
    return true;
  }

  bool apply(std::size_t i, const SortOp&, Row& row) {
    state_[i].buffer.push_back(row);
    return true;
  }

  bool apply(std::size_t i, const LimitOp& op, Row& row) {
    State& st = state_[i];
    if (st.seen >= op.count) return false;
    ++st.seen;
    bool more = push(i + 1, row);
    return more && st.seen < op.count;
  }

  bool apply(std::size_t i, const ProduceOp& op, Row& row) {
    State& st = state_[i];
    if (st.done) return false;
    if (limits_.max_rows && output_.size() >= *limits_.max_rows) {
      if (!limits_.truncate_on_row_limit)
        throw RowLimitExceeded("result exceeds the row limit of " +
                               std::to_string(*limits_.max_rows));
      truncated_ = true;
      st.done = true;
      return false;
    }
    Row out;
    out.reserve(op.column_slots.size());
    for (int s : op.column_slots) out.push_back(row[s]);
    output_.push_back(std::move(out));
    return true;
  }

  void finish(std::size_t i) {
    if (const auto* agg = std::get_if<AggregateOp>(&plan_.operators[i])) {
      finish_aggregate(i, *agg);
    } else if (const auto* sort = std::get_if<SortOp>(&plan_.operators[i])) {
      finish_sort(i, *sort);
    }
  }

  void finish_aggregate(std::size_t i, const AggregateOp& op) {
    State& st = state_[i];
    if (op.keys.empty() && st.buffer.empty()) {
      st.buffer.emplace_back();
      st.counts.emplace_back(op.counts.size(), 0);
    }
    Row row(static_cast<std::size_t>(plan_.slot_count));
    for (std::size_t g = 0; g < st.buffer.size(); ++g) {
      for (std::size_t k = 0; k < op.keys.size(); ++k)
        row[op.keys[k].second] = st.buffer[g][k];
      for (std::size_t k = 0; k < op.counts.size(); ++k)
        row[op.counts[k].second] = Value(PropertyValue(st.counts[g][k]));
      if (!push(i + 1, row)) break;
    }
    st = State{};
  }

  void finish_sort(std::size_t i, const SortOp& op) {
    std::vector<Row> rows = std::move(state_[i].buffer);
    std::vector<std::vector<Value>> keys(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [expr, desc] : op.keys) keys[r].push_back(eval(expr, rows[r]));
    std::vector<std::size_t> order(rows.size());
    for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      for (std::size_t k = 0; k < op.keys.size(); ++k) {
        int c = total_compare(keys[a][k], keys[b][k]);
        if (op.keys[k].second) c = -c;
        if (c) return c < 0;
      }
      return row_tiebreak(rows[a], rows[b], op.column_slots) < 0;
    });
    for (std::size_t r : order)
      if (!push(i + 1, rows[r])) break;
  }

  const PlanData& plan_;
  const PropertyGraph& graph_;
  ExecutionLimits limits_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
  std::vector<State> state_;
  std::vector<Row> output_;
  bool truncated_ = false;
};

Value eval_compare(const CompiledExpr& e, const Value& a, const Value& b) {
  if (a.is_null() || b.is_null()) return Value();
  if (a.is_scalar() && b.is_scalar()) {
    if (e.cmp == CompareOp::Eq) return from_truth(filter_equals(a.scalar(), b.scalar()));
    auto c = filter_compare(a.scalar(), b.scalar());
    if (!c) return Value();
    switch (e.cmp) {
      case CompareOp::Lt:
        return Value(PropertyValue(*c < 0));
      case CompareOp::Gt:
        return Value(PropertyValue(*c > 0));
      case CompareOp::Le:
        return Value(PropertyValue(*c <= 0));
      case CompareOp::Ge:
        return Value(PropertyValue(*c >= 0));
      case CompareOp::Eq:
        break;
    }
  }
  if (e.cmp == CompareOp::Eq) return Value(PropertyValue(a == b));
  throw EvalError("cannot order-compare non-scalar values");
}

}  // namespace

Value evaluate(const CompiledExpr& e, const Row& row, const PropertyGraph& graph) {
  switch (e.op) {
    case CompiledExpr::Op::Const:
      return e.constant;
    case CompiledExpr::Op::Slot:
      return row[e.slot];
    case CompiledExpr::Op::Property: {
      Value target = evaluate(e.args[0], row, graph);
      if (target.is_null()) return Value();
      if (target.is_node())
        return e.key ? Value(graph.property(target.node(), *e.key)) : Value();
      if (target.is_edge())
        return e.key ? Value(graph.edge_property(target.edge(), *e.key)) : Value();
      throw EvalError("property access on a value that is not a node or relationship");
    }
    case CompiledExpr::Op::Compare:
      return eval_compare(e, evaluate(e.args[0], row, graph),
                          evaluate(e.args[1], row, graph));
    case CompiledExpr::Op::Regex: {
      Value subject = evaluate(e.args[0], row, graph);
      if (subject.is_null()) return Value();
      if (!subject.is_scalar() || !subject.scalar().is_text())
        throw EvalError("=~ applied to a non-string value");
      return Value(PropertyValue(e.regex->matches(subject.scalar().as_text())));
    }
    case CompiledExpr::Op::And: {
      bool unknown = false;
      for (const auto& arg : e.args) {
        Value v = evaluate(arg, row, graph);
        if (v.is_null()) {
          unknown = true;
          continue;
        }
        if (!v.is_scalar() || !v.scalar().is_boolean())
          throw EvalError("AND operand is not a boolean");
        if (!v.scalar().as_boolean()) return Value(PropertyValue(false));
      }
      return unknown ? Value() : Value(PropertyValue(true));
    }
    case CompiledExpr::Op::Count:
      throw EvalError("count() used outside an aggregation");
    case CompiledExpr::Op::Nodes: {
      Value v = evaluate(e.args[0], row, graph);
      if (v.is_null()) return Value();
      if (!v.is_path()) throw EvalError("nodes() expects a path");
      Value::List out;
      for (NodeId n : v.path().nodes) out.emplace_back(n);
      return Value(std::move(out));
    }
  }
  return Value();
}

bool passes(const CompiledExpr& expr, const Row& row, const PropertyGraph& graph) {
  Value v = evaluate(expr, row, graph);
  if (v.is_null()) return false;
  if (!v.is_scalar() || !v.scalar().is_boolean())
    throw EvalError("WHERE predicate is not a boolean");
  return v.scalar().as_boolean();
}

PhysicalPlan::PhysicalPlan(std::shared_ptr<const PlanData> data)
    : data_(std::move(data)) {}
PhysicalPlan::~PhysicalPlan() = default;
PhysicalPlan::PhysicalPlan(PhysicalPlan&&) noexcept = default;
PhysicalPlan& PhysicalPlan::operator=(PhysicalPlan&&) noexcept = default;

const std::vector<PlanStep>& PhysicalPlan::steps() const { return data_->steps; }
const std::vector<std::string>& PhysicalPlan::columns() const {
  return data_->columns;
}
const std::vector<std::string>& PhysicalPlan::warnings() const {
  return data_->warnings;
}

std::string PhysicalPlan::explain() const {
  std::string out;
  for (const auto& step : data_->steps) {
    out += to_string(step.kind);
    if (!step.detail.empty()) out += "(" + step.detail + ")";
    out += "\n";
  }
  return out;
}

ResultTable PhysicalPlan::run(const ExecutionLimits& limits) const {
  if (!data_->graph->sealed()) throw NotSealed("query requires a sealed graph");
  Runtime runtime(*data_, limits);
  return runtime.run();
}

ResultTable execute(std::string_view text, const PropertyGraph& graph,
                    const ExecutionLimits& limits, const PlanOptions& options) {
  return execute(parse(text), graph, limits, options);
}

ResultTable execute(const Query& query, const PropertyGraph& graph,
                    const ExecutionLimits& limits, const PlanOptions& options) {
  return plan(query, graph, options).run(limits);
}

}  // namespace litgraph::cypher
