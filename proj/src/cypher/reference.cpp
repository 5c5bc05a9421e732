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

#include "litgraph/cypher/reference.hpp"

#include <algorithm>
#include <map>

#include "litgraph/cypher/parser.hpp"
#include "litgraph/regex.hpp"

namespace litgraph::cypher {

namespace {

using Env = std::map<std::string, Value>;

class Reference {
 public:
  Reference(const PropertyGraph& graph, const ReferenceOptions& options)
      : g_(graph), options_(options) {}

  ResultTable run(const Query& q) {
    std::vector<Env> envs(1);
    ResultTable out;
    for (const auto& clause : q.clauses) {
      if (const auto* m = std::get_if<MatchClause>(&clause)) {
        envs = match(*m, envs);
      } else if (const auto* w = std::get_if<WithClause>(&clause)) {
        envs = project(w->items, envs);
      } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
        std::vector<Env> next;
        for (const auto& env : envs) {
          Value list = eval(u->list, env);
          if (list.is_null()) continue;
          if (!list.is_list()) throw EvalError("UNWIND expects a list");
          for (const auto& v : list.list()) {
            Env e = env;
            e[u->variable] = v;
            next.push_back(std::move(e));
          }
        }
        envs = std::move(next);
      } else if (const auto* r = std::get_if<ReturnClause>(&clause)) {
        for (const auto& item : r->items) out.columns.push_back(column_name(item));
        envs = project(r->items, envs);
      }
    }
    if (!q.order_by.empty()) envs = sort(q, out.columns, envs);
    if (q.limit && envs.size() > static_cast<std::size_t>(*q.limit))
      envs.resize(static_cast<std::size_t>(*q.limit));
    for (const auto& env : envs) {
      Row row;
      for (const auto& c : out.columns) row.push_back(env.at(c));
      out.rows.push_back(std::move(row));
    }
    return out;
  }

 private:
  void count_binding() {
    if (++bindings_ > options_.max_node_bindings)
      throw OracleTooLarge("reference executor exceeded " +
                           std::to_string(options_.max_node_bindings) +
                           " node bindings");
  }

  // ---- evaluation ----

  Value eval(const Expression& e, const Env& env) const {
    switch (e.kind) {
      case ExprKind::Literal:
        return Value(e.literal);
      case ExprKind::Variable:
        return env.at(e.name);
      case ExprKind::Property: {
        Value v = eval(e.args[0], env);
        if (v.is_null()) return Value();
        if (v.is_node()) return Value(g_.property(v.node(), e.name));
        if (v.is_edge()) return Value(g_.edge_property(v.edge(), e.name));
        throw EvalError("property of a non-entity");
      }
      case ExprKind::Compare: {
        Value a = eval(e.args[0], env), b = eval(e.args[1], env);
        if (a.is_null() || b.is_null()) return Value();
        if (a.is_scalar() && b.is_scalar()) {
          if (e.op == CompareOp::Eq) {
            Truth t = filter_equals(a.scalar(), b.scalar());
            return t ? Value(PropertyValue(*t)) : Value();
          }
          auto c = filter_compare(a.scalar(), b.scalar());
          if (!c) return Value();
          bool r = e.op == CompareOp::Lt   ? *c < 0
                   : e.op == CompareOp::Gt ? *c > 0
                   : e.op == CompareOp::Le ? *c <= 0
                                           : *c >= 0;
          return Value(PropertyValue(r));
        }
        if (e.op == CompareOp::Eq) return Value(PropertyValue(a == b));
        throw EvalError("ordering of non-scalars");
      }
      case ExprKind::Regex: {
        Value v = eval(e.args[0], env);
        if (v.is_null()) return Value();
        if (!v.is_scalar() || !v.scalar().is_text()) throw EvalError("regex on non-text");
        WholeStringRegex re(e.args[1].literal.as_text());
        return Value(PropertyValue(re.matches(v.scalar().as_text())));
      }
      case ExprKind::And: {
        bool saw_null = false;
        for (const auto& a : e.args) {
          Value v = eval(a, env);
          if (v.is_null()) {
            saw_null = true;
          } else if (!v.is_scalar() || !v.scalar().is_boolean()) {
            throw EvalError("AND of non-boolean");
          } else if (!v.scalar().as_boolean()) {
            return Value(PropertyValue(false));
          }
        }
        return saw_null ? Value() : Value(PropertyValue(true));
      }
      case ExprKind::Call: {
        if (e.name == "count") throw EvalError("count outside aggregation");
        Value v = eval(e.args[0], env);
        if (v.is_null()) return Value();
        if (!v.is_path()) throw EvalError("nodes() of non-path");
        Value::List out;
        for (NodeId n : v.path().nodes) out.push_back(Value(n));
        return Value(out);
      }
    }
    return Value();
  }

  bool holds(const Expression& e, const Env& env) const {
    Value v = eval(e, env);
    if (v.is_null()) return false;
    if (!v.is_scalar() || !v.scalar().is_boolean()) throw EvalError("non-boolean WHERE");
    return v.scalar().as_boolean();
  }

  // ---- matching ----

  bool node_fits(NodeId n, const NodePattern& p) const {
    if (p.label && g_.label(n) != *p.label) return false;
    for (const auto& [k, v] : p.properties)
      if (filter_equals(g_.property(n, k), v) != Truth(true)) return false;
    return true;
  }

  bool edge_fits(EdgeId e, const RelPattern& r) const {
    if (r.label && g_.edge(e).label != *r.label) return false;
    for (const auto& [k, v] : r.properties)
      if (filter_equals(g_.edge_property(e, k), v) != Truth(true)) return false;
    return true;
  }

  // Far ends reachable from `at` over edge `e` honoring direction; an
  // undirected self-loop yields a single step.
  std::vector<NodeId> steps(EdgeId e, NodeId at, RelDirection dir) const {
    const auto& rec = g_.edge(e);
    std::vector<NodeId> out;
    bool fwd = rec.source == at, back = rec.target == at;
    switch (dir) {
      case RelDirection::Out:
        if (fwd) out.push_back(rec.target);
        break;
      case RelDirection::In:
        if (back) out.push_back(rec.source);
        break;
      case RelDirection::Undirected:
        if (fwd) out.push_back(rec.target);
        else if (back) out.push_back(rec.source);
        break;
    }
    return out;
  }

  struct Partial {
    Env env;
    std::vector<EdgeId> used;
  };

  // Candidate bindings for a node position.
  std::vector<NodeId> node_candidates(const NodePattern& p, const Env& env) {
    std::vector<NodeId> out;
    if (p.variable) {
      auto it = env.find(*p.variable);
      if (it != env.end()) {
        count_binding();
        if (it->second.is_node() && node_fits(it->second.node(), p))
          out.push_back(it->second.node());
        return out;
      }
    }
    for (std::uint64_t i = 0; i < g_.node_count(); ++i) {
      count_binding();
      if (node_fits(NodeId{i}, p)) out.push_back(NodeId{i});
    }
    return out;
  }

  bool bind_node(const NodePattern& p, NodeId n, Env& env) const {
    if (!node_fits(n, p)) return false;
    if (!p.variable) return true;
    auto it = env.find(*p.variable);
    if (it != env.end()) return it->second.is_node() && it->second.node() == n;
    env[*p.variable] = Value(n);
    return true;
  }

  static bool contains(const std::vector<EdgeId>& v, EdgeId e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  }

  // Every edge-distinct walk of min..max hops starting at `from`.
  void walks(NodeId from, const RelPattern& r, std::int64_t lo, std::int64_t hi,
             const std::vector<EdgeId>& used, std::vector<EdgeId>& trail,
             std::vector<std::pair<std::vector<EdgeId>, NodeId>>& out) {
    auto depth = static_cast<std::int64_t>(trail.size());
    if (depth >= lo) out.emplace_back(trail, from);
    if (depth == hi) return;
    for (std::uint64_t i = 0; i < g_.edge_count(); ++i) {
      EdgeId e{i};
      if (!edge_fits(e, r) || contains(trail, e) || contains(used, e)) continue;
      for (NodeId next : steps(e, from, r.direction)) {
        count_binding();
        trail.push_back(e);
        walks(next, r, lo, hi, used, trail, out);
        trail.pop_back();
      }
    }
  }

  void extend_chain(const Pattern& p, std::size_t i, Partial cur, Path path,
                    std::vector<Partial>& out) {
    if (i == p.rels.size()) {
      if (p.path_variable) cur.env[*p.path_variable] = Value(path);
      out.push_back(std::move(cur));
      return;
    }
    const RelPattern& r = p.rels[i];
    const NodePattern& next = p.nodes[i + 1];
    NodeId at = path.nodes.back();
    if (!r.range) {
      for (std::uint64_t k = 0; k < g_.edge_count(); ++k) {
        EdgeId e{k};
        if (!edge_fits(e, r) || contains(cur.used, e)) continue;
        for (NodeId far : steps(e, at, r.direction)) {
          count_binding();
          Partial p2 = cur;
          if (!bind_node(next, far, p2.env)) continue;
          p2.used.push_back(e);
          if (r.variable) p2.env[*r.variable] = Value(e);
          Path path2 = path;
          path2.edges.push_back(e);
          path2.nodes.push_back(far);
          extend_chain(p, i + 1, std::move(p2), std::move(path2), out);
        }
      }
      return;
    }
    std::int64_t lo = r.range->lower();
    std::int64_t hi = r.range->upper().value_or(std::max<std::int64_t>(15, lo));
    std::vector<std::pair<std::vector<EdgeId>, NodeId>> found;
    std::vector<EdgeId> trail;
    walks(at, r, lo, hi, cur.used, trail, found);
    for (auto& [edges, end] : found) {
      Partial p2 = cur;
      if (!bind_node(next, end, p2.env)) continue;
      Value::List list;
      Path path2 = path;
      NodeId walk_at = at;
      for (EdgeId e : edges) {
        list.push_back(Value(e));
        p2.used.push_back(e);
        walk_at = g_.edge(e).source == walk_at ? g_.edge(e).target : g_.edge(e).source;
        path2.edges.push_back(e);
        path2.nodes.push_back(walk_at);
      }
      if (r.variable) p2.env[*r.variable] = Value(std::move(list));
      extend_chain(p, i + 1, std::move(p2), std::move(path2), out);
    }
  }

  // All edge-distinct paths of exactly `len` hops from a to b.
  void exact_paths(NodeId at, NodeId target, const RelPattern& r, std::int64_t len,
                   Path& cur, std::vector<Path>& out) {
    if (static_cast<std::int64_t>(cur.edges.size()) == len) {
      if (at == target) out.push_back(cur);
      return;
    }
    for (std::uint64_t i = 0; i < g_.edge_count(); ++i) {
      EdgeId e{i};
      if (!edge_fits(e, r) || contains(cur.edges, e)) continue;
      for (NodeId far : steps(e, at, r.direction)) {
        count_binding();
        cur.edges.push_back(e);
        cur.nodes.push_back(far);
        exact_paths(far, target, r, len, cur, out);
        cur.edges.pop_back();
        cur.nodes.pop_back();
      }
    }
  }

  static bool path_less(const Path& a, const Path& b) {
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      if (a.nodes[i + 1] != b.nodes[i + 1]) return a.nodes[i + 1] < b.nodes[i + 1];
      if (a.edges[i] != b.edges[i]) return a.edges[i] < b.edges[i];
    }
    return false;
  }

  std::optional<Path> shortest(NodeId a, NodeId b, const RelPattern& r) {
    std::int64_t lo = r.range ? r.range->lower() : 1;
    std::int64_t hi = r.range ? r.range->upper().value_or(std::max<std::int64_t>(15, lo)) : 1;
    if (a == b) {
      if (lo == 0) return Path{{a}, {}};
      return std::nullopt;
    }
    for (std::int64_t len = std::max<std::int64_t>(lo, 1); len <= hi; ++len) {
      std::vector<Path> found;
      Path cur{{a}, {}};
      exact_paths(a, b, r, len, cur, found);
      if (!found.empty()) return *std::min_element(found.begin(), found.end(), path_less);
    }
    return std::nullopt;
  }

  void match_pattern(const Pattern& p, const Partial& in, std::vector<Partial>& out) {
    if (p.form == PatternForm::ShortestPath) {
      for (NodeId a : node_candidates(p.nodes[0], in.env)) {
        Partial with_a = in;
        if (!bind_node(p.nodes[0], a, with_a.env)) continue;
        for (NodeId b : node_candidates(p.nodes[1], with_a.env)) {
          Partial both = with_a;
          if (!bind_node(p.nodes[1], b, both.env)) continue;
          auto path = shortest(a, b, p.rels[0]);
          if (!path) continue;
          if (p.rels[0].variable) {
            Value::List list;
            for (EdgeId e : path->edges) list.push_back(Value(e));
            both.env[*p.rels[0].variable] = Value(std::move(list));
          }
          if (p.path_variable) both.env[*p.path_variable] = Value(*path);
          out.push_back(std::move(both));
        }
      }
      return;
    }
    for (NodeId start : node_candidates(p.nodes[0], in.env)) {
      Partial cur = in;
      if (!bind_node(p.nodes[0], start, cur.env)) continue;
      extend_chain(p, 0, std::move(cur), Path{{start}, {}}, out);
    }
  }

  std::vector<Env> match(const MatchClause& m, const std::vector<Env>& envs) {
    std::vector<Env> result;
    for (const auto& env : envs) {
      std::vector<Partial> partials{Partial{env, {}}};
      for (const auto& p : m.patterns) {
        std::vector<Partial> next;
        for (const auto& part : partials) match_pattern(p, part, next);
        partials = std::move(next);
      }
      for (auto& part : partials)
        if (!m.where || holds(*m.where, part.env)) result.push_back(std::move(part.env));
    }
    return result;
  }

  // ---- projection ----

  std::vector<Env> project(const std::vector<ProjectionItem>& items,
                           const std::vector<Env>& envs) const {
    bool aggregate = false;
    for (const auto& it : items) aggregate = aggregate || it.expr.is_aggregate();
    std::vector<Env> out;
    if (!aggregate) {
      for (const auto& env : envs) {
        Env e;
        for (const auto& it : items) e[column_name(it)] = eval(it.expr, env);
        out.push_back(std::move(e));
      }
      return out;
    }
    struct Group {
      std::vector<Value> key;
      std::vector<std::int64_t> counts;
    };
    std::vector<Group> groups;
    bool has_keys = false;
    for (const auto& it : items) has_keys = has_keys || !it.expr.is_aggregate();
    for (const auto& env : envs) {
      std::vector<Value> key;
      for (const auto& it : items)
        if (!it.expr.is_aggregate()) key.push_back(eval(it.expr, env));
      auto g = std::find_if(groups.begin(), groups.end(),
                            [&](const Group& x) { return x.key == key; });
      if (g == groups.end()) {
        groups.push_back({key, std::vector<std::int64_t>(items.size(), 0)});
        g = groups.end() - 1;
      }
      for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].expr.is_aggregate() && !eval(items[i].expr.args[0], env).is_null())
          ++g->counts[i];
    }
    if (groups.empty() && !has_keys)
      groups.push_back({{}, std::vector<std::int64_t>(items.size(), 0)});
    for (const auto& g : groups) {
      Env e;
      std::size_t k = 0;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].expr.is_aggregate())
          e[column_name(items[i])] = Value(PropertyValue(g.counts[i]));
        else
          e[column_name(items[i])] = g.key[k++];
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  std::vector<Env> sort(const Query& q, const std::vector<std::string>& columns,
                        std::vector<Env> envs) const {
    std::vector<std::vector<Value>> keys;
    for (const auto& env : envs) {
      std::vector<Value> k;
      for (const auto& s : q.order_by) {
        auto named = env.find(print(s.expr));
        k.push_back(named != env.end() ? named->second : eval(s.expr, env));
      }
      keys.push_back(std::move(k));
    }
    std::vector<std::size_t> idx(envs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto tie = [&](const Env& a, const Env& b) {
      for (const auto& c : columns) {
        const Value &x = a.at(c), &y = b.at(c);
        if (x.is_node() && y.is_node()) {
          if (x.node() != y.node()) return x.node() < y.node() ? -1 : 1;
          break;
        }
      }
      for (const auto& c : columns)
        if (int d = total_compare(a.at(c), b.at(c))) return d;
      return 0;
    };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      for (std::size_t k = 0; k < q.order_by.size(); ++k) {
        int c = total_compare(keys[a][k], keys[b][k]);
        if (q.order_by[k].descending) c = -c;
        if (c != 0) return c < 0;
      }
      return tie(envs[a], envs[b]) < 0;
    });
    std::vector<Env> out;
    for (std::size_t i : idx) out.push_back(envs[i]);
    return out;
  }

  const PropertyGraph& g_;
  ReferenceOptions options_;
  std::size_t bindings_ = 0;
};

}  // namespace

ResultTable execute_reference(const Query& query, const PropertyGraph& graph,
                              const ReferenceOptions& options) {
  validate(query);
  Reference ref(graph, options);
  return ref.run(query);
}

ResultTable execute_reference(std::string_view text, const PropertyGraph& graph,
                              const ReferenceOptions& options) {
  return execute_reference(parse(text), graph, options);
}

}  // namespace litgraph::cypher
