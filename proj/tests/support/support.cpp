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

#include "support.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace litgraph::testing {

std::string source_dir() { return LITGRAPH_SOURCE_DIR; }
std::string fixture_dir() { return source_dir() + "/fixtures/fixture_a"; }

const ingest::ImportResult& fixture_a() {
  static const ingest::ImportResult result =
      ingest::import_bulk(ingest::load_manifest(fixture_dir() + "/manifest.json"), 1);
  return result;
}

NodeId find_node(const PropertyGraph& g, NodeLabel label, const std::string& prop,
                 const std::string& value) {
  for (NodeId n : g.nodes_with_label(label)) {
    const auto& v = g.property(n, prop);
    if (v.is_text() && v.as_text() == value) return n;
  }
  throw std::runtime_error("fixture node not found: " + value);
}

std::optional<std::int64_t> bfs_distance(const PropertyGraph& g, NodeId src, NodeId dst,
                                         const std::vector<EdgeLabel>& labels,
                                         Direction dir) {
  // Plain adjacency rebuilt from the edge table, independent of the CSR.
  std::vector<std::vector<std::uint64_t>> adj(g.node_count());
  for (std::uint64_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(EdgeId{i});
    if (!labels.empty() && std::find(labels.begin(), labels.end(), e.label) == labels.end())
      continue;
    if (dir != Direction::In) adj[e.source.value].push_back(e.target.value);
    if (dir != Direction::Out) adj[e.target.value].push_back(e.source.value);
  }
  std::vector<std::int64_t> dist(g.node_count(), -1);
  std::deque<std::uint64_t> queue{src.value};
  dist[src.value] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    if (u == dst.value) return dist[u];
    for (auto v : adj[u]) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

namespace {

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

const std::vector<std::string> kFirst = {"Ada", "Luke", "Regina"};
const std::vector<std::string> kLast = {"Ellis", "Barzilay", "Smith"};
const std::vector<std::string> kNames = {"Cancer", "Smoking", "NLP parsing", "graph theory"};
const std::vector<std::string> kVenues = {"NAACL 2018", "CVPR 2017", "ACL", "naacl-hlt"};

PropertyMap random_props(std::mt19937_64& rng, NodeLabel label) {
  PropertyMap m;
  auto maybe = [&](const std::string& k, PropertyValue v) {
    if (chance(rng, 0.85)) m.emplace(k, std::move(v));
  };
  switch (label) {
    case NodeLabel::Paper:
      maybe("year", PropertyValue(std::int64_t{2010 + uniform(rng, 0, 4)}));
      maybe("title", PropertyValue("T" + std::to_string(uniform(rng, 0, 3))));
      break;
    case NodeLabel::Author:
      maybe("first", PropertyValue(pick(rng, kFirst)));
      maybe("last", PropertyValue(pick(rng, kLast)));
      maybe("author_id", PropertyValue(std::int64_t{uniform(rng, 1, 6)}));
      break;
    case NodeLabel::Entity:
      maybe("name", PropertyValue(pick(rng, kNames)));
      break;
    case NodeLabel::Venue:
    case NodeLabel::Affiliation:
      maybe("text", PropertyValue(pick(rng, kVenues)));
      break;
    case NodeLabel::Relation:
      maybe("name", PropertyValue(std::string(chance(rng, 0.5) ? "Causes" : "Treats")));
      break;
    case NodeLabel::RelationInstance:
      break;
  }
  return m;
}

}  // namespace

PropertyGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  PropertyGraph g;
  std::size_t n = static_cast<std::size_t>(
      uniform(rng, static_cast<int>(options.max_nodes / 4), static_cast<int>(options.max_nodes)));
  // Skewed toward the labels the query generator uses most.
  const std::vector<NodeLabel> labels = {
      NodeLabel::Paper,  NodeLabel::Paper,       NodeLabel::Paper,
      NodeLabel::Author, NodeLabel::Author,      NodeLabel::Entity,
      NodeLabel::Entity, NodeLabel::Venue,       NodeLabel::Affiliation,
      NodeLabel::Relation, NodeLabel::RelationInstance};
  std::map<NodeLabel, std::vector<NodeId>> by_label;
  for (std::size_t i = 0; i < n; ++i) {
    NodeLabel l = pick(rng, labels);
    by_label[l].push_back(g.add_node(l, random_props(rng, l)));
  }
  std::size_t m = static_cast<std::size_t>(
      uniform(rng, static_cast<int>(options.max_edges / 4), static_cast<int>(options.max_edges)));
  std::vector<EdgeLabel> edge_labels(kAllEdgeLabels.begin(), kAllEdgeLabels.end());
  for (std::size_t i = 0; i < m; ++i) {
    EdgeLabel l = pick(rng, edge_labels);
    auto sig = signature(l);
    if (by_label[sig.source].empty() || by_label[sig.target].empty()) continue;
    NodeId s = pick(rng, by_label[sig.source]);
    NodeId t = pick(rng, by_label[sig.target]);
    if (s == t && !options.self_loops) continue;
    PropertyMap props;
    if (l == EdgeLabel::WITH_ENTITY) props.emplace("position", PropertyValue(std::int64_t{uniform(rng, 0, 1)}));
    g.add_edge(s, l, t, props);
  }
  const std::vector<std::pair<NodeLabel, std::string>> indexable = {
      {NodeLabel::Paper, "year"},   {NodeLabel::Paper, "title"},
      {NodeLabel::Author, "first"}, {NodeLabel::Author, "last"},
      {NodeLabel::Author, "author_id"}, {NodeLabel::Entity, "name"},
      {NodeLabel::Venue, "text"}};
  for (const auto& [l, p] : indexable)
    if (chance(rng, 0.5)) g.create_index(l, p);
  g.seal();
  return g;
}

namespace {

// (property, literal) pairs per label that random graphs can satisfy.
const std::map<std::string, std::vector<std::pair<std::string, std::string>>> kEqualities = {
    {"Paper", {{"year", "2011"}, {"year", "2013"}, {"title", "\"T1\""}}},
    {"Author", {{"last", "\"Ellis\""}, {"first", "\"Luke\""}, {"author_id", "3"}}},
    {"Entity", {{"name", "\"Cancer\""}, {"name", "\"NLP parsing\""}}},
    {"Venue", {{"text", "\"ACL\""}}},
};

struct Rel {
  std::string label;
  std::string from;
  std::string to;
};

const std::vector<Rel> kRels = {
    {"AUTHORS", "Author", "Paper"},       {"CITES", "Paper", "Paper"},
    {"MENTIONS", "Paper", "Entity"},      {"APPEARS_IN", "Paper", "Venue"},
    {"AFFILIATED_WITH", "Author", "Affiliation"},
    {"MENTIONS_RELATION", "Paper", "RelationInstance"},
    {"WITH_ENTITY", "RelationInstance", "Entity"},
    {"WITH_RELATIONSHIP", "RelationInstance", "Relation"},
};

class QueryGen {
 public:
  explicit QueryGen(std::mt19937_64& rng) : rng_(rng) {}

  std::string generate() {
    std::string q = match_clause();
    if (chance(rng_, 0.3)) q += with_clause();
    q += return_clause();
    return q;
  }

 private:
  std::string fresh(const char* prefix) { return prefix + std::to_string(counter_++); }

  std::string node(const std::string& label, bool allow_reuse) {
    std::string text = "(";
    if (allow_reuse && !nodes_.empty() && chance(rng_, 0.15)) {
      auto& [var, lab] = nodes_[uniform(rng_, 0, static_cast<int>(nodes_.size()) - 1)];
      text += var;
      if (chance(rng_, 0.3) && !lab.empty()) text += ":" + lab;
      return text + ")";
    }
    if (chance(rng_, 0.8)) {
      std::string v = fresh("n");
      nodes_.emplace_back(v, label);
      text += v;
    }
    if (!label.empty() && chance(rng_, 0.75)) text += ":" + label;
    auto eq = kEqualities.find(label);
    if (eq != kEqualities.end() && chance(rng_, 0.2)) {
      const auto& [k, v] = pick(rng_, eq->second);
      text += " {" + k + ": " + v + "}";
    }
    return text + ")";
  }

  std::string rel(const Rel& r, bool forward, bool var_length) {
    std::string body = "[";
    if (chance(rng_, 0.4)) {
      std::string v = fresh("r");
      body += v;
      if (var_length)
        lists_.push_back(v);
      else
        edges_.push_back(v);
    }
    if (chance(rng_, 0.85)) body += ":" + r.label;
    if (var_length) {
      int lo = uniform(rng_, 0, 2);
      int hi = lo + uniform(rng_, 0, 2);
      body += "*" + std::to_string(lo) + ".." + std::to_string(hi);
    }
    if (r.label == "WITH_ENTITY" && chance(rng_, 0.3))
      body += " {position: " + std::to_string(uniform(rng_, 0, 1)) + "}";
    body += "]";
    int shape = uniform(rng_, 0, 4);
    if (shape == 0) return "-" + body + "-";
    if (forward) return "-" + body + "->";
    return "<-" + body + "-";
  }

  std::string chain() {
    std::string text;
    if (chance(rng_, 0.25)) {
      path_ = fresh("p");
      text += path_ + " = ";
    }
    // Common relationships drawn more often than the relation-instance ones.
    static const std::vector<std::size_t> weighted = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 4, 5, 6, 7};
    const Rel* cur = &kRels[pick(rng_, weighted)];
    bool forward = chance(rng_, 0.5);
    std::string left = forward ? cur->from : cur->to;
    text += node(chance(rng_, 0.8) ? left : "", true);
    int hops = uniform(rng_, 1, 2);
    for (int h = 0; h < hops; ++h) {
      std::string right = forward ? cur->to : cur->from;
      bool var_length = chance(rng_, 0.2) && (cur->from == cur->to || chance(rng_, 0.3));
      text += rel(*cur, forward, var_length);
      text += node(chance(rng_, 0.8) ? right : "", true);
      // Continue from the right end with a relationship touching its label.
      std::vector<std::pair<const Rel*, bool>> options;
      for (const auto& r : kRels) {
        if (r.from == right) options.emplace_back(&r, true);
        if (r.to == right) options.emplace_back(&r, false);
      }
      if (options.empty()) break;
      auto [next, fwd] = pick(rng_, options);
      cur = next;
      forward = fwd;
    }
    return text;
  }

  std::string shortest() {
    const std::vector<std::string> people = {"Author", "Entity", "Paper"};
    std::string label = pick(rng_, people);
    std::string rel_label = label == "Author" ? "AUTHORS" : label == "Entity" ? "MENTIONS" : "CITES";
    if (chance(rng_, 0.3)) rel_label = "";
    std::string a = fresh("n"), b = fresh("n");
    nodes_.emplace_back(a, label);
    nodes_.emplace_back(b, label);
    path_ = fresh("p");
    int lo = uniform(rng_, 0, 1);
    std::string text = path_ + " = shortestPath((" + a + ":" + label + ")-[";
    if (chance(rng_, 0.3)) {
      std::string v = fresh("r");
      lists_.push_back(v);
      text += v;
    }
    if (!rel_label.empty()) text += ":" + rel_label;
    text += "*" + std::to_string(lo) + ".." + std::to_string(uniform(rng_, 2, 5)) + "]-";
    text += "(" + b + ":" + label + "))";
    return text;
  }

  std::string predicate() {
    if (nodes_.empty()) return "";
    auto& [var, label] = pick(rng_, nodes_);
    int kind = uniform(rng_, 0, 5);
    auto eq = kEqualities.find(label);
    if (kind <= 1 && eq != kEqualities.end()) {
      const auto& [k, v] = pick(rng_, eq->second);
      return var + "." + k + " = " + v;
    }
    if (kind == 2 && (label == "Paper" || label == "Author")) {
      const std::vector<std::string> ops = {"<", ">", "<=", ">="};
      if (label == "Author")
        return var + ".author_id " + pick(rng_, ops) + " " + std::to_string(uniform(rng_, 1, 6));
      return var + ".year " + pick(rng_, ops) + " " + std::to_string(uniform(rng_, 2010, 2014));
    }
    if (kind == 3) {
      static const std::map<std::string, std::vector<std::pair<std::string, std::string>>>
          regexes = {
              {"Entity", {{"name", "(?i)cancer"}, {"name", ".*i.*"}}},
              {"Venue", {{"text", ".*NAACL.*"}, {"text", "(?i).*naacl.*"}}},
              {"Author", {{"last", "E.*"}, {"first", "(?i)luke|ada"}}},
              {"Paper", {{"title", "T[12]"}}},
              {"Relation", {{"name", "Cause."}}},
          };
      auto it = regexes.find(label);
      if (it != regexes.end()) {
        const auto& [k, re] = pick(rng_, it->second);
        return var + "." + k + " =~ \"" + re + "\"";
      }
    }
    if (kind == 4 && nodes_.size() >= 2) {
      auto& [other, other_label] = pick(rng_, nodes_);
      if (label == "Paper" && other_label == "Paper")
        return var + ".year " + (chance(rng_, 0.5) ? "<" : ">=") + " " + other + ".year";
      return var + " = " + other;
    }
    return "";
  }

  std::string match_clause() {
    std::string text = "MATCH ";
    if (chance(rng_, 0.15)) {
      text += shortest();
    } else {
      text += chain();
    }
    if (chance(rng_, 0.3)) text += ", " + chain();
    int preds = uniform(rng_, 0, 2);
    std::vector<std::string> parts;
    for (int i = 0; i < preds; ++i) {
      std::string p = predicate();
      if (!p.empty()) parts.push_back(p);
    }
    if (!parts.empty()) {
      text += " WHERE " + parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) text += " AND " + parts[i];
    }
    return text;
  }

  std::string with_clause() {
    if (nodes_.empty()) return "";
    auto [var, label] = pick(rng_, nodes_);
    std::string text;
    if (!path_.empty() && chance(rng_, 0.4)) {
      text = " WITH nodes(" + path_ + ") AS ns UNWIND ns AS u";
      nodes_ = {{"u", ""}};
    } else if (chance(rng_, 0.5)) {
      std::string counted = edges_.empty() ? var : edges_.front();
      text = " WITH " + var + ", count(" + counted + ") AS c";
      nodes_ = {{var, label}};
      scalars_ = {"c"};
    } else {
      text = " WITH " + var;
      nodes_ = {{var, label}};
    }
    edges_.clear();
    lists_.clear();
    path_.clear();
    if (chance(rng_, 0.5)) {
      text += " " + match_clause();
    }
    return text;
  }

  std::string return_clause() {
    std::vector<std::string> items;
    std::vector<std::string> names;
    bool aggregate = chance(rng_, 0.25);
    for (const auto& [v, l] : nodes_)
      if (chance(rng_, 0.6)) items.push_back(v);
    for (const auto& s : scalars_) items.push_back(s);
    if (!path_.empty() && chance(rng_, 0.5)) items.push_back(path_);
    for (const auto& e : edges_)
      if (chance(rng_, 0.3)) items.push_back(e);
    for (const auto& e : lists_)
      if (chance(rng_, 0.3)) items.push_back(e);
    if (!nodes_.empty() && chance(rng_, 0.4)) {
      const auto& [v, l] = pick(rng_, nodes_);
      std::string prop = l == "Paper" ? "year" : l == "Author" ? "last" : "name";
      items.push_back(v + "." + prop + " AS " + v + "_" + prop);
    }
    std::set<std::string> seen;
    std::vector<std::string> unique;
    for (const auto& i : items)
      if (seen.insert(i).second) unique.push_back(i);
    items = unique;
    if (aggregate && !nodes_.empty()) {
      items.push_back("count(" + pick(rng_, nodes_).first + ") AS total");
    }
    if (items.empty()) items.push_back(nodes_.empty() ? "count(" + (path_.empty() ? std::string("1") : path_) + ") AS total"
                                                      : nodes_.front().first);
    std::string text = " RETURN ";
    for (std::size_t i = 0; i < items.size(); ++i) {
      text += (i ? ", " : "") + items[i];
      auto as = items[i].find(" AS ");
      names.push_back(as == std::string::npos ? items[i] : items[i].substr(as + 4));
    }
    if (chance(rng_, 0.3)) {
      text += " ORDER BY " + pick(rng_, names);
      if (chance(rng_, 0.5)) text += " DESC";
    }
    if (chance(rng_, 0.2)) text += " LIMIT " + std::to_string(uniform(rng_, 0, 5));
    return text;
  }

  std::mt19937_64& rng_;
  int counter_ = 0;
  std::vector<std::pair<std::string, std::string>> nodes_;
  std::vector<std::string> edges_;
  std::vector<std::string> lists_;
  std::vector<std::string> scalars_;
  std::string path_;
};

}  // namespace

std::string random_query(std::mt19937_64& rng) { return QueryGen(rng).generate(); }

bool sub_bag(const cypher::ResultTable& limited, const cypher::ResultTable& full,
             std::size_t k) {
  if (limited.columns != full.columns) return false;
  if (limited.rows.size() != std::min(k, full.rows.size())) return false;
  std::vector<bool> taken(full.rows.size(), false);
  for (const auto& row : limited.rows) {
    bool found = false;
    for (std::size_t i = 0; i < full.rows.size() && !found; ++i) {
      if (!taken[i] && full.rows[i] == row) {
        taken[i] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace litgraph::testing
