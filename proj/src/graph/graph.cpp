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

#include "litgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace litgraph {

namespace {

const PropertyValue kNull;

bool adjacent_less(const Adjacent& a, const Adjacent& b) {
  if (a.label != b.label) return a.label < b.label;
  if (a.node != b.node) return a.node < b.node;
  return a.edge < b.edge;
}

std::string node_str(NodeId n) { return "node " + std::to_string(n.value); }

}  // namespace

std::size_t GraphCounts::total_nodes() const {
  std::size_t total = 0;
  for (auto c : nodes) total += c;
  return total;
}

std::size_t GraphCounts::total_edges() const {
  std::size_t total = 0;
  for (auto c : edges) total += c;
  return total;
}

void PropertyGraph::require_building(const char* op) const {
  if (sealed_)
    throw SealedGraph(std::string(op) + ": graph is sealed");
}

void PropertyGraph::require_sealed(const char* op) const {
  if (!sealed_)
    throw NotSealed(std::string(op) + ": graph is not sealed");
}

void PropertyGraph::check_node(NodeId n) const {
  if (!contains(n)) throw UnknownNode("unknown " + node_str(n));
}

PropertyKey PropertyGraph::intern(std::string_view name) {
  auto it = key_ids_.find(std::string(name));
  if (it != key_ids_.end()) return it->second;
  auto id = static_cast<PropertyKey>(key_names_.size());
  key_names_.emplace_back(name);
  key_ids_.emplace(std::string(name), id);
  return id;
}

std::optional<PropertyKey> PropertyGraph::key(std::string_view name) const {
  auto it = key_ids_.find(std::string(name));
  if (it == key_ids_.end()) return std::nullopt;
  return it->second;
}

PropertyGraph::PropList PropertyGraph::to_prop_list(const PropertyMap& props) {
  PropList list;
  list.reserve(props.size());
  for (const auto& [name, value] : props) {
    // Null-valued entries are the same as absent ones.
    if (value.is_null()) continue;
    list.push_back({intern(name), value});
  }
  std::sort(list.begin(), list.end(),
            [](const PropEntry& a, const PropEntry& b) { return a.key < b.key; });
  return list;
}

const PropertyValue& PropertyGraph::find_prop(const PropList& list,
                                              PropertyKey key) {
  auto it = std::lower_bound(
      list.begin(), list.end(), key,
      [](const PropEntry& e, PropertyKey k) { return e.key < k; });
  if (it == list.end() || it->key != key) return kNull;
  return it->value;
}

NodeId PropertyGraph::add_node(NodeLabel label, const PropertyMap& props) {
  require_building("add_node");
  NodeId id{node_labels_.size()};
  node_labels_.push_back(label);
  node_props_.push_back(to_prop_list(props));
  label_members_[index_of(label)].push_back(id);
  ++counts_.nodes[index_of(label)];
  for (const auto& entry : node_props_.back()) {
    auto it = indexes_.find(IndexKey{label, entry.key});
    if (it != indexes_.end()) it->second[entry.value].push_back(id);
  }
  return id;
}

EdgeId PropertyGraph::add_edge(NodeId source, EdgeLabel label, NodeId target,
                               const PropertyMap& props) {
  require_building("add_edge");
  check_node(source);
  check_node(target);
  const auto sig = signature(label);
  if (node_labels_[source.value] != sig.source ||
      node_labels_[target.value] != sig.target) {
    throw SignatureViolation(
        std::string(to_string(label)) + " requires " +
        std::string(to_string(sig.source)) + "->" +
        std::string(to_string(sig.target)) + ", got " +
        std::string(to_string(node_labels_[source.value])) + "->" +
        std::string(to_string(node_labels_[target.value])));
  }
  EdgeId id{edges_.size()};
  edges_.push_back({label, source, target});
  edge_props_.push_back(to_prop_list(props));
  ++counts_.edges[index_of(label)];
  return id;
}

void PropertyGraph::seal() {
  if (sealed_) return;
  const std::size_t n = node_labels_.size();
  auto build = [&](bool outgoing, std::vector<std::size_t>& offsets,
                   std::vector<Adjacent>& entries) {
    offsets.assign(n + 1, 0);
    for (const auto& e : edges_)
      ++offsets[(outgoing ? e.source : e.target).value + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    entries.resize(edges_.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      NodeId from = outgoing ? e.source : e.target;
      NodeId to = outgoing ? e.target : e.source;
      entries[cursor[from.value]++] = Adjacent{e.label, to, EdgeId{i}};
    }
    for (std::size_t i = 0; i < n; ++i)
      std::sort(entries.begin() + offsets[i], entries.begin() + offsets[i + 1],
                adjacent_less);
  };
  build(true, out_offsets_, out_);
  build(false, in_offsets_, in_);
  sealed_ = true;
}

NodeLabel PropertyGraph::label(NodeId n) const {
  check_node(n);
  return node_labels_[n.value];
}

const EdgeRecord& PropertyGraph::edge(EdgeId e) const {
  if (!contains(e))
    throw UnknownNode("unknown edge " + std::to_string(e.value));
  return edges_[e.value];
}

const PropertyValue& PropertyGraph::property(NodeId n, PropertyKey key) const {
  return find_prop(node_props_[n.value], key);
}

const PropertyValue& PropertyGraph::property(NodeId n,
                                             std::string_view name) const {
  check_node(n);
  auto k = key(name);
  if (!k) return kNull;
  return property(n, *k);
}

const PropertyValue& PropertyGraph::edge_property(EdgeId e,
                                                  PropertyKey key) const {
  return find_prop(edge_props_[e.value], key);
}

const PropertyValue& PropertyGraph::edge_property(EdgeId e,
                                                  std::string_view name) const {
  edge(e);
  auto k = key(name);
  if (!k) return kNull;
  return edge_property(e, *k);
}

PropertyMap PropertyGraph::properties(NodeId n) const {
  check_node(n);
  PropertyMap out;
  for (const auto& entry : node_props_[n.value])
    out.emplace(key_names_[entry.key], entry.value);
  return out;
}

PropertyMap PropertyGraph::edge_properties(EdgeId e) const {
  edge(e);
  PropertyMap out;
  for (const auto& entry : edge_props_[e.value])
    out.emplace(key_names_[entry.key], entry.value);
  return out;
}

std::span<const Adjacent> PropertyGraph::adjacency(NodeId n,
                                                   Direction dir) const {
  require_sealed("adjacency");
  check_node(n);
  const auto& offsets = dir == Direction::In ? in_offsets_ : out_offsets_;
  const auto& entries = dir == Direction::In ? in_ : out_;
  return std::span<const Adjacent>(entries.data() + offsets[n.value],
                                   offsets[n.value + 1] - offsets[n.value]);
}

std::span<const Adjacent> PropertyGraph::adjacency(NodeId n, EdgeLabel label,
                                                   Direction dir) const {
  auto all = adjacency(n, dir);
  auto lo = std::partition_point(all.begin(), all.end(), [&](const Adjacent& a) {
    return a.label < label;
  });
  auto hi = std::partition_point(lo, all.end(), [&](const Adjacent& a) {
    return a.label == label;
  });
  return std::span<const Adjacent>(&*all.begin() + (lo - all.begin()),
                                   static_cast<std::size_t>(hi - lo));
}

std::vector<Neighbor> PropertyGraph::neighbors(NodeId n,
                                               std::optional<EdgeLabel> label,
                                               Direction dir) const {
  std::vector<Neighbor> out;
  auto collect = [&](Direction d) {
    auto span = label ? adjacency(n, *label, d) : adjacency(n, d);
    for (const auto& a : span) out.push_back({a.edge, a.node});
  };
  if (dir != Direction::In) collect(Direction::Out);
  if (dir != Direction::Out) collect(Direction::In);
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.node != b.node) return a.node < b.node;
    return a.edge < b.edge;
  });
  return out;
}

void PropertyGraph::create_index(NodeLabel label, std::string_view property) {
  require_building("create_index");
  PropertyKey k = intern(property);
  IndexKey ik{label, k};
  if (indexes_.count(ik)) return;
  ValueIndex index;
  for (NodeId n : label_members_[index_of(label)]) {
    const auto& v = find_prop(node_props_[n.value], k);
    if (!v.is_null()) index[v].push_back(n);
  }
  indexes_.emplace(ik, std::move(index));
}

bool PropertyGraph::has_index(NodeLabel label, PropertyKey key) const {
  return indexes_.count(IndexKey{label, key}) != 0;
}

bool PropertyGraph::has_index(NodeLabel label,
                              std::string_view property) const {
  auto k = key(property);
  return k && has_index(label, *k);
}

std::vector<std::pair<NodeLabel, std::string>> PropertyGraph::indexes() const {
  std::vector<std::pair<NodeLabel, std::string>> out;
  for (const auto& [ik, _] : indexes_)
    out.emplace_back(ik.label, key_names_[ik.key]);
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const NodeId> PropertyGraph::index_seek(
    NodeLabel label, PropertyKey key, const PropertyValue& value) const {
  auto it = indexes_.find(IndexKey{label, key});
  if (it == indexes_.end() || value.is_null()) return {};
  auto hit = it->second.find(value);
  if (hit == it->second.end()) return {};
  return hit->second;
}

std::vector<NodeId> PropertyGraph::index_lookup(
    NodeLabel label, std::string_view property,
    const PropertyValue& value) const {
  auto k = key(property);
  if (!k || value.is_null()) return {};
  if (has_index(label, *k)) {
    auto hits = index_seek(label, *k, value);
    return {hits.begin(), hits.end()};
  }
  std::vector<NodeId> out;
  for (NodeId n : label_members_[index_of(label)])
    if (filter_equals(this->property(n, *k), value) == true) out.push_back(n);
  return out;
}

void PropertyGraph::audit() const {
  GraphCounts recount;
  for (std::size_t i = 0; i < node_labels_.size(); ++i)
    ++recount.nodes[index_of(node_labels_[i])];
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!contains(e.source) || !contains(e.target))
      throw Error("audit: edge " + std::to_string(i) + " has a dangling endpoint");
    auto sig = signature(e.label);
    if (node_labels_[e.source.value] != sig.source ||
        node_labels_[e.target.value] != sig.target)
      throw Error("audit: edge " + std::to_string(i) + " violates its signature");
    ++recount.edges[index_of(e.label)];
  }
  if (recount != counts_) throw Error("audit: label counts disagree");

  for (std::size_t l = 0; l < kNodeLabelCount; ++l) {
    const auto& members = label_members_[l];
    if (members.size() != counts_.nodes[l])
      throw Error("audit: label membership disagrees with counts");
    for (NodeId n : members)
      if (index_of(node_labels_[n.value]) != l)
        throw Error("audit: " + node_str(n) + " listed under wrong label");
  }

  if (sealed_) {
    if (out_.size() != edges_.size() || in_.size() != edges_.size())
      throw Error("audit: adjacency size disagrees with edge table");
    std::vector<int> seen_out(edges_.size(), 0), seen_in(edges_.size(), 0);
    for (std::size_t n = 0; n < node_labels_.size(); ++n) {
      for (const auto& a : adjacency(NodeId{n}, Direction::Out)) {
        const auto& e = edges_[a.edge.value];
        if (e.source.value != n || e.target != a.node || e.label != a.label)
          throw Error("audit: outgoing entry of " + node_str(NodeId{n}) +
                      " disagrees with edge table");
        ++seen_out[a.edge.value];
      }
      for (const auto& a : adjacency(NodeId{n}, Direction::In)) {
        const auto& e = edges_[a.edge.value];
        if (e.target.value != n || e.source != a.node || e.label != a.label)
          throw Error("audit: incoming entry of " + node_str(NodeId{n}) +
                      " disagrees with edge table");
        ++seen_in[a.edge.value];
      }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (seen_out[i] != 1 || seen_in[i] != 1)
        throw Error("audit: edge " + std::to_string(i) +
                    " not listed exactly once per direction");
  }

  for (const auto& [ik, index] : indexes_) {
    std::size_t indexed = 0;
    for (const auto& [value, ids] : index) {
      for (NodeId n : ids) {
        if (node_labels_[n.value] != ik.label ||
            !(find_prop(node_props_[n.value], ik.key) == value))
          throw Error("audit: index entry for " + node_str(n) + " is stale");
      }
      indexed += ids.size();
    }
    std::size_t expected = 0;
    for (NodeId n : label_members_[index_of(ik.label)])
      if (!find_prop(node_props_[n.value], ik.key).is_null()) ++expected;
    if (expected != indexed)
      throw Error("audit: index on " + std::string(to_string(ik.label)) + "." +
                  key_names_[ik.key] + " is incomplete");
  }
}

std::optional<Path> shortest_path(const PropertyGraph& graph, NodeId source,
                                  NodeId target,
                                  const ShortestPathOptions& options) {
  if (!graph.contains(source)) throw UnknownNode("unknown source node");
  if (!graph.contains(target)) throw UnknownNode("unknown target node");
  if (options.max_hops < 0) return std::nullopt;
  if (source == target) {
    if (options.min_hops > 0) return std::nullopt;
    return Path{{source}, {}};
  }
  if (options.max_hops == 0) return std::nullopt;

  struct Visit {
    NodeId parent;
    EdgeId via;
    std::int64_t depth;
  };
  std::unordered_map<std::uint64_t, Visit> visited;
  visited.emplace(source.value, Visit{source, EdgeId{}, 0});
  std::deque<NodeId> queue{source};
  std::vector<Adjacent> candidates;

  auto gather = [&](NodeId n, Direction d) {
    if (options.labels.empty()) {
      auto span = graph.adjacency(n, d);
      candidates.insert(candidates.end(), span.begin(), span.end());
    } else {
      for (EdgeLabel l : options.labels) {
        auto span = graph.adjacency(n, l, d);
        candidates.insert(candidates.end(), span.begin(), span.end());
      }
    }
  };

  while (!queue.empty()) {
    NodeId current = queue.front();
    queue.pop_front();
    if (options.on_step) options.on_step();
    const std::int64_t depth = visited.at(current.value).depth;
    if (depth >= options.max_hops) continue;

    candidates.clear();
    if (options.direction != Direction::In) gather(current, Direction::Out);
    if (options.direction != Direction::Out) gather(current, Direction::In);
    std::sort(candidates.begin(), candidates.end(),
              [](const Adjacent& a, const Adjacent& b) {
                if (a.node != b.node) return a.node < b.node;
                return a.edge < b.edge;
              });

    for (const auto& a : candidates) {
      if (a.node == current) continue;
      if (visited.count(a.node.value)) continue;
      if (options.edge_filter && !options.edge_filter(a.edge)) continue;
      visited.emplace(a.node.value, Visit{current, a.edge, depth + 1});
      if (a.node == target) {
        Path path;
        NodeId walk = target;
        while (walk != source) {
          const auto& v = visited.at(walk.value);
          path.nodes.push_back(walk);
          path.edges.push_back(v.via);
          walk = v.parent;
        }
        path.nodes.push_back(source);
        std::reverse(path.nodes.begin(), path.nodes.end());
        std::reverse(path.edges.begin(), path.edges.end());
        return path;
      }
      queue.push_back(a.node);
    }
  }
  return std::nullopt;
}

std::optional<Path> shortest_path(const PropertyGraph& graph, NodeId source,
                                  NodeId target,
                                  const std::vector<EdgeLabel>& labels,
                                  std::int64_t max_hops, Direction direction) {
  ShortestPathOptions options;
  options.labels = labels;
  options.max_hops = max_hops;
  options.direction = direction;
  return shortest_path(graph, source, target, options);
}

}  // namespace litgraph
