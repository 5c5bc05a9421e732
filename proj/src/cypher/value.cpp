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

#include "litgraph/cypher/value.hpp"

#include <algorithm>
#include <sstream>

namespace litgraph::cypher {

namespace {

int kind_rank(Value::Kind k) {
  switch (k) {
    case Value::Kind::Node:
      return 0;
    case Value::Kind::Edge:
      return 1;
    case Value::Kind::List:
      return 2;
    case Value::Kind::Path:
      return 3;
    case Value::Kind::Scalar:
      return 4;
  }
  return 4;
}

template <typename T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

std::size_t mix(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string format_props(const PropertyMap& props) {
  if (props.empty()) return "";
  std::string out = " {";
  bool first = true;
  for (const auto& [k, v] : props) {
    if (!first) out += ",";
    first = false;
    out += k + ":" + v.to_literal();
  }
  return out + "}";
}

std::string format_node(NodeId n, const PropertyGraph& g) {
  return "(:" + std::string(to_string(g.label(n))) + format_props(g.properties(n)) +
         ")";
}

std::string format_edge(EdgeId e, const PropertyGraph& g) {
  return "[:" + std::string(to_string(g.edge(e).label)) +
         format_props(g.edge_properties(e)) + "]";
}

}  // namespace

std::size_t Value::hash() const {
  std::size_t seed = v_.index();
  switch (kind()) {
    case Kind::Scalar:
      return mix(seed, scalar().hash());
    case Kind::Node:
      return mix(seed, std::hash<std::uint64_t>{}(node().value));
    case Kind::Edge:
      return mix(seed, std::hash<std::uint64_t>{}(edge().value));
    case Kind::Path:
      for (auto n : path().nodes) seed = mix(seed, n.value);
      for (auto e : path().edges) seed = mix(seed, e.value + 1);
      return seed;
    case Kind::List:
      for (const auto& v : list()) seed = mix(seed, v.hash());
      return seed;
  }
  return seed;
}

int total_compare(const Value& a, const Value& b) {
  int ra = kind_rank(a.kind()), rb = kind_rank(b.kind());
  if (ra != rb) return three_way(ra, rb);
  switch (a.kind()) {
    case Value::Kind::Scalar:
      return litgraph::total_compare(a.scalar(), b.scalar());
    case Value::Kind::Node:
      return three_way(a.node(), b.node());
    case Value::Kind::Edge:
      return three_way(a.edge(), b.edge());
    case Value::Kind::Path: {
      const auto& pa = a.path();
      const auto& pb = b.path();
      if (pa.nodes != pb.nodes)
        return pa.nodes < pb.nodes ? -1 : 1;
      if (pa.edges != pb.edges)
        return pa.edges < pb.edges ? -1 : 1;
      return 0;
    }
    case Value::Kind::List: {
      const auto& la = a.list();
      const auto& lb = b.list();
      for (std::size_t i = 0; i < la.size() && i < lb.size(); ++i)
        if (int c = total_compare(la[i], lb[i]); c != 0) return c;
      return three_way(la.size(), lb.size());
    }
  }
  return 0;
}

namespace {

bool row_less(const Row& a, const Row& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (int c = total_compare(a[i], b[i]); c != 0) return c < 0;
  return a.size() < b.size();
}

}  // namespace

bool bag_equal(const ResultTable& a, const ResultTable& b) {
  if (a.columns != b.columns || a.rows.size() != b.rows.size()) return false;
  auto ra = a.rows, rb = b.rows;
  std::sort(ra.begin(), ra.end(), row_less);
  std::sort(rb.begin(), rb.end(), row_less);
  return ra == rb;
}

bool sequence_equal(const ResultTable& a, const ResultTable& b) {
  return a.columns == b.columns && a.rows == b.rows;
}

std::string format_value(const Value& v, const PropertyGraph& graph) {
  switch (v.kind()) {
    case Value::Kind::Scalar:
      return v.scalar().to_display();
    case Value::Kind::Node:
      return format_node(v.node(), graph);
    case Value::Kind::Edge:
      return format_edge(v.edge(), graph);
    case Value::Kind::Path: {
      const auto& p = v.path();
      std::string out = format_node(p.nodes.front(), graph);
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const auto& rec = graph.edge(p.edges[i]);
        bool forward = rec.source == p.nodes[i];
        out += forward ? "-" : "<-";
        out += format_edge(p.edges[i], graph);
        out += forward ? "->" : "-";
        out += format_node(p.nodes[i + 1], graph);
      }
      return out;
    }
    case Value::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.list().size(); ++i) {
        if (i) out += ", ";
        const auto& item = v.list()[i];
        out += item.is_scalar() ? item.scalar().to_literal()
                                : format_value(item, graph);
      }
      return out + "]";
    }
  }
  return "";
}

std::string format_table(const ResultTable& table, const PropertyGraph& graph) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "\t" : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "\t" : "") << format_value(row[i], graph);
    out << '\n';
  }
  return out.str();
}

std::string debug_string(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Scalar:
      return v.scalar().to_literal();
    case Value::Kind::Node:
      return "#" + std::to_string(v.node().value);
    case Value::Kind::Edge:
      return "e" + std::to_string(v.edge().value);
    case Value::Kind::Path: {
      std::string out = "<";
      const auto& p = v.path();
      for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (i) out += ",e" + std::to_string(p.edges[i - 1].value) + ",";
        out += "#" + std::to_string(p.nodes[i].value);
      }
      return out + ">";
    }
    case Value::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.list().size(); ++i)
        out += (i ? "," : "") + debug_string(v.list()[i]);
      return out + "]";
    }
  }
  return "";
}

std::string debug_string(const Row& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.size(); ++i)
    out += (i ? ", " : "") + debug_string(row[i]);
  return out + ")";
}

}  // namespace litgraph::cypher
