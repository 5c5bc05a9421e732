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

#include "litgraph/service/service.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "litgraph/cypher/executor.hpp"
#include "litgraph/cypher/lexer.hpp"
#include "litgraph/errors.hpp"
#include "litgraph/ingest/ingest.hpp"

namespace litgraph::service {

namespace {

Json error_body(const std::string& message) {
  Json j;
  j["error"] = message;
  return j;
}

Response error(int status, const std::string& message) { return {status, error_body(message)}; }

Response positioned_error(const std::string& message, std::optional<std::size_t> offset) {
  Json j = error_body(message);
  if (offset) {
    j["offset"] = *offset;
  } else {
    j["offset"] = nullptr;
  }
  return {400, std::move(j)};
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string literal_for(const std::string& name, const nlohmann::json& v) {
  if (v.is_string()) return quote(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX))
      throw ParameterError("parameter $" + name + " is out of range");
    return std::to_string(u);
  }
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) throw ParameterError("parameter $" + name + " is not finite");
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
    std::string s(buf, end);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
  }
  throw ParameterError("parameter $" + name + " must be a string, number or boolean");
}

Json scalar_to_json(const PropertyValue& v) {
  if (v.is_integer()) return v.as_integer();
  if (v.is_real()) return v.as_real();
  if (v.is_text()) return v.as_text();
  if (v.is_boolean()) return v.as_boolean();
  return nullptr;
}

Json properties_json(const PropertyMap& props) {
  Json j = Json::object();
  for (const auto& [k, v] : props) j[k] = scalar_to_json(v);
  return j;
}

}  // namespace

// ---- examples ----

ExampleRegistry ExampleRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open examples file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("examples file " + path.string() + ": " + e.what());
  }
  return parse(doc);
}

ExampleRegistry ExampleRegistry::parse(const nlohmann::json& doc) {
  if (!doc.is_array()) throw Error("examples file must hold a JSON array");
  ExampleRegistry r;
  std::set<std::string> slugs;
  for (const auto& e : doc) {
    if (!e.is_object() || !e.contains("slug") || !e.contains("statement"))
      throw Error("example entries need a slug and a statement");
    ExampleEntry entry;
    entry.slug = e.at("slug").get<std::string>();
    entry.statement = e.at("statement").get<std::string>();
    entry.title = e.value("title", "");
    entry.description = e.value("description", "");
    if (!slugs.insert(entry.slug).second) throw Error("duplicate example slug " + entry.slug);
    r.entries_.push_back(std::move(entry));
  }
  return r;
}

const ExampleEntry* ExampleRegistry::find(std::string_view slug) const {
  for (const auto& e : entries_)
    if (e.slug == slug) return &e;
  return nullptr;
}

// ---- parameters ----

std::string substitute_parameters(std::string_view statement, const nlohmann::json& params) {
  if (!params.is_null() && !params.is_object())
    throw ParameterError("parameters must be a JSON object");
  std::vector<cypher::Token> tokens = cypher::tokenize(statement);
  std::set<std::string> used;
  std::string out;
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    if (t.kind != cypher::TokenKind::Parameter) continue;
    if (params.is_null() || !params.contains(t.text))
      throw ParameterError("no value for parameter $" + t.text);
    out.append(statement.substr(pos, t.offset - pos));
    out += literal_for(t.text, params.at(t.text));
    pos = t.offset + t.length;
    used.insert(t.text);
  }
  out.append(statement.substr(pos));
  if (params.is_object())
    for (const auto& [k, v] : params.items())
      if (!used.count(k)) throw ParameterError("unknown parameter $" + k);
  return out;
}

// ---- results ----

Json value_to_json(const cypher::Value& v, const PropertyGraph& g) {
  switch (v.kind()) {
    case cypher::Value::Kind::Scalar:
      return scalar_to_json(v.scalar());
    case cypher::Value::Kind::Node: {
      Json j;
      j["id"] = v.node().value;
      j["label"] = std::string(to_string(g.label(v.node())));
      j["properties"] = properties_json(g.properties(v.node()));
      return j;
    }
    case cypher::Value::Kind::Edge: {
      const EdgeRecord& e = g.edge(v.edge());
      Json j;
      j["id"] = v.edge().value;
      j["label"] = std::string(to_string(e.label));
      j["source"] = e.source.value;
      j["target"] = e.target.value;
      j["properties"] = properties_json(g.edge_properties(v.edge()));
      return j;
    }
    case cypher::Value::Kind::Path: {
      Json j;
      j["nodes"] = Json::array();
      j["edges"] = Json::array();
      for (NodeId n : v.path().nodes) j["nodes"].push_back(n.value);
      for (EdgeId e : v.path().edges) j["edges"].push_back(e.value);
      return j;
    }
    case cypher::Value::Kind::List: {
      Json j = Json::array();
      for (const auto& x : v.list()) j.push_back(value_to_json(x, g));
      return j;
    }
  }
  return nullptr;
}

Json result_to_json(const cypher::ResultTable& t, const PropertyGraph& g, double elapsed_ms) {
  Json j;
  j["columns"] = t.columns;
  j["rows"] = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(value_to_json(v, g));
    j["rows"].push_back(std::move(r));
  }
  j["stats"]["row_count"] = t.rows.size();
  j["stats"]["elapsed_ms"] = elapsed_ms;
  j["stats"]["truncated"] = t.truncated;
  return j;
}

// ---- service ----

QueryService::QueryService(ServiceConfig config, ExampleRegistry examples)
    : config_(config), examples_(std::move(examples)), started_(std::chrono::steady_clock::now()) {}

void QueryService::set_graph(std::shared_ptr<const PropertyGraph> graph, std::string built_at) {
  std::lock_guard lock(mu_);
  graph_ = std::move(graph);
  built_at_ = std::move(built_at);
}

std::shared_ptr<const PropertyGraph> QueryService::graph() const {
  std::lock_guard lock(mu_);
  return graph_;
}

bool QueryService::ready() const { return graph() != nullptr; }

Response QueryService::handle_query(const QueryRequest& req) const {
  auto g = graph();
  if (!g) return error(503, "graph is still loading");
  if (req.statement.find_first_not_of(" \t\r\n") == std::string::npos)
    return positioned_error("empty statement", 0);
  if (req.max_rows && *req.max_rows == 0) return positioned_error("max_rows must be positive", std::nullopt);
  if (req.timeout_ms && *req.timeout_ms <= 0)
    return positioned_error("timeout_ms must be positive", std::nullopt);

  cypher::ExecutionLimits limits;
  limits.max_rows = std::min(req.max_rows.value_or(config_.max_rows), config_.max_rows);
  limits.timeout = std::chrono::milliseconds(
      std::min(req.timeout_ms.value_or(config_.timeout_ms), config_.timeout_ms));
  limits.truncate_on_row_limit = true;

  auto start = std::chrono::steady_clock::now();
  try {
    std::string text = substitute_parameters(req.statement, req.parameters);
    cypher::ResultTable table = cypher::execute(text, *g, limits);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ms = std::round(ms * 1000.0) / 1000.0;
    return {table.truncated ? 413 : 200, result_to_json(table, *g, ms)};
  } catch (const ParameterError& e) {
    return error(422, e.what());
  } catch (const LexError& e) {
    return positioned_error(e.what(), e.offset());
  } catch (const ParseError& e) {
    return positioned_error(e.what(), e.offset());
  } catch (const Timeout& e) {
    return error(408, e.what());
  } catch (const Error& e) {
    return positioned_error(e.what(), std::nullopt);
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

Response QueryService::handle_query_body(std::string_view body) const {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    return positioned_error(std::string("request body is not valid JSON: ") + e.what(), std::nullopt);
  }
  if (!doc.is_object() || !doc.contains("statement") || !doc["statement"].is_string())
    return positioned_error("request needs a \"statement\" string", std::nullopt);
  QueryRequest req;
  req.statement = doc["statement"].get<std::string>();
  if (doc.contains("parameters") && !doc["parameters"].is_null()) {
    if (!doc["parameters"].is_object()) return error(422, "parameters must be a JSON object");
    req.parameters = doc["parameters"];
  }
  auto positive = [&](const char* key, auto& out) -> bool {
    if (!doc.contains(key) || doc[key].is_null()) return true;
    if (!doc[key].is_number_integer() || doc[key].template get<std::int64_t>() <= 0) return false;
    out = doc[key].template get<std::int64_t>();
    return true;
  };
  std::optional<std::int64_t> rows;
  if (!positive("max_rows", rows)) return positioned_error("max_rows must be a positive integer", std::nullopt);
  if (!positive("timeout_ms", req.timeout_ms))
    return positioned_error("timeout_ms must be a positive integer", std::nullopt);
  if (rows) req.max_rows = static_cast<std::size_t>(*rows);
  return handle_query(req);
}

Response QueryService::list_examples() const {
  Json arr = Json::array();
  for (const auto& e : examples_.list()) {
    Json j;
    j["slug"] = e.slug;
    j["title"] = e.title;
    j["statement"] = e.statement;
    j["description"] = e.description;
    arr.push_back(std::move(j));
  }
  return {200, std::move(arr)};
}

Response QueryService::get_example(std::string_view slug) const {
  const ExampleEntry* e = examples_.find(slug);
  if (!e) return error(404, "no example named \"" + std::string(slug) + "\"");
  Json j;
  j["slug"] = e->slug;
  j["title"] = e->title;
  j["statement"] = e->statement;
  j["description"] = e->description;
  return {200, std::move(j)};
}

Response QueryService::stats() const {
  auto g = graph();
  if (!g) return error(503, "graph is still loading");
  GraphCounts c = g->counts();
  Json j;
  j["counts"] = ingest::counts_json(c);
  j["total_nodes"] = c.total_nodes();
  j["total_edges"] = c.total_edges();
  Json idx = Json::array();
  for (const auto& [label, prop] : g->indexes()) idx.push_back(std::string(to_string(label)) + "." + prop);
  j["indexes"] = std::move(idx);
  std::lock_guard lock(mu_);
  j["built_at"] = built_at_;
  return {200, std::move(j)};
}

Response QueryService::health() const {
  auto g = graph();
  double up = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
  Json j;
  j["status"] = g ? "ok" : "loading";
  j["uptime_s"] = std::round(up * 1000.0) / 1000.0;
  j["node_count"] = g ? g->node_count() : 0;
  return {g ? 200 : 503, std::move(j)};
}

}  // namespace litgraph::service
