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

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "litgraph/cypher/value.hpp"
#include "litgraph/graph.hpp"

namespace litgraph::service {

using Json = nlohmann::ordered_json;

struct ExampleEntry {
  std::string slug;
  std::string title;
  std::string statement;
  std::string description;
};

class ExampleRegistry {
 public:
  ExampleRegistry() = default;
  // JSON array of {slug, title, statement, description}. Throws Error on a
  // malformed file or duplicate slug.
  static ExampleRegistry load(const std::filesystem::path& path);
  static ExampleRegistry parse(const nlohmann::json& doc);

  const std::vector<ExampleEntry>& list() const { return entries_; }
  const ExampleEntry* find(std::string_view slug) const;

 private:
  std::vector<ExampleEntry> entries_;
};

// Bad or missing query parameter (HTTP 422).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Replaces each `$name` placeholder with the literal for params[name].
// Strings are quoted and escaped; numbers and booleans are spelled out.
// Placeholders inside string literals or comments are left alone. Throws
// ParameterError for a placeholder without a value, a value nothing refers
// to, or a non-scalar value; LexError for malformed statements.
std::string substitute_parameters(std::string_view statement, const nlohmann::json& params);

// Nodes as {id, label, properties}, edges as {id, label, source, target,
// properties}, paths as {nodes, edges} id lists, lists as arrays.
Json value_to_json(const cypher::Value& value, const PropertyGraph& graph);
// {"columns", "rows", "stats": {row_count, elapsed_ms, truncated}}.
Json result_to_json(const cypher::ResultTable& table, const PropertyGraph& graph,
                    double elapsed_ms);

struct ServiceConfig {
  std::size_t max_rows = 10000;
  std::int64_t timeout_ms = 30000;
};

struct QueryRequest {
  std::string statement;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::size_t> max_rows;
  std::optional<std::int64_t> timeout_ms;
};

struct Response {
  int status = 200;
  Json body;
};

// Request handling independent of the HTTP transport. Read-only over the
// graph; safe to call from many threads.
class QueryService {
 public:
  explicit QueryService(ServiceConfig config = {}, ExampleRegistry examples = {});

  // Makes the service ready. `built_at` is the build timestamp reported by
  // /stats.
  void set_graph(std::shared_ptr<const PropertyGraph> graph, std::string built_at = {});
  bool ready() const;

  Response handle_query(const QueryRequest& request) const;
  // Parses the POST body first; malformed JSON is a 400.
  Response handle_query_body(std::string_view body) const;
  Response list_examples() const;
  Response get_example(std::string_view slug) const;
  Response stats() const;
  Response health() const;

  const ServiceConfig& config() const { return config_; }

 private:
  std::shared_ptr<const PropertyGraph> graph() const;

  ServiceConfig config_;
  ExampleRegistry examples_;
  std::chrono::steady_clock::time_point started_;
  mutable std::mutex mu_;
  std::shared_ptr<const PropertyGraph> graph_;
  std::string built_at_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 7474;
  // Served under /app when set.
  std::optional<std::filesystem::path> static_dir;
  std::string cors_origin = "*";
};

// HTTP/1.1 front end: POST /query, GET /examples, GET /examples/{slug},
// GET /stats, GET /health.
class HttpServer {
 public:
  HttpServer(QueryService& service, ServerOptions options);
  ~HttpServer();

  // Binds; port 0 picks a free port. Returns the bound port or throws Error.
  int bind();
  // Blocks serving requests until stop().
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace litgraph::service
