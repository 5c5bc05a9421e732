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
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "litgraph/graph.hpp"

namespace litgraph::resolver {

enum class IdKind { Doi, Arxiv };

std::string_view to_string(IdKind kind);

struct ExternalId {
  IdKind kind;
  std::string value;

  static ExternalId doi(std::string value) { return {IdKind::Doi, std::move(value)}; }
  static ExternalId arxiv(std::string value) { return {IdKind::Arxiv, std::move(value)}; }
  bool operator==(const ExternalId&) const = default;
};

// Throws InvalidId unless the value is a well-formed DOI or arXiv id.
void validate(const ExternalId& id);

// Accepts "doi:...", "arxiv:...", or a bare DOI / arXiv id. Throws InvalidId.
ExternalId parse_external_id(std::string_view text);

struct HttpResult {
  int status = 0;  // 0 when the request never got a response
  std::string body;
};

class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResult get(const std::string& url) = 0;
};

class HttpTransport : public Transport {
 public:
  explicit HttpTransport(std::chrono::milliseconds timeout = std::chrono::seconds(10))
      : timeout_(timeout) {}
  HttpResult get(const std::string& url) override;

 private:
  std::chrono::milliseconds timeout_;
};

// Refuses every request.
class OfflineTransport : public Transport {
 public:
  HttpResult get(const std::string& url) override;
};

// Recorded responses keyed by request path (e.g. "/v1/paper/10.1038/nrn3241").
// Unknown paths answer 404. Counts calls.
class FixtureTransport : public Transport {
 public:
  FixtureTransport() = default;
  // JSON object: path -> {"status": N, "body": <json or string>}.
  static std::shared_ptr<FixtureTransport> load(const std::filesystem::path& file);

  void add(std::string path, HttpResult result);
  HttpResult get(const std::string& url) override;
  std::size_t calls() const { return calls_; }

 private:
  std::map<std::string, HttpResult> responses_;
  std::atomic<std::size_t> calls_{0};
  mutable std::mutex mu_;
};

// ExternalId -> paper id, optionally persisted as an append-only file of
// `kind<TAB>value<TAB>paper_id<TAB>unix_ts` lines.
class ResolutionCache {
 public:
  // In memory only when `file` is unset.
  explicit ResolutionCache(std::optional<std::filesystem::path> file = std::nullopt);

  std::optional<std::string> lookup(const ExternalId& id) const;
  void store(const ExternalId& id, const std::string& paper_id);
  std::size_t size() const;

 private:
  static std::string key(const ExternalId& id);

  std::optional<std::filesystem::path> file_;
  std::map<std::string, std::string> entries_;
  mutable std::mutex mu_;
};

struct ResolverConfig {
  std::string base_url = "https://api.semanticscholar.org";
  std::chrono::milliseconds timeout = std::chrono::seconds(10);
  bool offline = false;
  // Delay before each retry of a failed (5xx or network) request.
  std::vector<std::chrono::milliseconds> backoff = {std::chrono::milliseconds(250),
                                                    std::chrono::milliseconds(500),
                                                    std::chrono::milliseconds(1000)};
  std::optional<std::filesystem::path> cache_file;

  // Defaults, with LITGRAPH_RESOLVER_BASE overriding base_url when set.
  static ResolverConfig from_env();
};

class Resolver {
 public:
  // Without a transport: OfflineTransport when config.offline, else HTTP.
  explicit Resolver(ResolverConfig config = ResolverConfig::from_env(),
                    std::shared_ptr<Transport> transport = nullptr);

  // Paper id for the external id; cache first, then the network. Throws
  // InvalidId, NotFound, Upstream, MalformedResponse.
  std::string resolve(const ExternalId& id);

  // Local doi index first (when the graph has one), then resolve() and a
  // paper_id lookup. Empty when the paper is not in the graph.
  std::optional<NodeId> find_paper(const PropertyGraph& graph, const ExternalId& id);

  std::string url_for(const ExternalId& id) const;
  const ResolutionCache& cache() const { return cache_; }

  // Replaces the sleep between retries (tests).
  void set_sleeper(std::function<void(std::chrono::milliseconds)> sleeper) {
    sleeper_ = std::move(sleeper);
  }

 private:
  ResolverConfig config_;
  std::shared_ptr<Transport> transport_;
  ResolutionCache cache_;
  std::function<void(std::chrono::milliseconds)> sleeper_;
};

}  // namespace litgraph::resolver
