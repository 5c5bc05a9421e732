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

#include "litgraph/resolver/resolver.hpp"

#include <cctype>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "litgraph/errors.hpp"

namespace litgraph::resolver {

namespace fs = std::filesystem;

namespace {

const std::regex& doi_pattern() {
  static const std::regex re(R"(10\.\d{4,9}/\S+)", std::regex::icase);
  return re;
}

const std::regex& arxiv_pattern() {
  static const std::regex re(R"(\d{4}\.\d{4,5}(v\d+)?|[a-z-]+(\.[A-Z]{2})?/\d{7})");
  return re;
}

bool is_paper_id(const std::string& s) {
  if (s.size() != 40) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && (c < 'a' || c > 'f')) return false;
  return true;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool has_prefix_icase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(s[i])) != std::tolower(static_cast<unsigned char>(prefix[i])))
      return false;
  return true;
}

// "https://host:port/path?x" -> ("https://host:port", "/path?x").
std::pair<std::string, std::string> split_url(const std::string& url) {
  auto scheme = url.find("://");
  std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
  auto slash = url.find('/', host_start);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

}  // namespace

std::string_view to_string(IdKind kind) { return kind == IdKind::Doi ? "doi" : "arxiv"; }

void validate(const ExternalId& id) {
  const std::regex& re = id.kind == IdKind::Doi ? doi_pattern() : arxiv_pattern();
  if (!std::regex_match(id.value, re))
    throw InvalidId("\"" + id.value + "\" is not a valid " + std::string(to_string(id.kind)));
}

ExternalId parse_external_id(std::string_view text) {
  ExternalId id;
  if (has_prefix_icase(text, "doi:")) {
    id = ExternalId::doi(std::string(text.substr(4)));
  } else if (has_prefix_icase(text, "arxiv:")) {
    id = ExternalId::arxiv(std::string(text.substr(6)));
  } else if (std::regex_match(std::string(text), doi_pattern())) {
    id = ExternalId::doi(std::string(text));
  } else {
    id = ExternalId::arxiv(std::string(text));
  }
  validate(id);
  return id;
}

// ---- transports ----

HttpResult HttpTransport::get(const std::string& url) {
  auto [base, path] = split_url(url);
  httplib::Client client(base);
  auto secs = timeout_.count() / 1000;
  auto usecs = (timeout_.count() % 1000) * 1000;
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res) return {0, httplib::to_string(res.error())};
  return {res->status, res->body};
}

HttpResult OfflineTransport::get(const std::string& url) {
  throw Upstream("offline mode: refusing to fetch " + url);
}

std::shared_ptr<FixtureTransport> FixtureTransport::load(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open resolver fixture " + file.string());
  nlohmann::json doc = nlohmann::json::parse(in);
  auto t = std::make_shared<FixtureTransport>();
  for (const auto& [path, rec] : doc.items()) {
    HttpResult r;
    r.status = rec.value("status", 200);
    const auto& body = rec.contains("body") ? rec["body"] : nlohmann::json();
    r.body = body.is_string() ? body.get<std::string>() : body.dump();
    t->add(path, std::move(r));
  }
  return t;
}

void FixtureTransport::add(std::string path, HttpResult result) {
  std::lock_guard lock(mu_);
  responses_[std::move(path)] = std::move(result);
}

HttpResult FixtureTransport::get(const std::string& url) {
  ++calls_;
  std::string path = split_url(url).second;
  std::lock_guard lock(mu_);
  auto it = responses_.find(path);
  if (it == responses_.end()) return {404, R"({"error":"Paper not found"})"};
  return it->second;
}

// ---- cache ----

ResolutionCache::ResolutionCache(std::optional<fs::path> file) : file_(std::move(file)) {
  if (!file_) return;
  std::ifstream in(*file_, std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string kind, value, paper_id, ts;
    if (!std::getline(fields, kind, '\t') || !std::getline(fields, value, '\t') ||
        !std::getline(fields, paper_id, '\t'))
      continue;
    if (!is_paper_id(paper_id) || (kind != "doi" && kind != "arxiv")) continue;
    ExternalId id{kind == "doi" ? IdKind::Doi : IdKind::Arxiv, value};
    entries_[key(id)] = paper_id;
  }
}

std::string ResolutionCache::key(const ExternalId& id) {
  // DOIs are case-insensitive; arXiv ids are not.
  return std::string(to_string(id.kind)) + "\t" + (id.kind == IdKind::Doi ? lower(id.value) : id.value);
}

std::optional<std::string> ResolutionCache::lookup(const ExternalId& id) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key(id));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResolutionCache::store(const ExternalId& id, const std::string& paper_id) {
  std::lock_guard lock(mu_);
  entries_[key(id)] = paper_id;
  if (!file_) return;
  std::ofstream out(*file_, std::ios::binary | std::ios::app);
  if (!out) throw Error("cannot append to cache file " + file_->string());
  out << to_string(id.kind) << '\t' << id.value << '\t' << paper_id << '\t'
      << static_cast<long long>(std::time(nullptr)) << '\n';
}

std::size_t ResolutionCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

// ---- resolver ----

ResolverConfig ResolverConfig::from_env() {
  ResolverConfig c;
  if (const char* base = std::getenv("LITGRAPH_RESOLVER_BASE"); base && *base) c.base_url = base;
  return c;
}

Resolver::Resolver(ResolverConfig config, std::shared_ptr<Transport> transport)
    : config_(std::move(config)),
      transport_(std::move(transport)),
      cache_(config_.cache_file),
      sleeper_([](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); }) {
  while (!config_.base_url.empty() && config_.base_url.back() == '/') config_.base_url.pop_back();
  if (!transport_) {
    if (config_.offline) {
      transport_ = std::make_shared<OfflineTransport>();
    } else {
      transport_ = std::make_shared<HttpTransport>(config_.timeout);
    }
  }
}

std::string Resolver::url_for(const ExternalId& id) const {
  return config_.base_url + "/v1/paper/" + (id.kind == IdKind::Arxiv ? "arXiv:" : "") + id.value;
}

std::string Resolver::resolve(const ExternalId& id) {
  validate(id);
  if (auto hit = cache_.lookup(id)) return *hit;

  std::string url = url_for(id);
  HttpResult res;
  for (std::size_t attempt = 0;; ++attempt) {
    res = transport_->get(url);
    bool retryable = res.status == 0 || res.status >= 500;
    if (!retryable || attempt >= config_.backoff.size()) break;
    sleeper_(config_.backoff[attempt]);
  }
  if (res.status == 404) throw NotFound(std::string(to_string(id.kind)) + " " + id.value + " not found");
  if (res.status != 200)
    throw Upstream("GET " + url + " failed: " +
                   (res.status == 0 ? res.body : "HTTP " + std::to_string(res.status)));

  nlohmann::json doc = nlohmann::json::parse(res.body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("paperId") || !doc["paperId"].is_string())
    throw MalformedResponse("response for " + id.value + " has no paperId");
  std::string paper_id = doc["paperId"].get<std::string>();
  if (!is_paper_id(paper_id))
    throw MalformedResponse("paperId \"" + paper_id + "\" is not 40 lowercase hex characters");
  cache_.store(id, paper_id);
  return paper_id;
}

std::optional<NodeId> Resolver::find_paper(const PropertyGraph& graph, const ExternalId& id) {
  validate(id);
  if (id.kind == IdKind::Doi && graph.has_index(NodeLabel::Paper, "doi")) {
    for (const auto& spelling : {id.value, lower(id.value)}) {
      auto local = graph.index_lookup(NodeLabel::Paper, "doi", PropertyValue(spelling));
      if (!local.empty()) return local.front();
    }
  }
  auto found = graph.index_lookup(NodeLabel::Paper, "paper_id", PropertyValue(resolve(id)));
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace litgraph::resolver
