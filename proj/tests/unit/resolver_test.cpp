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

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <unistd.h>

#include "httplib.h"
#include "litgraph/errors.hpp"
#include "litgraph/resolver/resolver.hpp"
#include "support.hpp"

namespace litgraph::resolver {
namespace {

namespace fs = std::filesystem;
using std::chrono::milliseconds;

constexpr const char* kP1 = "931d6b6ee097eab80b8f89a313c8d3a6d5443cb2";

std::shared_ptr<FixtureTransport> recorded() {
  return FixtureTransport::load(fs::path(testing::source_dir()) / "fixtures" / "resolver" / "responses.json");
}

ResolverConfig quiet_config() {
  ResolverConfig c;
  c.base_url = "https://api.example.test";
  return c;
}

fs::path temp_file(const std::string& stem) {
  static std::atomic<int> n{0};
  fs::path p = fs::temp_directory_path() /
               ("litgraph_" + stem + "_" + std::to_string(::getpid()) + "_" + std::to_string(n++));
  fs::remove(p);
  return p;
}

TEST(ExternalIdTest, Validation) {
  EXPECT_NO_THROW(validate(ExternalId::doi("10.1038/nrn3241")));
  EXPECT_NO_THROW(validate(ExternalId::doi("10.1145/3292500.3330701")));
  EXPECT_THROW(validate(ExternalId::doi("not-a-doi")), InvalidId);
  EXPECT_THROW(validate(ExternalId::doi("10.12/too-short-prefix")), InvalidId);
  EXPECT_NO_THROW(validate(ExternalId::arxiv("1705.00001")));
  EXPECT_NO_THROW(validate(ExternalId::arxiv("1705.00001v2")));
  EXPECT_NO_THROW(validate(ExternalId::arxiv("hep-th/9901001")));
  EXPECT_NO_THROW(validate(ExternalId::arxiv("math.AG/0309136")));
  EXPECT_THROW(validate(ExternalId::arxiv("17050.0001")), InvalidId);
}

TEST(ExternalIdTest, ParseForms) {
  EXPECT_EQ(parse_external_id("10.1038/nrn3241"), ExternalId::doi("10.1038/nrn3241"));
  EXPECT_EQ(parse_external_id("doi:10.1038/NRN3241"), ExternalId::doi("10.1038/NRN3241"));
  EXPECT_EQ(parse_external_id("arXiv:1705.00001"), ExternalId::arxiv("1705.00001"));
  EXPECT_EQ(parse_external_id("1705.00001"), ExternalId::arxiv("1705.00001"));
  EXPECT_THROW(parse_external_id("not-a-doi"), InvalidId);
}

TEST(ResolverTest, RecordedDoi) {
  auto t = recorded();
  Resolver r(quiet_config(), t);
  EXPECT_EQ(r.url_for(ExternalId::doi("10.1038/nrn3241")), "https://api.example.test/v1/paper/10.1038/nrn3241");
  EXPECT_EQ(r.resolve(ExternalId::doi("10.1038/nrn3241")), kP1);
  EXPECT_EQ(t->calls(), 1u);
  EXPECT_EQ(r.resolve(ExternalId::doi("10.1038/nrn3241")), kP1);
  EXPECT_EQ(r.resolve(ExternalId::doi("10.1038/NRN3241")), kP1);
  EXPECT_EQ(t->calls(), 1u);
}

TEST(ResolverTest, ArxivUsesPrefix) {
  auto t = recorded();
  Resolver r(quiet_config(), t);
  EXPECT_EQ(r.url_for(ExternalId::arxiv("1705.00001")), "https://api.example.test/v1/paper/arXiv:1705.00001");
  EXPECT_EQ(r.resolve(ExternalId::arxiv("1705.00001")), "5f1b2e0c6a7d4e3b9c8a1f2d3e4c5b6a7d8e9f01");
}

TEST(ResolverTest, InvalidIdNeverHitsNetwork) {
  auto t = recorded();
  Resolver r(quiet_config(), t);
  EXPECT_THROW(r.resolve(ExternalId::doi("not-a-doi")), InvalidId);
  EXPECT_EQ(t->calls(), 0u);
}

TEST(ResolverTest, ErrorsByStatus) {
  auto t = recorded();
  Resolver r(quiet_config(), t);
  std::vector<milliseconds> sleeps;
  r.set_sleeper([&](milliseconds d) { sleeps.push_back(d); });
  EXPECT_THROW(r.resolve(ExternalId::doi("10.1000/missing")), NotFound);
  EXPECT_THROW(r.resolve(ExternalId::doi("10.1000/broken")), MalformedResponse);
  EXPECT_TRUE(sleeps.empty());
  std::size_t before = t->calls();
  EXPECT_THROW(r.resolve(ExternalId::doi("10.1000/flaky")), Upstream);
  EXPECT_EQ(t->calls() - before, 4u);
  EXPECT_EQ(sleeps, (std::vector<milliseconds>{milliseconds(250), milliseconds(500), milliseconds(1000)}));
}

class FlakyTransport : public Transport {
 public:
  explicit FlakyTransport(int failures) : failures_(failures) {}
  HttpResult get(const std::string&) override {
    if (calls_++ < failures_) return {0, "connection refused"};
    return {200, std::string(R"({"paperId":")") + kP1 + "\"}"};
  }
  int calls_ = 0;

 private:
  int failures_;
};

TEST(ResolverTest, RetriesRecover) {
  auto t = std::make_shared<FlakyTransport>(2);
  Resolver r(quiet_config(), t);
  r.set_sleeper([](milliseconds) {});
  EXPECT_EQ(r.resolve(ExternalId::doi("10.1038/nrn3241")), kP1);
  EXPECT_EQ(t->calls_, 3);
}

TEST(ResolverTest, OfflineRefusesNetwork) {
  ResolverConfig c = quiet_config();
  c.offline = true;
  Resolver r(c);
  EXPECT_THROW(r.resolve(ExternalId::doi("10.1038/nrn3241")), Upstream);
}

TEST(ResolverTest, CacheSurvivesRestart) {
  fs::path cache = temp_file("cache");
  ResolverConfig c = quiet_config();
  c.cache_file = cache;
  {
    auto t = recorded();
    Resolver r(c, t);
    EXPECT_EQ(r.resolve(ExternalId::doi("10.1038/nrn3241")), kP1);
    EXPECT_EQ(t->calls(), 1u);
  }
  std::ifstream in(cache);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind(std::string("doi\t10.1038/nrn3241\t") + kP1 + "\t", 0), 0u) << line;
  {
    auto t = recorded();
    Resolver r(c, t);
    EXPECT_EQ(r.resolve(ExternalId::doi("10.1038/nrn3241")), kP1);
    EXPECT_EQ(t->calls(), 0u);
  }
  fs::remove(cache);
}

TEST(ResolverTest, EnvOverridesBase) {
  ::setenv("LITGRAPH_RESOLVER_BASE", "http://127.0.0.1:9", 1);
  EXPECT_EQ(ResolverConfig::from_env().base_url, "http://127.0.0.1:9");
  ::unsetenv("LITGRAPH_RESOLVER_BASE");
  EXPECT_EQ(ResolverConfig::from_env().base_url, "https://api.semanticscholar.org");
}

TEST(ResolverTest, HttpTransportAgainstLocalServer) {
  httplib::Server server;
  std::atomic<int> hits{0};
  server.Get(R"(/v1/paper/(.+))", [&](const httplib::Request& req, httplib::Response& res) {
    ++hits;
    if (req.matches[1] == "10.1038/nrn3241") {
      res.set_content(std::string(R"({"paperId":")") + kP1 + "\"}", "application/json");
    } else {
      res.status = 404;
    }
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  ResolverConfig c;
  c.base_url = "http://127.0.0.1:" + std::to_string(port) + "/";
  Resolver r(c);
  EXPECT_EQ(r.resolve(ExternalId::doi("10.1038/nrn3241")), kP1);
  EXPECT_THROW(r.resolve(ExternalId::doi("10.1038/other")), NotFound);
  EXPECT_EQ(hits.load(), 2);
  server.stop();
  th.join();
}

TEST(FindPaperTest, FixtureWiring) {
  const auto& g = testing::fixture_a().graph;
  auto t = recorded();
  Resolver r(quiet_config(), t);
  auto p = r.find_paper(g, ExternalId::doi("10.1038/nrn3241"));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, testing::find_node(g, NodeLabel::Paper, "title", "T1"));
  EXPECT_FALSE(r.find_paper(g, ExternalId::doi("10.1000/absent")));
  EXPECT_THROW(r.find_paper(g, ExternalId::doi("10.1000/missing")), NotFound);
}

TEST(FindPaperTest, LocalDoiIndexFirst) {
  PropertyGraph g;
  NodeId p = g.add_node(NodeLabel::Paper, {{"doi", PropertyValue("10.1038/nrn3241")}});
  g.create_index(NodeLabel::Paper, "doi");
  g.create_index(NodeLabel::Paper, "paper_id");
  g.seal();
  auto t = recorded();
  Resolver r(quiet_config(), t);
  EXPECT_EQ(r.find_paper(g, ExternalId::doi("10.1038/nrn3241")), p);
  EXPECT_EQ(t->calls(), 0u);
}

}  // namespace
}  // namespace litgraph::resolver
