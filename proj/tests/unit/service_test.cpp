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

#include <filesystem>
#include <thread>

#include "httplib.h"
#include "litgraph/cypher/executor.hpp"
#include "litgraph/errors.hpp"
#include "litgraph/ingest/ingest.hpp"
#include "litgraph/service/service.hpp"
#include "support.hpp"

namespace litgraph::service {
namespace {

namespace fs = std::filesystem;

std::shared_ptr<const PropertyGraph> fixture_graph() {
  static auto g = std::make_shared<const PropertyGraph>(
      ingest::import_bulk(ingest::load_manifest(fs::path(testing::fixture_dir()) / "manifest.json")).graph);
  return g;
}

ExampleRegistry examples() {
  return ExampleRegistry::load(fs::path(testing::source_dir()) / "data" / "examples.json");
}

std::unique_ptr<QueryService> ready_service(ServiceConfig config = {}) {
  auto s = std::make_unique<QueryService>(config, examples());
  s->set_graph(fixture_graph(), "2026-01-01T00:00:00Z");
  return s;
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

TEST(SubstituteTest, ScalarsBecomeLiterals) {
  nlohmann::json p = {{"year", 2013}, {"name", "Relationship \"extraction\""}, {"f", 2.0}, {"b", true}};
  EXPECT_EQ(substitute_parameters("RETURN $year, $name, $f, $b", p),
            "RETURN 2013, \"Relationship \\\"extraction\\\"\", 2.0, true");
}

TEST(SubstituteTest, StringsAndCommentsUntouched) {
  nlohmann::json p = {{"x", 1}};
  EXPECT_EQ(substitute_parameters("// $x here\nRETURN \"$x\", $x", p), "// $x here\nRETURN \"$x\", 1");
}

TEST(SubstituteTest, Rejections) {
  EXPECT_THROW(substitute_parameters("RETURN $x", nlohmann::json::object()), ParameterError);
  EXPECT_THROW(substitute_parameters("RETURN 1", {{"x", 1}}), ParameterError);
  EXPECT_THROW(substitute_parameters("RETURN $x", {{"x", nlohmann::json::array({1})}}), ParameterError);
  EXPECT_THROW(substitute_parameters("RETURN $x", {{"x", nullptr}}), ParameterError);
  EXPECT_NO_THROW(substitute_parameters("RETURN 1", nlohmann::json()));
}

TEST(ServiceTest, ParameterisedEqualsLiteral) {
  auto s = ready_service();
  const std::string experts = examples().find("experts")->statement;
  QueryRequest literal{experts};
  QueryRequest param{experts};
  auto at = param.statement.rfind("2013");
  param.statement.replace(at, 4, "$year");
  param.parameters = {{"year", 2013}};
  Response a = s->handle_query(literal);
  Response b = s->handle_query(param);
  ASSERT_EQ(a.status, 200) << a.body.dump();
  ASSERT_EQ(b.status, 200) << b.body.dump();
  EXPECT_EQ(a.body["rows"], b.body["rows"]);
  EXPECT_EQ(a.body["rows"].size(), 3u);

  param.parameters = nlohmann::json::object();
  EXPECT_EQ(s->handle_query(param).status, 422);
  param.parameters = {{"year", 2013}, {"extra", 1}};
  EXPECT_EQ(s->handle_query(param).status, 422);
}

TEST(ServiceTest, EnvelopeShape) {
  auto s = ready_service();
  Response r = s->handle_query({examples().find("authors-by-name")->statement});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(keys(r.body), (std::vector<std::string>{"columns", "rows", "stats"}));
  EXPECT_EQ(keys(r.body["stats"]), (std::vector<std::string>{"row_count", "elapsed_ms", "truncated"}));
  EXPECT_EQ(r.body["columns"], Json::array({"a"}));
  ASSERT_EQ(r.body["rows"].size(), 1u);
  const Json& node = r.body["rows"][0][0];
  EXPECT_EQ(keys(node), (std::vector<std::string>{"id", "label", "properties"}));
  EXPECT_EQ(node["label"], "Author");
  EXPECT_EQ(node["properties"]["author_id"], 1699545);
  EXPECT_EQ(node["properties"]["last"], "Ellis");
  EXPECT_EQ(r.body["stats"]["row_count"], 1);
  EXPECT_EQ(r.body["stats"]["truncated"], false);
}

TEST(ServiceTest, PathsAndEdges) {
  auto s = ready_service();
  Response r = s->handle_query({examples().find("shortest-path")->statement});
  ASSERT_EQ(r.status, 200);
  ASSERT_EQ(r.body["rows"].size(), 1u);
  const Json& p = r.body["rows"][0][0];
  EXPECT_EQ(p["edges"].size(), 4u);
  EXPECT_EQ(p["nodes"].size(), 5u);

  r = s->handle_query({"MATCH (a:Author)-[r:AUTHORS]->(p:Paper) RETURN r LIMIT 1"});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(keys(r.body["rows"][0][0]), (std::vector<std::string>{"id", "label", "source", "target", "properties"}));
}

TEST(ServiceTest, SyntaxErrorsCarryOffset) {
  auto s = ready_service();
  Response r = s->handle_query({"   "});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["offset"], 0);
  r = s->handle_query({"MATCH (a:Author RETURN a"});
  EXPECT_EQ(r.status, 400);
  EXPECT_TRUE(r.body["offset"].is_number_integer());
  EXPECT_TRUE(r.body["error"].is_string());
  r = s->handle_query({"MATCH (a:Author) RETURN b"});
  EXPECT_EQ(r.status, 400);
  EXPECT_TRUE(r.body.contains("offset"));
}

TEST(ServiceTest, RowCaps) {
  auto s = ready_service(ServiceConfig{3, 30000});
  QueryRequest req{"MATCH (a:Author) RETURN a.author_id ORDER BY a.author_id"};
  Response r = s->handle_query(req);
  EXPECT_EQ(r.status, 413);
  EXPECT_EQ(r.body["rows"].size(), 3u);
  EXPECT_EQ(r.body["stats"]["truncated"], true);

  req.max_rows = 100;  // cannot raise the server cap
  EXPECT_EQ(s->handle_query(req).body["rows"].size(), 3u);
  req.max_rows = 2;
  r = s->handle_query(req);
  EXPECT_EQ(r.status, 413);
  EXPECT_EQ(r.body["rows"], Json::parse("[[1699545],[1741101]]"));

  req.statement = "MATCH (a:Author) RETURN count(a)";
  EXPECT_EQ(s->handle_query(req).status, 200);
}

TEST(ServiceTest, Timeout) {
  PropertyGraph g;
  for (int i = 0; i < 400; ++i) g.add_node(NodeLabel::Author, {{"author_id", PropertyValue(std::int64_t{i})}});
  g.seal();
  QueryService s(ServiceConfig{10000, 50});
  s.set_graph(std::make_shared<const PropertyGraph>(std::move(g)));
  QueryRequest req{"MATCH (a:Author), (b:Author), (c:Author) RETURN count(a)"};
  Response r = s.handle_query(req);
  EXPECT_EQ(r.status, 408) << r.body.dump();
}

TEST(ServiceTest, Examples) {
  auto s = ready_service();
  Response list = s->list_examples();
  ASSERT_EQ(list.status, 200);
  EXPECT_EQ(list.body.size(), 11u);
  for (const auto& e : list.body)
    EXPECT_EQ(keys(e), (std::vector<std::string>{"slug", "title", "statement", "description"}));
  Response one = s->get_example("shortest-path");
  EXPECT_EQ(one.status, 200);
  EXPECT_NE(one.body["statement"].get<std::string>().find("shortestPath"), std::string::npos);
  EXPECT_EQ(s->get_example("nope").status, 404);
}

TEST(ServiceTest, EveryExampleRuns) {
  auto s = ready_service();
  const ExampleRegistry registry = examples();
  for (const auto& e : registry.list()) {
    Response r = s->handle_query({e.statement});
    EXPECT_EQ(r.status, 200) << e.slug << ": " << r.body.dump(-1, ' ', false, Json::error_handler_t::replace);
  }
}

TEST(ServiceTest, DuplicateSlugRejected) {
  auto doc = nlohmann::json::parse(R"([{"slug":"a","statement":"RETURN 1"},{"slug":"a","statement":"RETURN 2"}])");
  EXPECT_THROW(ExampleRegistry::parse(doc), Error);
}

TEST(ServiceTest, StatsAndHealth) {
  QueryService s({}, examples());
  EXPECT_EQ(s.health().status, 503);
  EXPECT_EQ(s.health().body["status"], "loading");
  EXPECT_EQ(s.stats().status, 503);
  EXPECT_EQ(s.handle_query({"RETURN 1"}).status, 503);

  s.set_graph(fixture_graph(), "2026-01-01T00:00:00Z");
  Response h = s.health();
  EXPECT_EQ(h.status, 200);
  EXPECT_EQ(h.body["node_count"], fixture_graph()->node_count());
  Response st = s.stats();
  ASSERT_EQ(st.status, 200);
  EXPECT_EQ(st.body["counts"], ingest::counts_json(testing::fixture_a().report.counts));
  EXPECT_EQ(st.body["total_nodes"], fixture_graph()->node_count());
  EXPECT_EQ(st.body["total_edges"], fixture_graph()->edge_count());
  EXPECT_EQ(st.body["built_at"], "2026-01-01T00:00:00Z");
  EXPECT_FALSE(st.body["indexes"].empty());
}

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    service_ = std::make_unique<QueryService>(ServiceConfig{}, examples());
    ServerOptions o;
    o.port = 0;
    server_ = std::make_unique<HttpServer>(*service_, o);
    port_ = server_->bind();
    thread_ = std::thread([this] { server_->serve(); });
    httplib::Client probe("127.0.0.1", port_);
    for (int i = 0; i < 200 && !probe.Get("/health"); ++i)
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  void TearDown() override {
    server_->stop();
    thread_.join();
  }
  httplib::Client client() { return httplib::Client("127.0.0.1", port_); }

  std::unique_ptr<QueryService> service_;
  std::unique_ptr<HttpServer> server_;
  std::thread thread_;
  int port_ = 0;
};

Json strip_elapsed(Json j) {
  if (j.contains("stats")) j["stats"].erase("elapsed_ms");
  return j;
}

TEST_F(HttpTest, Endpoints) {
  auto c = client();
  auto h = c.Get("/health");
  ASSERT_TRUE(h);
  EXPECT_EQ(h->status, 503);
  service_->set_graph(fixture_graph(), "2026-01-01T00:00:00Z");
  h = c.Get("/health");
  EXPECT_EQ(h->status, 200);
  EXPECT_EQ(h->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(h->get_header_value("Access-Control-Allow-Origin"), "*");

  auto q = c.Post("/query", R"({"statement":"MATCH (a:Author {last: $last}) RETURN a.first","parameters":{"last":"Ellis"}})",
                  "application/json");
  ASSERT_TRUE(q);
  EXPECT_EQ(q->status, 200);
  EXPECT_EQ(Json::parse(q->body)["rows"], Json::parse(R"([["Clarence"]])"));

  auto bad = c.Post("/query", "{not json", "application/json");
  EXPECT_EQ(bad->status, 400);
  auto syntax = c.Post("/query", R"({"statement":"MATCH (a RETURN a"})", "application/json");
  EXPECT_EQ(syntax->status, 400);
  EXPECT_TRUE(Json::parse(syntax->body)["offset"].is_number_integer());

  auto list = c.Get("/examples");
  EXPECT_EQ(list->status, 200);
  EXPECT_EQ(Json::parse(list->body).size(), 11u);
  EXPECT_EQ(c.Get("/examples/experts")->status, 200);
  EXPECT_EQ(c.Get("/examples/nope")->status, 404);

  auto st = c.Get("/stats");
  EXPECT_EQ(st->status, 200);
  EXPECT_EQ(Json::parse(st->body)["total_nodes"], fixture_graph()->node_count());

  auto missing = c.Get("/nowhere");
  EXPECT_EQ(missing->status, 404);
  EXPECT_EQ(Json::parse(missing->body)["error"], "not found");
  auto pre = c.Options("/query");
  EXPECT_EQ(pre->status, 204);
}

TEST_F(HttpTest, ConcurrentIdenticalQueries) {
  service_->set_graph(fixture_graph());
  const std::string body = Json{{"statement", examples().find("experts")->statement}}.dump();
  std::vector<std::string> bodies(16);
  std::vector<int> statuses(16);
  std::vector<std::thread> threads;
  for (int i = 0; i < 16; ++i) {
    threads.emplace_back([&, i] {
      auto c = client();
      auto r = c.Post("/query", body, "application/json");
      if (!r) return;
      statuses[i] = r->status;
      bodies[i] = strip_elapsed(Json::parse(r->body)).dump();
    });
  }
  for (auto& t : threads) t.join();
  for (int i = 0; i < 16; ++i) {
    EXPECT_EQ(statuses[i], 200);
    EXPECT_EQ(bodies[i], bodies[0]);
  }
}

}  // namespace
}  // namespace litgraph::service
