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

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "litgraph/cypher/executor.hpp"
#include "litgraph/errors.hpp"
#include "litgraph/ingest/ingest.hpp"
#include "litgraph/ingest/synth.hpp"
#include "litgraph/metrics/metrics.hpp"
#include "litgraph/resolver/resolver.hpp"
#include "litgraph/service/service.hpp"

namespace fs = std::filesystem;
using namespace litgraph;

namespace {

fs::path manifest_path(const fs::path& graph) {
  return fs::is_directory(graph) ? graph / "manifest.json" : graph;
}

ingest::ImportResult load_graph(const fs::path& graph, std::size_t parallelism) {
  return ingest::import_bulk(ingest::load_manifest(manifest_path(graph)), parallelism);
}

void print(const cypher::ResultTable& table, const PropertyGraph& g, bool json) {
  if (json) {
    std::cout << service::result_to_json(table, g, 0.0).dump(2) << "\n";
  } else {
    std::cout << cypher::format_table(table, g);
  }
}

// "2705113" is an author_id; anything else is "First Last".
metrics::AuthorRef author_ref(const std::string& text) {
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos)
    return metrics::AuthorRef::by_id(std::stoll(text));
  auto space = text.rfind(' ');
  if (space == std::string::npos) throw Error("author \"" + text + "\" is neither an id nor \"First Last\"");
  return metrics::AuthorRef::by_name(text.substr(0, space), text.substr(space + 1));
}

service::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"litgraph: embedded property graph for scholarly data"};
  app.require_subcommand(1);

  fs::path graph_dir;
  std::size_t parallelism = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;

  // build
  auto* build = app.add_subcommand("build", "Import a CSV manifest and report counts");
  fs::path manifest, report_out;
  build->add_option("--manifest", manifest, "Manifest JSON")->required()->check(CLI::ExistingFile);
  build->add_option("--parallelism", parallelism, "Shard parser threads")->check(CLI::PositiveNumber);
  build->add_option("--out-report", report_out, "Write the import report here");

  // serve
  auto* serve = app.add_subcommand("serve", "Serve the HTTP query API");
  service::ServiceConfig service_config;
  service::ServerOptions server_options;
  fs::path examples_file;
  std::string static_dir;
  serve->add_option("--graph", graph_dir, "Manifest file or directory holding manifest.json")->required();
  serve->add_option("--host", server_options.host, "Bind address");
  serve->add_option("--port", server_options.port, "Port (0 picks one)");
  serve->add_option("--max-rows", service_config.max_rows, "Server row cap")->check(CLI::PositiveNumber);
  serve->add_option("--timeout-ms", service_config.timeout_ms, "Server time budget")->check(CLI::PositiveNumber);
  serve->add_option("--examples", examples_file, "Examples JSON")->check(CLI::ExistingFile);
  serve->add_option("--static", static_dir, "Directory served under /app")->check(CLI::ExistingDirectory);
  serve->add_option("--parallelism", parallelism, "Import threads")->check(CLI::PositiveNumber);

  // query
  auto* query = app.add_subcommand("query", "Run one query");
  std::string statement;
  std::size_t max_rows = 10000;
  std::int64_t timeout_ms = 30000;
  query->add_option("--graph", graph_dir, "Manifest file or directory")->required();
  query->add_option("statement", statement, "Query text, or - for stdin")->required();
  query->add_option("--max-rows", max_rows)->check(CLI::PositiveNumber);
  query->add_option("--timeout-ms", timeout_ms)->check(CLI::PositiveNumber);
  query->add_flag("--json", json);

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Citation metrics");
  metrics_cmd->require_subcommand(1);
  std::int64_t author_id = 0;
  std::string paper_id;
  auto* hindex = metrics_cmd->add_subcommand("h-index", "h-index and i10-index of an author");
  hindex->add_option("--graph", graph_dir)->required();
  hindex->add_option("--author-id", author_id)->required();
  hindex->add_flag("--json", json);
  auto* cd = metrics_cmd->add_subcommand("cd", "CD index of a paper");
  cd->add_option("--graph", graph_dir)->required();
  cd->add_option("--paper-id", paper_id)->required();
  cd->add_flag("--json", json);

  // experts
  auto* experts = app.add_subcommand("experts", "Authors ranked by papers mentioning an entity");
  std::string entity;
  std::optional<std::int64_t> since;
  std::optional<std::size_t> limit;
  experts->add_option("--graph", graph_dir)->required();
  experts->add_option("--entity", entity)->required();
  experts->add_option("--since", since, "Only papers with year > SINCE");
  experts->add_option("--limit", limit);
  experts->add_flag("--json", json);

  // path
  auto* path = app.add_subcommand("path", "Shortest co-authorship path");
  std::string from_author, to_author;
  std::int64_t max_hops = 6;
  path->add_option("--graph", graph_dir)->required();
  path->add_option("--from-author", from_author, "author_id or \"First Last\"")->required();
  path->add_option("--to-author", to_author, "author_id or \"First Last\"")->required();
  path->add_option("--max-hops", max_hops, "Most AUTHORS edges on the path");
  path->add_flag("--json", json);

  // resolve
  auto* resolve = app.add_subcommand("resolve", "Map a DOI or arXiv id to a paper id");
  std::string external;
  bool offline = false;
  fs::path cache_file;
  resolve->add_option("id", external, "doi:..., arxiv:..., or a bare id")->required();
  resolve->add_option("--graph", graph_dir, "Also look the paper up in this graph");
  resolve->add_option("--cache", cache_file, "Resolution cache file");
  resolve->add_flag("--offline", offline, "Use the cache only");
  resolve->add_flag("--json", json);

  // synth
  auto* synth = app.add_subcommand("synth", "Write a synthetic CSV corpus");
  fs::path synth_out;
  ingest::SynthOptions synth_options;
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_option("--scale", synth_options.scale, "1.0 is 100K nodes and 1M edges");
  synth->add_option("--seed", synth_options.seed);
  synth->add_option("--shards", synth_options.shards);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      auto result = ingest::import_bulk(ingest::load_manifest(manifest), parallelism);
      std::string report = ingest::to_json(result.report).dump(2) + "\n";
      if (report_out.empty()) {
        std::cout << report;
      } else {
        std::ofstream(report_out) << report;
        std::cerr << result.report.accepted << " rows accepted, " << result.report.rejected
                  << " rejected; report written to " << report_out.string() << "\n";
      }
      return 0;
    }

    if (*serve) {
      service::ExampleRegistry registry;
      if (!examples_file.empty()) registry = service::ExampleRegistry::load(examples_file);
      service::QueryService svc(service_config, std::move(registry));
      if (!static_dir.empty()) server_options.static_dir = fs::path(static_dir);
      service::HttpServer server(svc, server_options);
      int port = server.bind();
      std::cerr << "listening on " << server_options.host << ":" << port << "\n";
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::thread loader([&] {
        try {
          auto result = load_graph(graph_dir, parallelism);
          std::string built_at = result.report.built_at;
          svc.set_graph(std::make_shared<const PropertyGraph>(std::move(result.graph)), built_at);
          std::cerr << "graph ready\n";
        } catch (const std::exception& e) {
          std::cerr << "graph load failed: " << e.what() << "\n";
          server.stop();
        }
      });
      server.serve();
      loader.join();
      g_server = nullptr;
      return svc.ready() ? 0 : 1;
    }

    if (*resolve) {
      resolver::ResolverConfig config = resolver::ResolverConfig::from_env();
      config.offline = offline;
      if (!cache_file.empty()) config.cache_file = cache_file;
      resolver::Resolver r(config);
      auto id = resolver::parse_external_id(external);
      cypher::ResultTable t;
      t.columns = {"kind", "id", "paper_id"};
      std::string pid = r.resolve(id);
      t.rows.push_back({PropertyValue(std::string(to_string(id.kind))), PropertyValue(id.value), PropertyValue(pid)});
      PropertyGraph empty;
      if (!graph_dir.empty()) {
        auto result = load_graph(graph_dir, parallelism);
        t.columns.push_back("node");
        auto node = r.find_paper(result.graph, id);
        t.rows[0].push_back(node ? cypher::Value(*node) : cypher::Value(PropertyValue()));
        print(t, result.graph, json);
      } else {
        empty.seal();
        print(t, empty, json);
      }
      return 0;
    }

    if (*synth) {
      auto corpus = ingest::write_synthetic_corpus(synth_out, synth_options);
      std::cout << corpus.manifest.string() << "\n"
                << ingest::counts_json(corpus.expected).dump(2) << "\n";
      return 0;
    }

    auto loaded = load_graph(graph_dir, parallelism);
    const PropertyGraph& g = loaded.graph;
    cypher::ResultTable t;

    if (*query) {
      if (statement == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        statement = ss.str();
      }
      cypher::ExecutionLimits limits;
      limits.max_rows = max_rows;
      limits.timeout = std::chrono::milliseconds(timeout_ms);
      limits.truncate_on_row_limit = true;
      t = cypher::execute(statement, g, limits);
      print(t, g, json);
      if (t.truncated) std::cerr << "result truncated at " << max_rows << " rows\n";
      return 0;
    }

    if (*hindex) {
      NodeId a = metrics::find_author(g, metrics::AuthorRef::by_id(author_id));
      t.columns = {"author", "papers", "h_index", "i10_index"};
      t.rows.push_back({cypher::Value(a),
                        PropertyValue(static_cast<std::int64_t>(metrics::papers_of(g, a).size())),
                        PropertyValue(metrics::h_index(g, a)), PropertyValue(metrics::i10_index(g, a))});
    } else if (*cd) {
      NodeId p = metrics::find_paper_by_id(g, paper_id);
      t.columns = {"paper", "citations", "cd_index"};
      t.rows.push_back({cypher::Value(p), PropertyValue(metrics::citation_count(g, p)),
                        PropertyValue(metrics::cd_index(g, p))});
    } else if (*experts) {
      t.columns = {"author", "papers"};
      for (const auto& e : metrics::find_experts(g, entity, since, limit))
        t.rows.push_back({cypher::Value(e.author), PropertyValue(e.paper_count)});
    } else if (*path) {
      auto p = metrics::coauthor_shortest_path(g, author_ref(from_author), author_ref(to_author), max_hops);
      if (!p) throw NoPath("no co-authorship path within " + std::to_string(max_hops) + " AUTHORS edges");
      t.columns = {"path", "length"};
      t.rows.push_back({cypher::Value(*p), PropertyValue(static_cast<std::int64_t>(p->length()))});
    }
    print(t, g, json);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
