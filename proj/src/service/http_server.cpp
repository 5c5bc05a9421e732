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

#include "httplib.h"
#include "litgraph/service/service.hpp"

namespace litgraph::service {

struct HttpServer::Impl {
  QueryService& service;
  ServerOptions options;
  httplib::Server server;
  int port = -1;

  Impl(QueryService& s, ServerOptions o) : service(s), options(std::move(o)) {}

  void send(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump() + "\n", "application/json");
  }

  void routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", options.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Post("/query", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.handle_query_body(req.body));
    });
    server.Get("/examples", [this](const httplib::Request&, httplib::Response& res) {
      send(res, service.list_examples());
    });
    server.Get(R"(/examples/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.get_example(req.matches[1].str()));
    });
    server.Get("/stats", [this](const httplib::Request&, httplib::Response& res) { send(res, service.stats()); });
    server.Get("/health", [this](const httplib::Request&, httplib::Response& res) { send(res, service.health()); });
    if (options.static_dir) {
      if (!server.set_mount_point("/app", options.static_dir->string()))
        throw Error("cannot serve " + options.static_dir->string() + " under /app");
    }
    server.set_error_handler([this](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return;
      Json j;
      j["error"] = res.status == 404 ? "not found" : "request failed";
      res.set_content(j.dump() + "\n", "application/json");
    });
  }
};

HttpServer::HttpServer(QueryService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  impl_->routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  const auto& o = impl_->options;
  if (o.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(o.host);
  } else if (impl_->server.bind_to_port(o.host, o.port)) {
    impl_->port = o.port;
  }
  if (impl_->port <= 0) throw Error("cannot bind " + o.host + ":" + std::to_string(o.port));
  return impl_->port;
}

void HttpServer::serve() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace litgraph::service
