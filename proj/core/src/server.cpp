#include <cstdio>
#include <stdexcept>

#include "aifp/service.hpp"
#include "httplib.h"

namespace aifp {

struct HttpServer::Impl {
  Impl(const Service& s, ServeOptions o) : service(s), options(std::move(o)) {}
  const Service& service;
  ServeOptions options;
  httplib::Server server;
};

HttpServer::HttpServer(const Service& service, ServeOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  auto& srv = impl_->server;
  const ServeOptions& o = impl_->options;

  if (!o.static_dir.empty() && !srv.set_mount_point("/", o.static_dir)) {
    throw std::invalid_argument("static directory not found: " + o.static_dir);
  }
  srv.set_default_headers({
      {"Access-Control-Allow-Origin", o.cors_origin},
      {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });

  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const HttpResponse out = impl_->service.handle(req.method, req.path, query, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  srv.Get(R"(/v1/.*)", forward);
  srv.Post(R"(/v1/.*)", forward);
  srv.Put(R"(/v1/.*)", forward);
  srv.Delete(R"(/v1/.*)", forward);
  srv.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  const ServeOptions& o = impl_->options;
  if (o.port == 0) return impl_->server.bind_to_any_port(o.host);
  return impl_->server.bind_to_port(o.host, o.port) ? o.port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

int serve(const Service& service, const ServeOptions& options) {
  HttpServer server(service, options);
  const int port = server.bind();
  if (port < 0) {
    std::fprintf(stderr, "cannot bind %s:%d\n", options.host.c_str(), options.port);
    return 1;
  }
  std::fprintf(stderr, "listening on http://%s:%d\n", options.host.c_str(), port);
  return server.listen() ? 0 : 1;
}

}  // namespace aifp
