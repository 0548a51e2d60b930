#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "aifp/io.hpp"
#include "aifp/projection.hpp"

namespace aifp {

struct HttpResponse {
  int status{200};
  std::string body;
  std::string content_type{"application/json"};
};

/**
 * @brief Stateless JSON facade over the model.
 *
 * Holds only the data bundle loaded at start-up; `handle` is const and safe
 * to call from any number of threads. Bodies match the CLI JSON output for
 * the same inputs.
 *
 * Routes: GET /v1/clusters, GET /v1/scenarios, POST /v1/portfolio,
 * POST /v1/project, POST /v1/sweep, POST /v1/offset, GET /v1/score?kwh=.
 */
class Service {
 public:
  explicit Service(ModelInputs inputs);

  HttpResponse handle(std::string_view method, std::string_view path,
                      const std::map<std::string, std::string>& query, std::string_view body) const;

  const ModelInputs& inputs() const { return inputs_; }

 private:
  HttpResponse route(std::string_view method, std::string_view path, const std::map<std::string, std::string>& query,
                     std::string_view body) const;

  ModelInputs inputs_;
  Projector projector_;
};

struct ServeOptions {
  std::string host{"127.0.0.1"};
  int port{8080};
  std::string static_dir;          // served under / when set
  std::string cors_origin{"*"};
};

/// HTTP/1.1 binding of a Service, with CORS headers and optional static files.
class HttpServer {
 public:
  HttpServer(const Service& service, ServeOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Bind the listening socket; port 0 picks a free port. Returns the port or -1.
  int bind();
  /// Serve until stop(). Requires a successful bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Bind and serve until the process ends. Returns non-zero on bind failure.
int serve(const Service& service, const ServeOptions& options);

}  // namespace aifp
