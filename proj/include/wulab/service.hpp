#pragma once

// HTTP facade over the core. Service::handle is transport-free so it can be
// tested directly; serve() binds it to an httplib server.

#include "wulab/json_io.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace wulab {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

class Service {
 public:
  HttpResponse handle(const HttpRequest& req);

  // Pure endpoint bodies, exposed for golden tests.
  static io::Json validate(const Drawing& d);
  static io::Json invariants(const Drawing& d, const std::optional<std::vector<Cycle>>& cycles);

 private:
  struct History {
    std::optional<Drawing> current;
    std::vector<std::optional<Drawing>> undo;
    std::vector<std::optional<Drawing>> redo;
  };
  struct Session {
    std::mutex mutex;
    std::map<std::string, History> drawings;
  };

  std::shared_ptr<Session> find_session(const std::string& id);
  HttpResponse route(const HttpRequest& req);
  HttpResponse finger_move(const io::Json& body);
  HttpResponse example(const std::string& family, const std::map<std::string, std::string>& query);
  HttpResponse session_op(const std::string& id, const std::vector<std::string>& rest, const HttpRequest& req);

  std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long next_session_ = 1;
};

/// Serves /api/* over HTTP. CORS responses allow `cors_origin`.
class HttpServer {
 public:
  HttpServer(Service& service, const std::string& cors_origin);
  ~HttpServer();
  /// Binds host:port, or a free port when port == 0. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(); requires a successful bind.
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving on host:port. Returns nonzero if the port cannot be bound.
int serve(Service& service, const std::string& host, int port, const std::string& cors_origin);

}  // namespace wulab
