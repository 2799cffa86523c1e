#include "wulab/service.hpp"

#include <httplib.h>

namespace wulab {

using io::Json;

namespace {

HttpResponse reply(int status, const Json& body) { return {status, body.dump()}; }

HttpResponse error(int status, const std::string& message) {
  return reply(status, Json{{"error", message}, {"witness", nullptr}});
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < path.size()) {
    std::size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) out.push_back(path.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

Json parse_body(const std::string& body) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw io::SchemaError(std::string("body is not JSON: ") + e.what());
  }
}

/// {"drawing": D, ...} or D itself.
const Json& drawing_member(const Json& body) {
  if (body.is_object() && body.contains("drawing")) return body["drawing"];
  return body;
}

long parse_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::logic_error&) {
    throw io::SchemaError(what + " must be an integer");
  }
  if (used != text.size()) throw io::SchemaError(what + " must be an integer");
  return v;
}

bool flag(const Json& j, const char* key, bool fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j[key].is_boolean()) throw io::SchemaError(std::string(key) + " must be a boolean");
  return j[key].get<bool>();
}

std::size_t vertex_index(const Graph& g, const Json& j) {
  if (!j.is_string()) throw io::SchemaError("vertex labels are strings");
  auto v = g.find(parse_vertex(j.get<std::string>()));
  if (!v) throw io::SchemaError("unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

}  // namespace

Json Service::validate(const Drawing& d) {
  return Json{{"almost_embedding", io::to_json(d, validate_almost_embedding(d))},
              {"general_position", io::to_json(d, validate_general_position(d))}};
}

Json Service::invariants(const Drawing& d, const std::optional<std::vector<Cycle>>& cycles) {
  return Json{{"profile", io::to_json(d, invariant_profile(d, cycles))},
              {"wu", io::wu_to_json(applicable_wu_numbers(d))},
              {"theorems", io::to_json(check_theorems(d))}};
}

HttpResponse Service::handle(const HttpRequest& req) {
  try {
    return route(req);
  } catch (const io::SchemaError& e) {
    return error(400, e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  } catch (const std::out_of_range& e) {
    return error(400, e.what());
  } catch (const PreconditionError& e) {
    return reply(422, io::error_to_json(e));
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

HttpResponse Service::route(const HttpRequest& req) {
  const auto parts = split_path(req.path);
  if (parts.size() < 2 || parts[0] != "api") return error(404, "no such endpoint");
  const std::string& head = parts[1];
  struct WrongMethod {};
  auto only = [&](const char* method) {
    if (req.method != method) throw WrongMethod{};
  };
  try {
    if (head == "validate" && parts.size() == 2) {
      only("POST");
      return reply(200, validate(io::drawing_from_json(drawing_member(parse_body(req.body)))));
    }
    if (head == "invariants" && parts.size() == 2) {
      only("POST");
      const Json body = parse_body(req.body);
      const Drawing d = io::drawing_from_json(drawing_member(body));
      return reply(200, invariants(d, io::cycles_from_json(d.graph(), body)));
    }
    if (head == "finger-move" && parts.size() == 2) {
      only("POST");
      return finger_move(parse_body(req.body));
    }
    if (head == "examples" && parts.size() == 3) {
      only("GET");
      return example(parts[2], req.query);
    }
    if (head == "session") {
      if (parts.size() == 2) {
        only("POST");
        std::lock_guard lock(sessions_mutex_);
        const std::string id = std::to_string(next_session_++);
        sessions_[id] = std::make_shared<Session>();
        return reply(201, Json{{"id", id}});
      }
      return session_op(parts[2], std::vector<std::string>(parts.begin() + 3, parts.end()), req);
    }
  } catch (const WrongMethod&) {
    return error(405, "method not allowed");
  }
  return error(404, "no such endpoint");
}

HttpResponse Service::finger_move(const Json& body) {
  if (!body.is_object() || !body.contains("drawing")) throw io::SchemaError("missing 'drawing'");
  const Drawing d = io::drawing_from_json(body["drawing"]);
  const Graph& g = d.graph();
  FingerMoveOptions opts;
  opts.allow_nonadjacent_crossings = flag(body, "allow_nonadjacent_crossings", false);
  FingerMoveSpec spec;
  if (body.contains("move")) {
    spec = io::finger_move_from_json(d, body["move"]);
  } else if (body.contains("route")) {
    const Json& r = body["route"];
    if (!r.is_object() || !r.contains("edge") || !r["edge"].is_string()) throw io::SchemaError("route needs 'edge'");
    const std::size_t e = io::edge_from_key(g, r["edge"].get<std::string>());
    MoveType type = MoveType::First;
    if (r.contains("type")) {
      if (!r["type"].is_string()) throw io::SchemaError("type must be a string");
      type = parse_move_type(r["type"].get<std::string>());
    }
    RouteOptions route_opts;
    route_opts.preserve_almost_embedding = flag(r, "preserve_almost_embedding", true);
    if (r.contains("vertex")) {
      spec = guide_loop_around_vertex(d, e, vertex_index(g, r["vertex"]), type, route_opts);
    } else if (r.contains("vertices")) {
      if (!r["vertices"].is_array()) throw io::SchemaError("vertices must be an array");
      std::vector<std::size_t> vs;
      for (const auto& v : r["vertices"]) vs.push_back(vertex_index(g, v));
      spec = guide_loop_around_vertices(d, e, vs, type, route_opts);
    } else if (r.contains("segment")) {
      if (!r["segment"].is_string()) throw io::SchemaError("segment must be an edge key");
      spec = guide_loop_around_segment(d, e, io::edge_from_key(g, r["segment"].get<std::string>()), type, route_opts);
    } else {
      throw io::SchemaError("route needs 'vertex', 'vertices' or 'segment'");
    }
  } else {
    throw io::SchemaError("finger move needs 'move' or 'route'");
  }
  const Drawing out = wulab::finger_move(d, spec, opts);
  return reply(200, Json{{"drawing", io::drawing_to_json(out)}, {"move", io::finger_move_to_json(d, spec)}});
}

HttpResponse Service::example(const std::string& family, const std::map<std::string, std::string>& query) {
  const auto bases = base_drawing_names();
  if (std::find(bases.begin(), bases.end(), family) != bases.end()) {
    return reply(200, io::drawing_to_json(base_drawing(family)));
  }
  const auto families = family_names();
  if (std::find(families.begin(), families.end(), family) == families.end()) {
    return error(404, "unknown example family '" + family + "'");
  }
  ExampleSpec spec{family, {}};
  const std::size_t arity = family_arity(family);
  for (std::size_t i = 0; i < arity; ++i) {
    const std::string key = arity == 1 ? "n" : "n" + std::to_string(i + 1);
    auto it = query.find(key);
    if (it == query.end()) throw io::SchemaError("missing query parameter '" + key + "'");
    spec.params.push_back(parse_long(it->second, key));
  }
  return reply(200, io::drawing_to_json(generate(spec)));
}

std::shared_ptr<Service::Session> Service::find_session(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpResponse Service::session_op(const std::string& id, const std::vector<std::string>& rest, const HttpRequest& req) {
  auto session = find_session(id);
  if (!session) return error(404, "unknown session '" + id + "'");
  auto state = [](const std::string& name, const std::optional<Drawing>& d) {
    return Json{{"name", name}, {"drawing", d ? io::drawing_to_json(*d) : Json(nullptr)}};
  };
  if (rest.size() == 2 && rest[0] == "drawing") {
    const std::string& name = rest[1];
    if (req.method == "PUT") {
      const Drawing d = io::drawing_from_json(drawing_member(parse_body(req.body)));
      std::lock_guard lock(session->mutex);
      History& h = session->drawings[name];
      h.undo.push_back(h.current);
      h.current = d;
      h.redo.clear();
      return reply(200, state(name, h.current));
    }
    if (req.method == "GET") {
      std::lock_guard lock(session->mutex);
      auto it = session->drawings.find(name);
      if (it == session->drawings.end() || !it->second.current) return error(404, "no drawing '" + name + "'");
      return reply(200, state(name, it->second.current));
    }
    return error(405, "method not allowed");
  }
  if (rest.size() == 1 && (rest[0] == "undo" || rest[0] == "redo")) {
    if (req.method != "POST") return error(405, "method not allowed");
    std::string name;
    if (auto it = req.query.find("name"); it != req.query.end()) {
      name = it->second;
    } else if (!req.body.empty()) {
      const Json body = parse_body(req.body);
      if (!body.is_object() || !body.contains("name") || !body["name"].is_string()) {
        throw io::SchemaError("undo/redo body is {\"name\": ...}");
      }
      name = body["name"].get<std::string>();
    }
    std::lock_guard lock(session->mutex);
    if (name.empty()) {
      if (session->drawings.size() != 1) throw io::SchemaError("name the drawing to undo/redo");
      name = session->drawings.begin()->first;
    }
    auto it = session->drawings.find(name);
    if (it == session->drawings.end()) return error(404, "no drawing '" + name + "'");
    History& h = it->second;
    auto& from = rest[0] == "undo" ? h.undo : h.redo;
    auto& to = rest[0] == "undo" ? h.redo : h.undo;
    if (from.empty()) return error(409, "nothing to " + rest[0]);
    to.push_back(h.current);
    h.current = from.back();
    from.pop_back();
    return reply(200, state(name, h.current));
  }
  return error(404, "no such endpoint");
}

struct HttpServer::Impl {
  httplib::Server srv;
};

HttpServer::HttpServer(Service& service, const std::string& cors_origin) : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->srv;
  srv.set_default_headers({{"Access-Control-Allow-Origin", cors_origin},
                           {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r{req.method, req.path, {}, req.body};
    for (const auto& [k, v] : req.params) r.query.emplace(k, v);
    const HttpResponse out = service.handle(r);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  const char* pattern = R"(/api/.*)";
  srv.Get(pattern, handler);
  srv.Post(pattern, handler);
  srv.Put(pattern, handler);
  srv.Options(pattern, [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->srv.bind_to_any_port(host);
  return impl_->srv.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::run() { return impl_->srv.listen_after_bind(); }

void HttpServer::stop() { impl_->srv.stop(); }

int serve(Service& service, const std::string& host, int port, const std::string& cors_origin) {
  HttpServer server(service, cors_origin);
  if (server.bind(host, port) < 0) return 1;
  return server.run() ? 0 : 1;
}

}  // namespace wulab
