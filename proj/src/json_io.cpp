#include "wulab/json_io.hpp"

namespace wulab::io {

namespace {

template <class F>
auto schema(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Json::exception& e) {
    throw SchemaError(e.what());
  } catch (const std::logic_error& e) {
    throw SchemaError(e.what());
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SchemaError(what);
}

const Json& member(const Json& j, const char* key) {
  require(j.is_object(), std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing '") + key + "'");
  return *it;
}

std::string scalar_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw SchemaError("expected a string or an integer");
}

std::string vertex_label(const Graph& g, std::size_t v) { return g.vertices()[v].label(); }

Json labels(const Graph& g, const std::vector<std::size_t>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(vertex_label(g, v));
  return out;
}

Json edge_keys(const Graph& g, const std::vector<std::size_t>& es) {
  Json out = Json::array();
  for (auto e : es) out.push_back(edge_key(g, e));
  return out;
}

Json optional_witness(const std::optional<Point2>& w) { return w ? point_to_json(*w) : Json(nullptr); }

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  return schema([&] { return parse_rational(scalar_string(j)); });
}

Json point_to_json(const Point2& p) { return Json::array({rational_to_json(p.x), rational_to_json(p.y)}); }

Point2 point_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2, "a point is an array [x, y]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

namespace {

std::vector<Point2> points_from_json(const Json& j) {
  require(j.is_array(), "a polyline is an array of points");
  std::vector<Point2> pts;
  for (const auto& p : j) pts.push_back(point_from_json(p));
  return pts;
}

}  // namespace

Json polyline_to_json(const Polyline& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back(point_to_json(v));
  return out;
}

Polyline polyline_from_json(const Json& j) {
  auto pts = points_from_json(j);
  return schema([&] { return Polyline(std::move(pts)); });
}

Json closed_polyline_to_json(const ClosedPolyline& p) {
  Json pts = Json::array();
  for (const auto& v : p.vertices()) pts.push_back(point_to_json(v));
  return Json{{"closed", true}, {"points", pts}};
}

ClosedPolyline closed_polyline_from_json(const Json& j) {
  const Json& closed = member(j, "closed");
  require(closed.is_boolean() && closed.get<bool>(), "closed polyline needs \"closed\": true");
  auto pts = points_from_json(member(j, "points"));
  return schema([&] { return ClosedPolyline(std::move(pts)); });
}

std::string edge_key(const Graph& g, std::size_t e) {
  const Edge& edge = g.edges().at(e);
  return vertex_label(g, edge.u) + "-" + vertex_label(g, edge.v);
}

std::size_t edge_from_key(const Graph& g, std::string_view key) {
  return schema([&] {
    auto dash = key.find('-');
    require(dash != std::string_view::npos, "edge key '" + std::string(key) + "' is not of the form u-v");
    auto a = g.find(parse_vertex(key.substr(0, dash)));
    auto b = g.find(parse_vertex(key.substr(dash + 1)));
    require(a && b, "edge key '" + std::string(key) + "' names an unknown vertex");
    auto e = g.edge_index(*a, *b);
    require(e.has_value(), "no edge '" + std::string(key) + "' in the graph");
    return *e;
  });
}

Json graph_to_json(const Graph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices()) vs.push_back(v.label());
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back(Json::array({vertex_label(g, e.u), vertex_label(g, e.v)}));
  return Json{{"vertices", vs}, {"edges", es}};
}

Graph graph_from_json(const Json& j) {
  return schema([&] {
    require(j.is_object(), "graph must be an object");
    if (j.contains("kind")) {
      std::vector<std::pair<std::string, std::string>> params;
      if (j.contains("params")) {
        require(j["params"].is_object(), "graph params must be an object");
        for (const auto& [k, v] : j["params"].items()) params.emplace_back(k, scalar_string(v));
      }
      return builtin_graph(member(j, "kind").get<std::string>(), params);
    }
    std::vector<Vertex> vs;
    for (const auto& v : member(j, "vertices")) vs.push_back(parse_vertex(scalar_string(v)));
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : member(j, "edges")) {
      require(e.is_array() && e.size() == 2, "a graph edge is a pair [u, v]");
      es.emplace_back(parse_vertex(scalar_string(e[0])), parse_vertex(scalar_string(e[1])));
    }
    return Graph(std::move(vs), es);
  });
}

Json drawing_to_json(const Drawing& d) {
  const Graph& g = d.graph();
  Json placement = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) placement[vertex_label(g, v)] = point_to_json(d.placement(v));
  Json edges = Json::object();
  for (std::size_t e = 0; e < g.edges().size(); ++e) edges[edge_key(g, e)] = polyline_to_json(d.edge_line(e));
  return Json{{"graph", graph_to_json(g)}, {"placement", placement}, {"edges", edges}};
}

Drawing drawing_from_json(const Json& j) {
  Graph g = graph_from_json(member(j, "graph"));
  const Json& pj = member(j, "placement");
  require(pj.is_object(), "placement must be an object");
  std::vector<std::optional<Point2>> at(g.vertex_count());
  for (const auto& [k, v] : pj.items()) {
    auto idx = schema([&] { return g.find(parse_vertex(k)); });
    require(idx.has_value(), "placement names unknown vertex '" + k + "'");
    require(!at[*idx], "vertex '" + k + "' placed twice");
    at[*idx] = point_from_json(v);
  }
  std::vector<Point2> placement;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    require(at[v].has_value(), "vertex '" + vertex_label(g, v) + "' has no placement");
    placement.push_back(*at[v]);
  }
  const Json& ej = member(j, "edges");
  require(ej.is_object(), "edges must be an object");
  std::vector<std::optional<Polyline>> lines(g.edges().size());
  for (const auto& [k, v] : ej.items()) {
    std::size_t e = edge_from_key(g, k);
    require(!lines[e], "edge '" + k + "' given twice");
    lines[e] = polyline_from_json(v);
  }
  std::vector<Polyline> edge_lines;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    require(lines[e].has_value(), "edge '" + edge_key(g, e) + "' has no polyline");
    edge_lines.push_back(*lines[e]);
  }
  return schema([&] { return Drawing(std::move(g), std::move(placement), std::move(edge_lines)); });
}

Json to_json(const Drawing& d, const ViolationReport& r) {
  const Graph& g = d.graph();
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    if (auto* x = std::get_if<EdgesIntersect>(&v)) {
      Json w;
      if (auto* p = std::get_if<Point2>(&x->witness)) {
        w = Json{{"point", point_to_json(*p)}};
      } else {
        const auto& s = std::get<Segment>(x->witness);
        w = Json{{"segment", Json::array({point_to_json(s.a()), point_to_json(s.b())})}};
      }
      vs.push_back(Json{{"kind", "edges_intersect"}, {"edges", edge_keys(g, {x->e, x->f})}, {"witness", w}});
    } else if (auto* x = std::get_if<VertexOnEdge>(&v)) {
      vs.push_back(Json{{"kind", "vertex_on_edge"},
                        {"vertex", vertex_label(g, x->vertex)},
                        {"edge", edge_key(g, x->edge)},
                        {"witness", point_to_json(x->witness)}});
    } else {
      const auto& c = std::get<CoincidentVertices>(v);
      vs.push_back(Json{
          {"kind", "coincident_vertices"}, {"vertices", labels(g, {c.a, c.b})}, {"witness", point_to_json(c.witness)}});
    }
  }
  return Json{{"almost_embedding", r.ok()}, {"violations", vs}};
}

Json to_json(const Drawing& d, const GeneralPositionReport& r) {
  const Graph& g = d.graph();
  Json issues = Json::array();
  for (const auto& i : r.issues) {
    issues.push_back(Json{{"kind", to_string(i.kind)},
                          {"edges", edge_keys(g, i.edges)},
                          {"vertices", labels(g, i.vertices)},
                          {"witness", point_to_json(i.witness)}});
  }
  Json crossings = Json::array();
  for (const auto& c : r.crossings) {
    crossings.push_back(Json{{"edges", edge_keys(g, {c.e, c.f})}, {"at", point_to_json(c.at)}});
  }
  return Json{{"general_position", r.ok()}, {"issues", issues}, {"crossings", crossings}};
}

Json to_json(const Drawing& d, const InvariantProfile& p) { return to_json(d.graph(), p); }

Json to_json(const Graph& g, const InvariantProfile& p) {
  Json cycles = Json::array();
  for (const auto& c : p.cycles) cycles.push_back(c.label(g));
  Json entries = Json::array();
  for (const auto& e : p.entries) {
    entries.push_back(Json{{"cycle", e.cycle.label(g)}, {"vertex", vertex_label(g, e.vertex)}, {"winding", e.winding}});
  }
  return Json{{"cycles", cycles}, {"truncated", p.truncated}, {"entries", entries}};
}

Json wu_to_json(const std::vector<std::pair<std::string, long>>& wu) {
  Json out = Json::object();
  for (const auto& [k, v] : wu) out[k] = v;
  return out;
}

Json to_json(const TheoremReport& r) {
  Json st = Json::array();
  for (const auto& s : r.statements) {
    Json terms = Json::object();
    for (const auto& [k, v] : s.terms) terms[k] = v;
    st.push_back(Json{{"id", s.id},
                      {"quantity", s.quantity},
                      {"value", s.value},
                      {"expected", s.expected},
                      {"pass", s.pass},
                      {"terms", terms}});
  }
  return Json{{"family", r.family},
              {"supported", r.supported},
              {"almost_embedding", r.almost_embedding},
              {"applicable", r.applicable()},
              {"note", r.note},
              {"statements", st}};
}

Json finger_move_to_json(const Drawing& d, const FingerMoveSpec& s) {
  Json loop = Json::array();
  for (const auto& p : s.loop.vertices()) loop.push_back(point_to_json(p));
  return Json{{"edge", edge_key(d.graph(), s.edge)},
              {"segment", s.segment},
              {"t_in", rational_to_json(s.t_in)},
              {"t_out", rational_to_json(s.t_out)},
              {"loop", loop},
              {"type", to_string(s.type)}};
}

FingerMoveSpec finger_move_from_json(const Drawing& d, const Json& j) {
  FingerMoveSpec s;
  s.edge = edge_from_key(d.graph(), schema([&] { return member(j, "edge").get<std::string>(); }));
  const Json& seg = member(j, "segment");
  require(seg.is_number_unsigned(), "segment must be a non-negative integer");
  s.segment = seg.get<std::size_t>();
  s.t_in = rational_from_json(member(j, "t_in"));
  s.t_out = rational_from_json(member(j, "t_out"));
  auto pts = points_from_json(member(j, "loop"));
  s.loop = schema([&] { return ClosedPolyline(std::move(pts)); });
  s.type = schema([&] { return parse_move_type(member(j, "type").get<std::string>()); });
  return s;
}

Json point3_to_json(const Point3& p) {
  return Json::array({rational_to_json(p.x), rational_to_json(p.y), rational_to_json(p.z)});
}

Point3 point3_from_json(const Json& j) {
  require(j.is_array() && j.size() == 3, "a 3d point is an array [x, y, z]");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

Json six_config_to_json(const SixConfig& c) {
  Json pts = Json::object();
  for (int i = 0; i < 6; ++i) pts[std::to_string(i + 1)] = point3_to_json(c.points[i]);
  return Json{{"points", pts}};
}

SixConfig six_config_from_json(const Json& j) {
  const Json& pts = member(j, "points");
  require(pts.is_object() && pts.size() == 6, "points must map the labels 1..6");
  SixConfig c;
  for (int i = 0; i < 6; ++i) c.points[i] = point3_from_json(member(pts, std::to_string(i + 1).c_str()));
  return c;
}

Json to_json(const CgsReport& r) {
  Json sp = Json::array();
  for (const auto& s : r.splittings) sp.push_back(Json{{"splitting", s.label()}, {"linking", s.linking}});
  return Json{{"splittings", sp}, {"linked_pair_exists", r.linked_pair_exists}, {"odd_pairs", r.odd_pairs}};
}

Json to_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& [i, detail] : r.summary.failures) failures.push_back(Json{{"case", i}, {"detail", detail}});
  Json obs = Json::object();
  for (const auto& [k, v] : r.observations) obs[k] = v;
  return Json{{"check", r.check},
              {"seed", r.seed},
              {"fixtures", r.fixtures},
              {"trials", r.trials},
              {"cases", r.summary.trials},
              {"passed", r.summary.passed},
              {"pass", r.pass()},
              {"failures", failures},
              {"observations", obs}};
}

Json to_json(const ExplorationResult& r) {
  const Graph g = base_drawing(exploration_base(r.graph)).graph();
  Json profiles = Json::array();
  for (const auto& p : r.profiles) profiles.push_back(to_json(g, p));
  return Json{{"graph", r.graph},
              {"attempts", r.attempts},
              {"accepted", r.accepted},
              {"distinct_profiles", r.profiles.size()},
              {"profiles", profiles}};
}

Json error_to_json(const std::exception& e) {
  Json out{{"error", e.what()}, {"witness", nullptr}};
  if (auto* p = dynamic_cast<const PreconditionError*>(&e)) out["witness"] = optional_witness(p->witness());
  if (auto* p = dynamic_cast<const DegenerateConfiguration*>(&e)) {
    out["coplanar"] = Json::array();
    for (int l : p->labels()) out["coplanar"].push_back(std::to_string(l));
  }
  return out;
}

std::optional<std::vector<Cycle>> cycles_from_json(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("cycles") || j["cycles"].is_null()) return std::nullopt;
  require(j["cycles"].is_array(), "cycles must be an array of strings");
  std::vector<Cycle> out;
  for (const auto& c : j["cycles"]) {
    require(c.is_string(), "cycles must be an array of strings");
    out.push_back(schema([&] { return parse_cycle(g, c.get<std::string>()); }));
  }
  return out;
}

}  // namespace wulab::io
