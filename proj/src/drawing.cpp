#include "wulab/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wulab {

Vertex parse_vertex(std::string_view label) {
  bool primed = !label.empty() && label.back() == '\'';
  if (primed) label.remove_suffix(1);
  if (label.empty() || label.size() > 6 ||
      !std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("bad vertex label");
  }
  int index = std::stoi(std::string(label));
  if (index <= 0) throw std::invalid_argument("vertex labels are positive integers");
  return {index, primed};
}

// ---------------------------------------------------------------------------

Graph::Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("graph has duplicate vertex labels");
  }
  for (const auto& [a, b] : edges) {
    std::size_t i = index_of(a);
    std::size_t j = index_of(b);
    if (i == j) throw std::invalid_argument("graph edge " + a.label() + "-" + b.label() + " is a loop");
    edges_.push_back({std::min(i, j), std::max(i, j)});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("graph has a multiple edge");
  }
}

std::optional<std::size_t> Graph::find(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::index_of(const Vertex& v) const {
  auto i = find(v);
  if (!i) throw std::invalid_argument("unknown vertex " + v.label());
  return *i;
}

std::optional<std::size_t> Graph::edge_index(std::size_t a, std::size_t b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e] == key) return e;
  }
  return std::nullopt;
}

std::string Graph::edge_label(std::size_t e) const {
  return vertices_[edges_[e].u].label() + "-" + vertices_[edges_[e].v].label();
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n; ++i) v.push_back({i, false});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({{i, false}, {j, false}});
  return {v, e};
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("K_mn needs m, n >= 1");
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= m; ++i) v.push_back({i, false});
  for (int j = 1; j <= n; ++j) v.push_back({j, true});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) e.push_back({{i, false}, {j, true}});
  return {v, e};
}

Graph minus_edge(const Graph& g, const Vertex& a, const Vertex& b) {
  auto ia = g.index_of(a);
  auto ib = g.index_of(b);
  auto removed = g.edge_index(ia, ib);
  if (!removed) throw std::invalid_argument("no edge " + a.label() + "-" + b.label() + " to delete");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (k == *removed) continue;
    e.push_back({g.vertices()[g.edges()[k].u], g.vertices()[g.edges()[k].v]});
  }
  return {g.vertices(), e};
}

namespace {

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Vertex> v;
  for (int i = 1; i <= n; ++i) v.push_back({i, false});
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : pairs) e.push_back({{a, false}, {b, false}});
  return {v, e};
}

}  // namespace

// Outer square 1234, inner square 5678, spokes i -- i+4.
Graph cube_graph() {
  return from_pairs(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8},
                        {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

// K_6 without the matching 15, 26, 34.
Graph octahedron_graph() {
  Graph k6 = complete_graph(6);
  return minus_edge(minus_edge(minus_edge(k6, {1}, {5}), {2}, {6}), {3}, {4});
}

// K_{3,1}: leaves 1, 2, 3 and centre 1'.
Graph triod_graph() { return complete_bipartite_graph(3, 1); }

Graph builtin_graph(std::string_view kind, const std::vector<std::pair<std::string, std::string>>& params) {
  auto get = [&](const std::string& key) -> std::string {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw std::invalid_argument("graph kind '" + std::string(kind) + "' needs parameter '" + key + "'");
  };
  auto get_int = [&](const std::string& key) {
    int n = std::stoi(get(key));
    if (n < 1 || n > 64) throw std::invalid_argument("graph parameter out of range");
    return n;
  };
  if (kind == "K_n") return complete_graph(get_int("n"));
  if (kind == "K_mn") return complete_bipartite_graph(get_int("m"), get_int("n"));
  if (kind == "K_n_minus_edge")
    return minus_edge(complete_graph(get_int("n")), parse_vertex(get("u")), parse_vertex(get("v")));
  if (kind == "K_mn_minus_edge")
    return minus_edge(complete_bipartite_graph(get_int("m"), get_int("n")), parse_vertex(get("u")),
                      parse_vertex(get("v")));
  if (kind == "cube") return cube_graph();
  if (kind == "octahedron") return octahedron_graph();
  if (kind == "triod") return triod_graph();
  throw std::invalid_argument("unknown graph kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------

Drawing::Drawing(Graph graph, std::vector<Point2> placement, std::vector<Polyline> edge_lines)
    : graph_(std::move(graph)), placement_(std::move(placement)), edge_lines_(std::move(edge_lines)) {
  if (placement_.size() != graph_.vertex_count()) throw std::invalid_argument("drawing: placement count mismatch");
  if (edge_lines_.size() != graph_.edges().size()) throw std::invalid_argument("drawing: edge polyline count mismatch");
  for (std::size_t e = 0; e < edge_lines_.size(); ++e) {
    const Edge& edge = graph_.edges()[e];
    Polyline& line = edge_lines_[e];
    if (line.size() < 2) throw std::invalid_argument("drawing: edge " + graph_.edge_label(e) + " needs two vertices");
    const Point2& pu = placement_[edge.u];
    const Point2& pv = placement_[edge.v];
    if (line.front() == pu && line.back() == pv) continue;
    if (line.front() == pv && line.back() == pu) {
      line = reverse(line);
      continue;
    }
    throw std::invalid_argument("drawing: edge " + graph_.edge_label(e) + " does not join its endpoints");
  }
}

Polyline Drawing::edge_line(std::size_t a, std::size_t b) const {
  auto e = graph_.edge_index(a, b);
  if (!e) throw std::invalid_argument("no edge " + graph_.vertices()[a].label() + "-" + graph_.vertices()[b].label());
  return graph_.edges()[*e].u == a ? edge_lines_[*e] : reverse(edge_lines_[*e]);
}

Polyline Drawing::edge_line(const Vertex& a, const Vertex& b) const {
  return edge_line(graph_.index_of(a), graph_.index_of(b));
}

Drawing with_edge_line(const Drawing& d, std::size_t e, Polyline line) {
  auto lines = d.edge_lines();
  lines.at(e) = std::move(line);
  return {d.graph(), d.placements(), std::move(lines)};
}

Drawing relabel(const Drawing& g, const std::vector<std::pair<Vertex, Vertex>>& sigma_pairs) {
  const Graph& graph = g.graph();
  std::vector<std::size_t> sigma(graph.vertex_count());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  for (const auto& [from, to] : sigma_pairs) sigma[graph.index_of(from)] = graph.index_of(to);
  if (std::set<std::size_t>(sigma.begin(), sigma.end()).size() != sigma.size()) {
    throw std::invalid_argument("relabel: not a permutation");
  }
  std::vector<Point2> placement;
  for (std::size_t v = 0; v < sigma.size(); ++v) placement.push_back(g.placement(sigma[v]));
  std::vector<Polyline> lines;
  for (const Edge& e : graph.edges()) lines.push_back(g.edge_line(sigma[e.u], sigma[e.v]));
  return {graph, std::move(placement), std::move(lines)};
}

// ---------------------------------------------------------------------------

bool Cycle::contains(std::size_t v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

int Cycle::traverses(const Edge& e) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::size_t a = vertices[i];
    std::size_t b = vertices[(i + 1) % vertices.size()];
    if (a == e.u && b == e.v) return 1;
    if (a == e.v && b == e.u) return -1;
  }
  return 0;
}

Cycle Cycle::reversed() const {
  Cycle c;
  c.vertices.push_back(vertices.front());
  c.vertices.insert(c.vertices.end(), vertices.rbegin(), vertices.rend() - 1);
  return c;
}

std::string Cycle::label(const Graph& g) const {
  bool compact = std::all_of(vertices.begin(), vertices.end(), [&](std::size_t v) {
    return !g.vertices()[v].primed && g.vertices()[v].index < 10;
  });
  std::string out;
  for (std::size_t v : vertices) {
    if (!compact && !out.empty()) out += ' ';
    out += g.vertices()[v].label();
  }
  return out;
}

Cycle make_cycle(const Graph& g, const std::vector<Vertex>& labels) {
  if (labels.size() < 3) throw std::invalid_argument("a cycle needs at least three vertices");
  Cycle c;
  for (const auto& l : labels) c.vertices.push_back(g.index_of(l));
  if (std::set<std::size_t>(c.vertices.begin(), c.vertices.end()).size() != c.vertices.size()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (!g.edge_index(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()])) {
      throw std::invalid_argument("cycle uses a non-edge " + labels[i].label() + "-" +
                                  labels[(i + 1) % labels.size()].label());
    }
  }
  return c;
}

Cycle parse_cycle(const Graph& g, std::string_view text) {
  std::vector<Vertex> labels;
  if (text.find(' ') != std::string_view::npos || text.find(',') != std::string_view::npos) {
    std::string token;
    for (char ch : std::string(text) + " ") {
      if (ch == ' ' || ch == ',') {
        if (!token.empty()) labels.push_back(parse_vertex(token));
        token.clear();
      } else {
        token += ch;
      }
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      std::string token(1, text[i]);
      if (i + 1 < text.size() && text[i + 1] == '\'') token += text[++i];
      labels.push_back(parse_vertex(token));
    }
  }
  return make_cycle(g, labels);
}

ClosedPolyline restriction_to_cycle(const Drawing& d, const Cycle& c) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    Polyline line = d.edge_line(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
    pts.insert(pts.end(), line.vertices().begin(), line.vertices().end() - 1);
  }
  return ClosedPolyline(std::move(pts));
}

// ---------------------------------------------------------------------------

ViolationReport validate_almost_embedding(const Drawing& d) {
  const Graph& g = d.graph();
  ViolationReport report;
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    for (std::size_t b = a + 1; b < g.vertex_count(); ++b) {
      if (d.placement(a) == d.placement(b)) report.violations.push_back(CoincidentVertices{a, b, d.placement(a)});
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      if (g.edges()[e].incident(v)) continue;
      if (find_segment_containing(d.edge_line(e), d.placement(v))) {
        report.violations.push_back(VertexOnEdge{v, e, d.placement(v)});
      }
    }
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    for (std::size_t f = e + 1; f < g.edges().size(); ++f) {
      if (g.edges()[e].adjacent(g.edges()[f])) continue;
      const Polyline& le = d.edge_line(e);
      const Polyline& lf = d.edge_line(f);
      // an overlap is reported in preference to a single shared point
      std::optional<std::variant<Point2, Segment>> witness;
      for (std::size_t i = 0; i < le.segment_count(); ++i) {
        for (std::size_t j = 0; j < lf.segment_count(); ++j) {
          auto x = segment_intersection(le.segment(i), lf.segment(j));
          if (auto* s = std::get_if<Segment>(&x)) {
            if (!witness || std::holds_alternative<Point2>(*witness)) witness = *s;
          } else if (auto* p = std::get_if<Point2>(&x)) {
            if (!witness) witness = *p;
          }
        }
      }
      if (witness) report.violations.push_back(EdgesIntersect{e, f, *witness});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string to_string(PositionIssue::Kind kind) {
  switch (kind) {
    case PositionIssue::Kind::CoincidentVertices: return "coincident_vertices";
    case PositionIssue::Kind::VertexOnEdge: return "vertex_on_edge";
    case PositionIssue::Kind::Overlap: return "overlap";
    case PositionIssue::Kind::MultiplePoint: return "multiple_point";
    case PositionIssue::Kind::CrossingAtBend: return "crossing_at_bend";
  }
  return "unknown";
}

GeneralPositionReport validate_general_position(const Drawing& d) {
  using Kind = PositionIssue::Kind;
  const Graph& g = d.graph();
  GeneralPositionReport report;

  std::set<Point2> vertex_points;
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    vertex_points.insert(d.placement(a));
    for (std::size_t b = a + 1; b < g.vertex_count(); ++b) {
      if (d.placement(a) == d.placement(b)) {
        report.issues.push_back({Kind::CoincidentVertices, {}, {a, b}, d.placement(a)});
      }
    }
  }

  // A vertex image may touch an edge image only as that edge's own endpoint.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Point2& p = d.placement(v);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Polyline& line = d.edge_line(e);
      const std::size_t last = line.segment_count() - 1;
      for (std::size_t k = 0; k < line.segment_count(); ++k) {
        if (!point_on_segment(p, line.segment(k))) continue;
        bool endpoint = (k == 0 && g.edges()[e].u == v && p == line.front()) ||
                        (k == last && g.edges()[e].v == v && p == line.back());
        if (!endpoint) {
          report.issues.push_back({Kind::VertexOnEdge, {e}, {v}, p});
          break;
        }
      }
    }
  }

  struct SegRef {
    std::size_t edge;
    std::size_t index;
    Segment seg;
  };
  std::vector<SegRef> segs;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Polyline& line = d.edge_line(e);
    for (std::size_t k = 0; k < line.segment_count(); ++k) segs.push_back({e, k, line.segment(k)});
  }

  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const SegRef& s = segs[i];
      const SegRef& t = segs[j];
      auto x = segment_intersection(s.seg, t.seg);
      if (std::holds_alternative<NoIntersection>(x)) continue;
      if (auto* ov = std::get_if<Segment>(&x)) {
        report.issues.push_back({Kind::Overlap, {s.edge, t.edge}, {}, ov->a()});
        continue;
      }
      const Point2& p = std::get<Point2>(x);
      const bool consecutive = s.edge == t.edge && t.index == s.index + 1;
      if (consecutive) continue;  // they meet at their common joint
      if (vertex_points.count(p)) continue;  // reported by the vertex checks, or a legal junction
      if (p == s.seg.a() || p == s.seg.b() || p == t.seg.a() || p == t.seg.b()) {
        report.issues.push_back({Kind::CrossingAtBend, {s.edge, t.edge}, {}, p});
        continue;
      }
      report.crossings.push_back({s.edge, t.edge, p});
    }
  }

  std::sort(report.crossings.begin(), report.crossings.end(), [](const Crossing& a, const Crossing& b) {
    if (a.at < b.at) return true;
    if (b.at < a.at) return false;
    return std::pair(a.e, a.f) < std::pair(b.e, b.f);
  });
  for (std::size_t i = 0; i + 1 < report.crossings.size(); ++i) {
    if (report.crossings[i].at == report.crossings[i + 1].at &&
        (i == 0 || !(report.crossings[i - 1].at == report.crossings[i].at))) {
      std::set<std::size_t> edges;
      for (std::size_t k = i; k < report.crossings.size() && report.crossings[k].at == report.crossings[i].at; ++k) {
        edges.insert(report.crossings[k].e);
        edges.insert(report.crossings[k].f);
      }
      report.issues.push_back({Kind::MultiplePoint, {edges.begin(), edges.end()}, {}, report.crossings[i].at});
    }
  }
  return report;
}

std::size_t count_nonadjacent_crossings(const Drawing& d, const GeneralPositionReport& report) {
  const auto& edges = d.graph().edges();
  return static_cast<std::size_t>(std::count_if(report.crossings.begin(), report.crossings.end(), [&](const Crossing& c) {
    return c.e != c.f && !edges[c.e].adjacent(edges[c.f]);
  }));
}

// ---------------------------------------------------------------------------

int crossing_parity(const ClosedPolyline& l, const Polyline& p) {
  if (find_segment_containing(l, p.front()) || find_segment_containing(l, p.back())) {
    throw PreconditionError("crossing_parity: an endpoint of P lies on L");
  }
  std::set<Point2> lv(l.vertices().begin(), l.vertices().end());
  for (const auto& v : p.vertices()) {
    if (lv.count(v)) throw PreconditionError("not in general position: shared vertex", v);
  }
  std::vector<Point2> hits;
  for (std::size_t i = 0; i < l.segment_count(); ++i) {
    const Segment a = l.segment(i);
    for (std::size_t j = 0; j < p.segment_count(); ++j) {
      const Segment b = p.segment(j);
      auto x = segment_intersection(a, b);
      if (std::holds_alternative<NoIntersection>(x)) continue;
      if (auto* ov = std::get_if<Segment>(&x)) throw PreconditionError("not in general position: overlap", ov->a());
      const Point2& q = std::get<Point2>(x);
      if (q == a.a() || q == a.b() || q == b.a() || q == b.b()) {
        throw PreconditionError("not in general position: intersection at a vertex", q);
      }
      hits.push_back(q);
    }
  }
  std::sort(hits.begin(), hits.end());
  if (std::adjacent_find(hits.begin(), hits.end()) != hits.end()) {
    throw PreconditionError("not in general position: multiple intersection point");
  }
  return static_cast<int>(hits.size() % 2);
}

bool mod2_interior_contains(const ClosedPolyline& l, const Point2& x) {
  if (auto i = find_segment_containing(l, x)) throw PointOnCurveError(x, *i);
  // Horizontal ray to +x with the half-open rule at vertices.
  bool inside = false;
  for (std::size_t i = 0; i < l.segment_count(); ++i) {
    const Segment s = l.segment(i);
    const Point2& a = s.a();
    const Point2& b = s.b();
    if ((a.y > x.y) == (b.y > x.y)) continue;
    Rational xi = a.x + (x.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (xi > x.x) inside = !inside;
  }
  return inside;
}

}  // namespace wulab
