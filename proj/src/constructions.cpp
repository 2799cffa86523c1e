#include "wulab/constructions.hpp"

#include <algorithm>
#include <random>

namespace wulab {

namespace {

Point2 q(long x, long y) { return {x, y}; }

Point2 qf(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

Drawing straight_drawing(const Graph& g, const std::map<std::string, Point2>& at) {
  std::vector<Point2> placement;
  for (const Vertex& v : g.vertices()) placement.push_back(at.at(v.label()));
  std::vector<Polyline> lines;
  for (const Edge& e : g.edges()) lines.push_back(Polyline({placement[e.u], placement[e.v]}));
  return {g, std::move(placement), std::move(lines)};
}

Drawing with_lines(const Graph& g, const std::map<std::string, Point2>& at,
                   const std::map<std::string, std::vector<Point2>>& bends) {
  Drawing d = straight_drawing(g, at);
  for (const auto& [name, mid] : bends) {
    const auto dash = name.find('-');
    const Vertex a = parse_vertex(name.substr(0, dash));
    const Vertex b = parse_vertex(name.substr(dash + 1));
    std::vector<Point2> pts{d.placement(a)};
    pts.insert(pts.end(), mid.begin(), mid.end());
    pts.push_back(d.placement(b));
    d = with_edge_line(d, *g.edge_index(g.index_of(a), g.index_of(b)), Polyline(pts));
  }
  return d;
}

const std::map<std::string, Point2> kTriangle{{"1", q(0, 0)}, {"2", q(4, 0)}, {"3", q(2, 3)}};

}  // namespace

std::vector<std::string> base_drawing_names() {
  return {"square_diagonals_k4", "triangle_center_k4", "pentagon_k5",      "pentagon_k5_minus_45",
          "planar_k5_minus_45",  "triangle_k3",        "triod_k31",        "k33_minus_11",
          "cube_nested_squares", "octahedron_planar"};
}

Drawing base_drawing(std::string_view name) {
  const std::map<std::string, Point2> pentagon{
      {"1", q(2, 0)}, {"2", q(4, 2)}, {"3", q(3, 4)}, {"4", q(1, 4)}, {"5", q(0, 2)}};
  if (name == "square_diagonals_k4") {
    return straight_drawing(complete_graph(4), {{"1", q(0, 0)}, {"2", q(4, 0)}, {"3", q(4, 4)}, {"4", q(0, 4)}});
  }
  if (name == "triangle_center_k4") {
    auto at = kTriangle;
    at["4"] = q(2, 1);
    return straight_drawing(complete_graph(4), at);
  }
  if (name == "pentagon_k5") return straight_drawing(complete_graph(5), pentagon);
  if (name == "pentagon_k5_minus_45") return straight_drawing(minus_edge(complete_graph(5), {4}, {5}), pentagon);
  if (name == "planar_k5_minus_45") {
    auto at = kTriangle;
    at["4"] = q(2, 1);
    at["5"] = q(2, 5);
    return straight_drawing(minus_edge(complete_graph(5), {4}, {5}), at);
  }
  if (name == "triangle_k3") return straight_drawing(complete_graph(3), kTriangle);
  if (name == "triod_k31") {
    auto at = kTriangle;
    at["1'"] = q(2, 1);
    return straight_drawing(triod_graph(), at);
  }
  if (name == "k33_minus_11") {
    return straight_drawing(minus_edge(complete_bipartite_graph(3, 3), {1}, {1, true}),
                            {{"2", q(0, 0)}, {"2'", q(4, 0)}, {"3", q(4, 4)}, {"3'", q(0, 4)}, {"1", q(1, 1)},
                             {"1'", q(6, -2)}});
  }
  if (name == "cube_nested_squares") {
    return straight_drawing(cube_graph(), {{"1", q(0, 0)}, {"2", q(6, 0)}, {"3", q(6, 6)}, {"4", q(0, 6)},
                                           {"5", q(2, 2)}, {"6", q(4, 2)}, {"7", q(4, 4)}, {"8", q(2, 4)}});
  }
  if (name == "octahedron_planar") {
    return straight_drawing(octahedron_graph(), {{"1", q(0, 0)}, {"2", q(12, 0)}, {"3", q(6, 10)}, {"4", q(6, 2)},
                                                 {"5", q(8, 6)}, {"6", q(4, 6)}});
  }
  throw std::invalid_argument("unknown base drawing '" + std::string(name) + "'");
}

std::string to_string(MoveType t) { return t == MoveType::First ? "first" : "second"; }

MoveType parse_move_type(std::string_view s) {
  if (s == "first" || s == "1") return MoveType::First;
  if (s == "second" || s == "2") return MoveType::Second;
  throw std::invalid_argument("move type is 'first' or 'second'");
}

Rational signed_area(const ClosedPolyline& line) {
  Rational twice = 0;
  const auto& v = line.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return twice / 2;
}

// ---------------------------------------------------------------------------

namespace {

bool is_endpoint(const Point2& p, const Segment& s) { return p == s.a() || p == s.b(); }

[[noreturn]] void reject(const std::string& what, const Point2& at) { throw FingerMoveError("finger move: " + what, at); }

}  // namespace

Drawing finger_move(const Drawing& d, const FingerMoveSpec& spec, const FingerMoveOptions& opts) {
  const Graph& g = d.graph();
  if (spec.edge >= g.edges().size()) throw std::invalid_argument("finger move: no such edge");
  const Polyline& line = d.edge_line(spec.edge);
  if (spec.segment >= line.segment_count()) throw std::invalid_argument("finger move: no such segment");
  if (!(0 < spec.t_in && spec.t_in < spec.t_out && spec.t_out < 1)) {
    throw std::invalid_argument("finger move: need 0 < t_in < t_out < 1");
  }
  const Segment anchor = line.segment(spec.segment);
  const Point2 xa = lerp(anchor.a(), anchor.b(), spec.t_in);
  const Point2 xb = lerp(anchor.a(), anchor.b(), spec.t_out);
  const auto& lv = spec.loop.vertices();
  if (lv.size() < 3) throw std::invalid_argument("finger move: loop needs a vertex off the edge");
  if (!(lv.front() == xa)) reject("loop does not start at the entry point", lv.front());
  if (!(lv.back() == xb)) reject("loop does not end at the exit point", lv.back());

  const Rational area = signed_area(spec.loop);
  if (sign(area) == 0) reject("loop has zero signed area", xa);
  if ((sign(area) > 0) != (spec.type == MoveType::First)) reject("loop orientation disagrees with the move type", xa);

  const Segment span(xa, xb);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (point_on_segment(d.placement(v), span)) reject("anchor span contains vertex " + g.vertices()[v].label(), d.placement(v));
  }
  for (std::size_t f = 0; f < g.edges().size(); ++f) {
    if (f == spec.edge) continue;
    const Polyline& other = d.edge_line(f);
    for (std::size_t j = 0; j < other.segment_count(); ++j) {
      auto x = segment_intersection(span, other.segment(j));
      if (auto* p = std::get_if<Point2>(&x)) reject("anchor span meets edge " + g.edge_label(f), *p);
      if (auto* ov = std::get_if<Segment>(&x)) reject("anchor span meets edge " + g.edge_label(f), ov->a());
    }
  }

  const Polyline excursion(lv);
  const std::size_t last = excursion.segment_count() - 1;

  for (std::size_t i = 0; i <= last; ++i) {
    const Segment s = excursion.segment(i);
    for (std::size_t j = 0; j < line.segment_count(); ++j) {
      auto x = segment_intersection(s, line.segment(j));
      if (std::holds_alternative<NoIntersection>(x)) continue;
      if (auto* ov = std::get_if<Segment>(&x)) reject("loop runs along the moved edge", ov->a());
      const Point2& p = std::get<Point2>(x);
      const bool allowed = j == spec.segment && ((i == 0 && p == xa) || (i == last && p == xb));
      if (!allowed) reject("loop touches the moved edge away from the anchor", p);
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (point_on_segment(d.placement(v), s)) reject("loop passes through vertex " + g.vertices()[v].label(), d.placement(v));
    }
  }

  const Edge& moved = g.edges()[spec.edge];
  for (std::size_t f = 0; f < g.edges().size(); ++f) {
    if (f == spec.edge) continue;
    const Polyline& other = d.edge_line(f);
    const bool adjacent = g.edges()[f].adjacent(moved);
    for (std::size_t i = 0; i <= last; ++i) {
      const Segment s = excursion.segment(i);
      for (std::size_t j = 0; j < other.segment_count(); ++j) {
        const Segment t = other.segment(j);
        auto x = segment_intersection(s, t);
        if (std::holds_alternative<NoIntersection>(x)) continue;
        if (auto* ov = std::get_if<Segment>(&x)) reject("loop overlaps edge " + g.edge_label(f), ov->a());
        const Point2& p = std::get<Point2>(x);
        if (is_endpoint(p, s) || is_endpoint(p, t)) reject("loop meets edge " + g.edge_label(f) + " at a bend", p);
        if (!adjacent && !opts.allow_nonadjacent_crossings) {
          reject("loop crosses non-adjacent edge " + g.edge_label(f), p);
        }
      }
    }
  }

  for (std::size_t i = 0; i <= last; ++i) {
    for (std::size_t j = i + 1; j <= last; ++j) {
      auto x = segment_intersection(excursion.segment(i), excursion.segment(j));
      if (std::holds_alternative<NoIntersection>(x)) continue;
      if (auto* ov = std::get_if<Segment>(&x)) reject("loop folds back on itself", ov->a());
      const Point2& p = std::get<Point2>(x);
      if (j == i + 1) continue;
      if (is_endpoint(p, excursion.segment(i)) || is_endpoint(p, excursion.segment(j))) {
        reject("loop touches itself at a bend", p);
      }
    }
  }

  std::vector<Point2> pts(line.vertices().begin(), line.vertices().begin() + static_cast<long>(spec.segment) + 1);
  pts.insert(pts.end(), lv.begin(), lv.end());
  pts.insert(pts.end(), line.vertices().begin() + static_cast<long>(spec.segment) + 1, line.vertices().end());
  return with_edge_line(d, spec.edge, Polyline(std::move(pts)));
}

// ---------------------------------------------------------------------------

namespace {

Rational rabs(const Rational& r) { return sign(r) < 0 ? Rational(-r) : r; }

FingerMoveSpec route(const Drawing& d, std::size_t edge, const std::vector<Point2>& targets,
                     const std::set<std::size_t>& target_vertices, MoveType type, const RouteOptions& opts) {
  const Graph& g = d.graph();
  if (edge >= g.edges().size()) throw std::invalid_argument("router: no such edge");
  for (std::size_t v : target_vertices) {
    if (g.edges()[edge].incident(v)) {
      throw std::invalid_argument("router: target vertex " + g.vertices()[v].label() + " is an endpoint of the edge");
    }
  }
  const Polyline& line = d.edge_line(edge);

  Point2 c(0, 0);
  for (const auto& p : targets) c = c + p;
  c = Rational(1, static_cast<long>(targets.size())) * c;

  std::size_t seg = 0;
  Rational best_dist;
  Rational t;
  for (std::size_t j = 0; j < line.segment_count(); ++j) {
    auto [dist, tj] = squared_distance_to_segment(c, line.segment(j));
    if (j == 0 || dist < best_dist) {
      best_dist = dist;
      t = tj;
      seg = j;
    }
  }
  t = std::clamp(t, Rational(1, 8), Rational(7, 8));
  const Segment anchor = line.segment(seg);

  // parameters on the anchor segment where other features sit
  std::vector<Rational> blocked;
  {
    const Point2 dir = anchor.direction();
    const Rational dd = dot(dir, dir);
    auto param = [&](const Point2& p) -> Rational { return dot(p - anchor.a(), dir) / dd; };
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!g.edges()[edge].incident(v) && point_on_segment(d.placement(v), anchor)) blocked.push_back(param(d.placement(v)));
    }
    for (std::size_t f = 0; f < g.edges().size(); ++f) {
      if (f == edge) continue;
      const Polyline& other = d.edge_line(f);
      for (std::size_t j = 0; j < other.segment_count(); ++j) {
        auto x = segment_intersection(anchor, other.segment(j));
        if (auto* p = std::get_if<Point2>(&x)) blocked.push_back(param(*p));
        if (auto* ov = std::get_if<Segment>(&x)) {
          blocked.push_back(param(ov->a()));
          blocked.push_back(param(ov->b()));
        }
      }
    }
  }
  if (std::find(blocked.begin(), blocked.end(), t) != blocked.end()) {
    Rational lo(0), hi(1);
    for (const auto& b : blocked) {
      if (b < t && b > lo) lo = b;
      if (b > t && b < hi) hi = b;
    }
    t = hi - t > t - lo ? Rational((t + hi) / 2) : Rational((lo + t) / 2);
  }
  Rational free_lo(0), free_hi(1);
  for (const auto& b : blocked) {
    if (b < t && b > free_lo) free_lo = b;
    if (b > t && b < free_hi) free_hi = b;
  }
  const Point2 x = lerp(anchor.a(), anchor.b(), t);
  const Point2 u = c - x;
  if (sign(u.x) == 0 && sign(u.y) == 0) throw RoutingError("router: the targets are centred on the edge", c);
  const Rational uu = dot(u, u);
  const Point2 n = perp(u);
  auto alpha = [&](const Point2& p) -> Rational { return dot(p - x, u) / uu; };
  auto beta = [&](const Point2& p) -> Rational { return dot(p - x, n) / uu; };
  auto world = [&](const Rational& a, const Rational& b) { return x + a * u + b * n; };

  Rational a_min = alpha(targets[0]), a_max = a_min, b_min = beta(targets[0]), b_max = b_min;
  for (const auto& p : targets) {
    a_min = std::min(a_min, alpha(p));
    a_max = std::max(a_max, alpha(p));
    b_min = std::min(b_min, beta(p));
    b_max = std::max(b_max, beta(p));
  }
  const Point2 dir = anchor.direction();
  const Rational du = dot(dir, u) / uu;
  const Rational dn = dot(dir, n) / uu;
  if (sign(dn) == 0) throw RoutingError("router: the edge runs straight at the targets", x);

  const bool was_gp = validate_general_position(d).ok();
  const bool was_ae = is_almost_embedding(d);
  FingerMoveOptions fopts;
  fopts.allow_nonadjacent_crossings = !opts.preserve_almost_embedding;

  std::optional<PreconditionError> last_error;
  Rational rho(1, 4);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt, rho /= 2) {
    try {
      const Rational a_near = a_min - rho;
      if (sign(a_near) <= 0) throw RoutingError("router: targets too close to the edge", c);
      Rational eta = std::min(Rational(t - free_lo), Rational(free_hi - t)) / 2;
      eta = std::min(eta, Rational(rho * (1 - rho) / (2 * rabs(dn))));
      if (sign(du) != 0) eta = std::min(eta, Rational(a_near / (2 * rabs(du))));
      const Rational alpha_a = -eta * du, beta_a = -eta * dn;
      const Rational alpha_b = eta * du, beta_b = eta * dn;
      // Unequal margins keep the corners off symmetric features of the drawing;
      // the rho^2 terms keep successive attempts from being homothetic about a target.
      const Rational a_far = a_max + rho * (Rational(7, 9) + rho / 5), b_lo = b_min - rho * (Rational(5, 6) + rho / 7),
                     b_hi = b_max + rho * (Rational(10, 11) + rho / 3);

      const bool twist = (beta_a < beta_b) != (type == MoveType::First);
      const Rational b_start = twist ? beta_b : beta_a;
      const Rational b_end = twist ? beta_a : beta_b;
      const Rational a_twist = (std::max(alpha_a, alpha_b) + a_near) / 2;
      const Rational a_twist_end = (a_twist + a_near) / 2;

      std::vector<Point2> pts{lerp(anchor.a(), anchor.b(), t - eta)};
      if (twist) pts.push_back(world(a_twist, b_start));
      pts.push_back(world(a_near, b_start));
      if (b_start < b_end) {
        pts.push_back(world(a_near, b_lo));
        pts.push_back(world(a_far, b_lo));
        pts.push_back(world(a_far, b_hi));
        pts.push_back(world(a_near, b_hi));
      } else {
        pts.push_back(world(a_near, b_hi));
        pts.push_back(world(a_far, b_hi));
        pts.push_back(world(a_far, b_lo));
        pts.push_back(world(a_near, b_lo));
      }
      pts.push_back(world(a_near, b_end));
      if (twist) pts.push_back(world(a_twist_end, b_end));
      pts.push_back(lerp(anchor.a(), anchor.b(), t + eta));

      FingerMoveSpec spec;
      spec.edge = edge;
      spec.segment = seg;
      spec.t_in = t - eta;
      spec.t_out = t + eta;
      spec.loop = ClosedPolyline(std::move(pts));
      spec.type = type;

      const long want = type == MoveType::First ? 1 : -1;
      for (const auto& p : targets) {
        if (winding_number(spec.loop, p) != want) throw RoutingError("router: loop misses a target", p);
      }
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (target_vertices.count(v)) continue;
        if (winding_number(spec.loop, d.placement(v)) != 0) {
          throw RoutingError("router: loop encloses vertex " + g.vertices()[v].label(), d.placement(v));
        }
      }
      const Drawing out = finger_move(d, spec, fopts);
      if (was_gp) {
        const auto gp = validate_general_position(out);
        if (!gp.ok()) {
          throw RoutingError("router: move breaks general position (" + to_string(gp.issues.front().kind) + ")",
                             gp.issues.front().witness);
        }
      }
      if (was_ae && opts.preserve_almost_embedding && !is_almost_embedding(out)) {
        throw RoutingError("router: move breaks the almost embedding", x);
      }
      return spec;
    } catch (const PreconditionError& e) {
      last_error = e;
    }
  }
  throw RoutingError(std::string("no clear route for edge ") + g.edge_label(edge) + ": " + last_error->what(),
                     last_error->witness());
}

}  // namespace

FingerMoveSpec guide_loop_around_vertex(const Drawing& d, std::size_t edge, std::size_t vertex, MoveType type,
                                        const RouteOptions& opts) {
  return guide_loop_around_vertices(d, edge, {vertex}, type, opts);
}

FingerMoveSpec guide_loop_around_vertices(const Drawing& d, std::size_t edge, const std::vector<std::size_t>& vertices,
                                          MoveType type, const RouteOptions& opts) {
  if (vertices.empty()) throw std::invalid_argument("router: no target vertices");
  std::vector<Point2> targets;
  for (std::size_t v : vertices) targets.push_back(d.placement(v));
  return route(d, edge, targets, {vertices.begin(), vertices.end()}, type, opts);
}

FingerMoveSpec guide_loop_around_segment(const Drawing& d, std::size_t edge, std::size_t target_edge, MoveType type,
                                         const RouteOptions& opts) {
  const Graph& g = d.graph();
  if (target_edge >= g.edges().size()) throw std::invalid_argument("router: no such target edge");
  if (g.edges()[edge].adjacent(g.edges()[target_edge])) {
    throw std::invalid_argument("router: target segment shares a vertex with the moved edge");
  }
  const auto& pts = d.edge_line(target_edge).vertices();
  return route(d, edge, pts, {g.edges()[target_edge].u, g.edges()[target_edge].v}, type, opts);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::size_t edge_of(const Graph& g, const char* a, const char* b) {
  return *g.edge_index(g.index_of(parse_vertex(a)), g.index_of(parse_vertex(b)));
}

std::size_t vertex_of(const Graph& g, const char* a) { return g.index_of(parse_vertex(a)); }

MoveType type_for(long desired_sign, int traverses) {
  return desired_sign * traverses > 0 ? MoveType::First : MoveType::Second;
}

long sgn(long n) { return (n > 0) - (n < 0); }

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction missed its target: " + what);
}

Drawing repeat_vertex_moves(Drawing d, std::size_t edge, const std::vector<std::size_t>& vertices, long count,
                            MoveType type, bool preserve) {
  RouteOptions opts;
  opts.preserve_almost_embedding = preserve;
  FingerMoveOptions fopts;
  fopts.allow_nonadjacent_crossings = !preserve;
  for (long i = 0; i < count; ++i) d = finger_move(d, guide_loop_around_vertices(d, edge, vertices, type, opts), fopts);
  return d;
}

Drawing repeat_segment_moves(Drawing d, std::size_t edge, std::size_t target, long count, MoveType type) {
  for (long i = 0; i < count; ++i) d = finger_move(d, guide_loop_around_segment(d, edge, target, type));
  return d;
}

// Frozen drawing found by a randomized search and checked exactly.
Drawing morozov_drawing() {
  auto at = kTriangle;
  at["4"] = q(2, 1);
  return with_lines(complete_graph(4), at,
                    {{"1-2", {qf("-13/8", "-17/8"), qf("29/8", "-15/8")}},
                     {"3-4", {qf("37/8", "5/8"), qf("-25/8", "19/4")}},
                     {"1-3", {qf("3/8", "31/8"), qf("55/8", "-29/8")}},
                     {"2-4", {qf("0", "21/4"), qf("-5/4", "13/4"), qf("3/8", "-13/4")}},
                     {"1-4", {qf("5/4", "11/8")}}});
}

Drawing ae_k4_w123_4(long n) {
  Drawing d = base_drawing("triangle_center_k4");
  const Graph& g = d.graph();
  const Cycle c = make_cycle(g, {{1}, {2}, {3}});
  const std::size_t e12 = edge_of(g, "1", "2");
  d = repeat_segment_moves(d, e12, edge_of(g, "3", "4"), std::labs(n - 1), type_for(sgn(n - 1), c.traverses(g.edges()[e12])));
  expect(is_almost_embedding(d) && winding_of_vertex(d, c, vertex_of(g, "4")) == n, "w_f(123,4)");
  return d;
}

Drawing ae_k4_windings(std::array<long, 4> n) {
  const long alt = -n[0] + n[1] - n[2] + n[3];
  if (alt == -1) {
    const Drawing g = ae_k4_windings({n[1], n[0], -n[2], -n[3]});
    return relabel(g, {{{1}, {2}}, {{2}, {1}}});
  }
  if (alt != 1) throw std::invalid_argument("ae_k4_windings needs -n1 + n2 - n3 + n4 = +-1");
  Drawing d = base_drawing("triangle_center_k4");
  const Graph& g = d.graph();
  struct Step {
    const char* a;
    const char* b;
    const char* ta;
    const char* tb;
    int j;
  };
  const Step steps[] = {{"2", "3", "1", "4", 1}, {"1", "3", "2", "4", 2}, {"1", "2", "3", "4", 3}};
  for (const Step& s : steps) {
    const std::size_t e = edge_of(g, s.a, s.b);
    const long want = n[s.j - 1];
    const MoveType type = type_for(sgn(want), k4_cycle(g, s.j).traverses(g.edges()[e]));
    d = repeat_segment_moves(d, e, edge_of(g, s.ta, s.tb), std::labs(want), type);
  }
  expect(is_almost_embedding(d) && k4_profile(d) == n, "w_f(C_j,j) profile");
  return d;
}

Drawing map_k4_windings(std::array<long, 4> n) {
  Drawing d = base_drawing("square_diagonals_k4");
  const Graph& g = d.graph();
  const char* moved[] = {"2-4", "1-3", "2-4", "1-3"};
  for (int j = 1; j <= 4; ++j) {
    const std::size_t e = moved[j - 1][0] == '2' ? edge_of(g, "2", "4") : edge_of(g, "1", "3");
    const MoveType type = type_for(sgn(n[j - 1]), k4_cycle(g, j).traverses(g.edges()[e]));
    d = repeat_vertex_moves(d, e, {g.index_of({j})}, std::labs(n[j - 1]), type, false);
  }
  expect(k4_profile(d) == n, "w_f(C_j,j) profile");
  return d;
}

Drawing ae_k3_winding(long n) {
  const Drawing k4 = ae_k4_w123_4(n);
  std::vector<Vertex> vs;
  for (int i = 1; i <= 4; ++i) vs.push_back({i});
  const Graph g(vs, {{{1}, {2}}, {{2}, {3}}, {{1}, {3}}});
  std::vector<Polyline> lines;
  for (const Edge& e : g.edges()) lines.push_back(k4.edge_line(e.u, e.v));
  Drawing d(g, k4.placements(), std::move(lines));
  expect(is_almost_embedding(d) && winding_of_vertex(d, make_cycle(g, {{1}, {2}, {3}}), 3) == n, "w(f|123, O)");
  return d;
}

Drawing ae_k5m45_w123_5(long n) {
  Drawing d = base_drawing("planar_k5_minus_45");
  const Graph& g = d.graph();
  const Cycle c = make_cycle(g, {{1}, {2}, {3}});
  const std::size_t e12 = edge_of(g, "1", "2");
  d = repeat_vertex_moves(d, e12, {vertex_of(g, "3"), vertex_of(g, "4"), vertex_of(g, "5")}, std::labs(n),
                          type_for(sgn(n), c.traverses(g.edges()[e12])), true);
  expect(is_almost_embedding(d) && winding_of_vertex(d, c, vertex_of(g, "5")) == n, "w_f(123,5)");
  return d;
}

Drawing triod_wu(long n) {
  Drawing d = base_drawing("triod_k31");
  const Graph& g = d.graph();
  const std::size_t leg1 = edge_of(g, "1", "1'");
  d = repeat_vertex_moves(d, leg1, {vertex_of(g, "3")}, std::labs(n), n >= 0 ? MoveType::First : MoveType::Second, true);
  expect(is_almost_embedding(d) && triodic_wu(triod_of_drawing(d)) == 2 * n + 1, "triodic Wu number");
  return d;
}

Drawing cycle_wu(long n) {
  Drawing d = base_drawing("triangle_k3");
  const Graph& g = d.graph();
  d = repeat_vertex_moves(d, edge_of(g, "2", "3"), {vertex_of(g, "1")}, std::labs(n),
                          n >= 0 ? MoveType::First : MoveType::Second, true);
  expect(cyclic_wu(chain_of_drawing(d)) == 2 * n + 1, "cyclic Wu number");
  return d;
}

std::array<long, 4> four(const std::vector<long>& p) { return {p[0], p[1], p[2], p[3]}; }

}  // namespace

std::vector<std::string> family_names() {
  return {"map_k4_windings", "ae_k3_winding", "ae_k4_w123_4", "ae_k4_windings", "ae_k4_morozov",
          "ae_k5m45_w123_5", "triod_wu",      "cycle_wu"};
}

std::size_t family_arity(std::string_view family) {
  if (family == "map_k4_windings" || family == "ae_k4_windings") return 4;
  if (family == "ae_k4_morozov") return 0;
  if (family == "ae_k3_winding" || family == "ae_k4_w123_4" || family == "ae_k5m45_w123_5" ||
      family == "triod_wu" || family == "cycle_wu") {
    return 1;
  }
  throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

Drawing generate(const ExampleSpec& spec) {
  const std::size_t arity = family_arity(spec.family);
  if (spec.params.size() != arity) {
    throw std::invalid_argument("family " + spec.family + " takes " + std::to_string(arity) + " parameter(s)");
  }
  for (long p : spec.params) {
    if (p < -1000 || p > 1000) throw std::invalid_argument("parameter out of range [-1000, 1000]");
  }
  const auto& p = spec.params;
  if (spec.family == "map_k4_windings") return map_k4_windings(four(p));
  if (spec.family == "ae_k3_winding") return ae_k3_winding(p[0]);
  if (spec.family == "ae_k4_w123_4") return ae_k4_w123_4(p[0]);
  if (spec.family == "ae_k4_windings") return ae_k4_windings(four(p));
  if (spec.family == "ae_k4_morozov") return morozov_drawing();
  if (spec.family == "ae_k5m45_w123_5") return ae_k5m45_w123_5(p[0]);
  if (spec.family == "triod_wu") return triod_wu(p[0]);
  return cycle_wu(p[0]);
}

Triod triod_of_drawing(const Drawing& d) {
  if (!(d.graph() == triod_graph())) throw std::invalid_argument("expected a drawing of K_{3,1}");
  return triod_of(d, {1, true}, {Vertex{1}, Vertex{2}, Vertex{3}});
}

TriangleChain chain_of_drawing(const Drawing& d) { return chain_of(d, {Vertex{1}, Vertex{2}, Vertex{3}}); }

// ---------------------------------------------------------------------------

Drawing random_general_position_map(const Graph& g, std::uint64_t seed, int grid, int bends, int max_retries) {
  if (grid < 2 || bends < 0) throw std::invalid_argument("random map: need grid >= 2 and bends >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, grid - 1);
  auto point = [&] { return Point2(coord(rng), coord(rng)); };
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Point2> placement;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) placement.push_back(point());
    std::vector<Polyline> lines;
    bool ok = true;
    for (const Edge& e : g.edges()) {
      std::vector<Point2> pts{placement[e.u]};
      for (int b = 0; b < bends; ++b) pts.push_back(point());
      pts.push_back(placement[e.v]);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) ok = ok && !(pts[i] == pts[i + 1]);
      if (!ok) break;
      lines.emplace_back(std::move(pts));
    }
    if (!ok) continue;
    Drawing d(g, std::move(placement), std::move(lines));
    if (validate_general_position(d).ok()) return d;
  }
  throw std::runtime_error("random map: retry budget exhausted");
}

std::optional<Drawing> random_finger_move(const Drawing& d, std::mt19937_64& rng) {
  const Graph& g = d.graph();
  RouteOptions opts;
  opts.max_attempts = 8;
  const std::size_t e = std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng);
  const Edge& moved = g.edges()[e];
  const MoveType type = std::bernoulli_distribution(0.5)(rng) ? MoveType::First : MoveType::Second;
  std::vector<std::size_t> free_vertices;
  std::vector<std::size_t> edge_targets;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!moved.incident(v)) free_vertices.push_back(v);
  for (std::size_t f = 0; f < g.edges().size(); ++f)
    if (!g.edges()[f].adjacent(moved)) edge_targets.push_back(f);

  // Vertex groups whose boundary edges all touch the moved edge; a loop around
  // any other group has to cross a non-adjacent edge.
  std::vector<std::vector<std::size_t>> groups;
  if (free_vertices.size() <= 10) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << free_vertices.size()); ++mask) {
      std::vector<bool> in(g.vertex_count(), false);
      std::vector<std::size_t> group;
      for (std::size_t i = 0; i < free_vertices.size(); ++i) {
        if (mask >> i & 1) {
          in[free_vertices[i]] = true;
          group.push_back(free_vertices[i]);
        }
      }
      bool ok = true;
      for (const Edge& f : g.edges()) ok = ok && (in[f.u] == in[f.v] || f.adjacent(moved));
      if (ok) groups.push_back(std::move(group));
    }
  }
  if (groups.empty())
    for (std::size_t v : free_vertices) groups.push_back({v});

  const bool use_edge = !edge_targets.empty() && (groups.empty() || std::bernoulli_distribution(0.5)(rng));
  if (!use_edge && groups.empty()) return std::nullopt;
  try {
    FingerMoveSpec spec;
    if (use_edge) {
      const std::size_t f = edge_targets[std::uniform_int_distribution<std::size_t>(0, edge_targets.size() - 1)(rng)];
      spec = guide_loop_around_segment(d, e, f, type, opts);
    } else {
      const auto& group = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
      spec = guide_loop_around_vertices(d, e, group, type, opts);
    }
    Drawing next = finger_move(d, spec);
    if (!is_almost_embedding(next)) return std::nullopt;
    return next;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

Drawing random_finger_walk(const Drawing& d, std::uint64_t seed, std::size_t steps, std::size_t* applied) {
  std::mt19937_64 rng(seed);
  Drawing cur = d;
  std::size_t n = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    if (auto next = random_finger_move(cur, rng)) {
      cur = std::move(*next);
      ++n;
    }
  }
  if (applied) *applied = n;
  return cur;
}

std::string exploration_base(std::string_view graph) {
  if (graph == "k4") return "triangle_center_k4";
  if (graph == "k5m45") return "planar_k5_minus_45";
  if (graph == "cube") return "cube_nested_squares";
  if (graph == "octahedron") return "octahedron_planar";
  throw std::invalid_argument("explore: graph is one of k4, k5m45, cube, octahedron");
}

ExplorationResult explore_profiles(std::string_view graph, std::size_t budget, std::uint64_t seed,
                                   std::size_t cycle_cap) {
  Drawing d = base_drawing(exploration_base(graph));
  const Graph& g = d.graph();
  const auto cycles = enumerate_cycles(g, cycle_cap);
  ExplorationResult out;
  out.graph = std::string(graph);
  auto record = [&](const Drawing& x) {
    InvariantProfile p = invariant_profile(x, cycles);
    if (std::find(out.profiles.begin(), out.profiles.end(), p) == out.profiles.end()) out.profiles.push_back(std::move(p));
  };
  record(d);

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < budget; ++i) {
    ++out.attempts;
    if (auto next = random_finger_move(d, rng)) {
      d = std::move(*next);
      ++out.accepted;
      record(d);
    }
  }
  return out;
}

}  // namespace wulab
