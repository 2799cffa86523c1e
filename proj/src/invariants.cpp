#include "wulab/invariants.hpp"

#include "wulab/batch.hpp"

#include <functional>

namespace wulab {

namespace {

std::string cycle_name(const Graph& g, const Cycle& c) { return c.label(g); }

void require_k4(const Graph& g) {
  if (!(g == complete_graph(4))) throw std::invalid_argument("expected a drawing of K_4");
}

PreconditionError not_general_position(const GeneralPositionReport& r) {
  const auto& issue = r.issues.front();
  return PreconditionError("not in general position: " + to_string(issue.kind) + " at " + to_string(issue.witness),
                           issue.witness);
}

long wu_closure(long k1, long k2, long k3, const Point2& a1, const Point2& a2, const Point2& a3) {
  // The three endpoint angles are those of triangle A1A2A3 and sum to +-pi.
  int s = orient(a1, a2, a3);
  if (s == 0) s = 1;
  return 2 * (k1 + k2 + k3) + s;
}

}  // namespace

long winding_of_vertex(const Drawing& d, const Cycle& c, std::size_t v) {
  const ClosedPolyline line = restriction_to_cycle(d, c);
  const Point2& p = d.placement(v);
  if (find_segment_containing(line, p)) {
    throw VertexOnCycleError(d.graph().vertices()[v].label(), cycle_name(d.graph(), c), p);
  }
  return winding_number(line, p);
}

Cycle k4_cycle(const Graph& g, int j) {
  std::vector<Vertex> labels;
  for (int i = 1; i <= 4; ++i)
    if (i != j) labels.push_back({i, false});
  return make_cycle(g, labels);
}

std::array<long, 4> k4_profile(const Drawing& d) {
  require_k4(d.graph());
  std::array<long, 4> out{};
  for (int j = 1; j <= 4; ++j) out[j - 1] = winding_of_vertex(d, k4_cycle(d.graph(), j), d.graph().index_of({j}));
  return out;
}

long k4_alternating_sum(const Drawing& d, const Point2& o) {
  require_k4(d.graph());
  long sum = 0;
  for (int j = 1; j <= 4; ++j) {
    const ClosedPolyline line = restriction_to_cycle(d, k4_cycle(d.graph(), j));
    const long w = winding_number(line, o);
    sum += (j % 2 == 0) ? w : -w;
  }
  return sum;
}

long k4_alternating_profile_sum(const Drawing& d) {
  const auto p = k4_profile(d);
  return -p[0] + p[1] - p[2] + p[3];
}

RadonCount radon_count(const Drawing& d) {
  require_k4(d.graph());
  const auto gp = validate_general_position(d);
  if (!gp.ok()) throw not_general_position(gp);
  RadonCount out;
  out.crossings = count_nonadjacent_crossings(d, gp);
  for (int j = 1; j <= 4; ++j) {
    const ClosedPolyline line = restriction_to_cycle(d, k4_cycle(d.graph(), j));
    if (mod2_interior_contains(line, d.placement(Vertex{j}))) ++out.interior_vertices;
  }
  return out;
}

std::size_t van_kampen_crossings(const Drawing& d) {
  if (!(d.graph() == complete_graph(5))) throw std::invalid_argument("expected a drawing of K_5");
  const auto gp = validate_general_position(d);
  if (!gp.ok()) throw not_general_position(gp);
  return count_nonadjacent_crossings(d, gp);
}

// ---------------------------------------------------------------------------

void validate(const Triod& t) {
  for (int m = 0; m < 3; ++m) {
    if (!(t.legs[m].front() == t.center)) throw PreconditionError("triod leg does not start at the centre", t.center);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && find_segment_containing(t.legs[j], t.end(i))) {
        throw PreconditionError("triod: A" + std::to_string(i + 1) + " lies on l" + std::to_string(j + 1), t.end(i));
      }
    }
  }
}

void validate(const TriangleChain& c) {
  for (int m = 0; m < 3; ++m) {
    if (!(c.sides[m].back() == c.sides[(m + 1) % 3].front())) {
      throw PreconditionError("triangle chain: l" + std::to_string(m + 1) + " does not end where l" +
                                  std::to_string((m + 1) % 3 + 1) + " starts",
                              c.sides[m].back());
    }
  }
  for (int m = 0; m < 3; ++m) {
    if (find_segment_containing(c.sides[(m + 1) % 3], c.corner(m))) {
      throw PreconditionError("triangle chain: A" + std::to_string(m + 1) + " lies on l" +
                                  std::to_string((m + 1) % 3 + 1),
                              c.corner(m));
    }
  }
}

long triodic_wu(const Triod& t) {
  validate(t);
  const auto& [l1, l2, l3] = t.legs;
  const long k1 = partial_winding(concat(reverse(l2), l3), t.end(0)).whole;
  const long k2 = partial_winding(concat(reverse(l1), l2), t.end(2)).whole;
  const long k3 = partial_winding(concat(reverse(l3), l1), t.end(1)).whole;
  return wu_closure(k1, k2, k3, t.end(0), t.end(1), t.end(2));
}

long cyclic_wu(const TriangleChain& c) {
  validate(c);
  const auto& [l1, l2, l3] = c.sides;
  const long k1 = partial_winding(l2, c.corner(0)).whole;
  const long k2 = partial_winding(l1, c.corner(2)).whole;
  const long k3 = partial_winding(l3, c.corner(1)).whole;
  return wu_closure(k1, k2, k3, c.corner(0), c.corner(1), c.corner(2));
}

Triod triod_of(const Drawing& d, const Vertex& center, const std::array<Vertex, 3>& ends) {
  return Triod{d.placement(center),
               {d.edge_line(center, ends[0]), d.edge_line(center, ends[1]), d.edge_line(center, ends[2])}};
}

TriangleChain chain_of(const Drawing& d, const std::array<Vertex, 3>& c) {
  return TriangleChain{{d.edge_line(c[0], c[1]), d.edge_line(c[1], c[2]), d.edge_line(c[2], c[0])}};
}

namespace approx {

double triodic_wu(const Triod& t) {
  const auto& [l1, l2, l3] = t.legs;
  return 2 * (approx::partial_winding(concat(reverse(l2), l3), t.end(0)) + approx::partial_winding(concat(reverse(l1), l2), t.end(2)) +
              approx::partial_winding(concat(reverse(l3), l1), t.end(1)));
}

double cyclic_wu(const TriangleChain& c) {
  const auto& [l1, l2, l3] = c.sides;
  return 2 * (approx::partial_winding(l2, c.corner(0)) + approx::partial_winding(l1, c.corner(2)) + approx::partial_winding(l3, c.corner(1)));
}

}  // namespace approx

// ---------------------------------------------------------------------------

FamilyMatch classify(const Graph& g) {
  if (g == complete_graph(4)) return {GraphFamily::K4, {}, {}};
  if (g == minus_edge(complete_graph(5), {4}, {5})) return {GraphFamily::K5Minus45, {}, {}};
  const Graph k33 = complete_bipartite_graph(3, 3);
  if (g.vertices() == k33.vertices() && g.edges().size() == 8) {
    for (const Edge& e : k33.edges()) {
      const Vertex a = k33.vertices()[e.u];
      const Vertex b = k33.vertices()[e.v];
      if (g == minus_edge(k33, a, b)) return {GraphFamily::K33MinusEdge, a, b};
    }
  }
  return {};
}

namespace {

std::string wu_name(const Graph& g, std::size_t center, const std::array<std::size_t, 3>& ends) {
  std::string s = "wu(";
  for (int m = 0; m < 3; ++m) {
    if (m) s += ",";
    s += "f|" + g.vertices()[center].label() + g.vertices()[ends[m]].label();
  }
  return s + ")";
}

std::string chain_name(const Graph& g, const std::array<std::size_t, 3>& c) {
  std::string s = "wu(";
  for (int m = 0; m < 3; ++m) {
    if (m) s += ",";
    s += "f|" + g.vertices()[c[m]].label() + g.vertices()[c[(m + 1) % 3]].label();
  }
  return s + ")";
}

std::string wf_name(const Graph& g, const Cycle& c, std::size_t v) {
  return "w_f(" + c.label(g) + "," + g.vertices()[v].label() + ")";
}

struct Recorder {
  TheoremReport& report;
  void run(const std::string& id, const std::function<StatementResult()>& body) {
    try {
      StatementResult r = body();
      r.id = id;
      report.statements.push_back(std::move(r));
    } catch (const PreconditionError& e) {
      StatementResult r;
      r.id = id;
      r.quantity = "undefined";
      r.expected = std::string("undefined: ") + e.what();
      r.pass = false;
      report.statements.push_back(std::move(r));
    }
  }
};

long triod_wu_at(const Drawing& d, std::size_t center, const std::array<std::size_t, 3>& ends) {
  const auto& vs = d.graph().vertices();
  return triodic_wu(triod_of(d, vs[center], {vs[ends[0]], vs[ends[1]], vs[ends[2]]}));
}

long chain_wu_at(const Drawing& d, const std::array<std::size_t, 3>& c) {
  const auto& vs = d.graph().vertices();
  return cyclic_wu(chain_of(d, {vs[c[0]], vs[c[1]], vs[c[2]]}));
}

}  // namespace

TheoremReport check_theorems(const Drawing& d) {
  const Graph& g = d.graph();
  TheoremReport report;
  const FamilyMatch match = classify(g);
  report.supported = match.family != GraphFamily::Other;
  report.almost_embedding = is_almost_embedding(d);
  Recorder rec{report};

  switch (match.family) {
    case GraphFamily::K4: {
      report.family = "K_4";
      rec.run("thm5.2", [&] {
        StatementResult r;
        r.quantity = "sum_j w_f(C_j,j)";
        r.expected = "odd";
        for (int j = 1; j <= 4; ++j) {
          const Cycle c = k4_cycle(g, j);
          const std::size_t v = g.index_of({j});
          const long w = winding_of_vertex(d, c, v);
          r.terms.emplace_back(wf_name(g, c, v), w);
          r.value += w;
        }
        r.pass = r.value % 2 != 0;
        return r;
      });
      rec.run("rel6.4a", [&] {
        StatementResult r;
        const long a = chain_wu_at(d, {0, 1, 2});
        const long b = triod_wu_at(d, 3, {0, 1, 2});
        const Cycle c = k4_cycle(g, 4);
        const long w = winding_of_vertex(d, c, 3);
        r.quantity = chain_name(g, {0, 1, 2}) + " + " + wu_name(g, 3, {0, 1, 2});
        r.value = a + b;
        r.expected = "= 2 " + wf_name(g, c, 3) + " = " + std::to_string(2 * w);
        r.terms = {{chain_name(g, {0, 1, 2}), a}, {wu_name(g, 3, {0, 1, 2}), b}, {wf_name(g, c, 3), w}};
        r.pass = a + b == 2 * w;
        return r;
      });
      break;
    }
    case GraphFamily::K5Minus45: {
      report.family = "K_5-45";
      const Cycle c = make_cycle(g, {{1}, {2}, {3}});
      auto diff = [&](StatementResult& r) {
        const long w4 = winding_of_vertex(d, c, 3);
        const long w5 = winding_of_vertex(d, c, 4);
        r.quantity = wf_name(g, c, 3) + " - " + wf_name(g, c, 4);
        r.terms = {{wf_name(g, c, 3), w4}, {wf_name(g, c, 4), w5}};
        r.value = w4 - w5;
      };
      rec.run("thm5.5a", [&] {
        StatementResult r;
        diff(r);
        r.expected = "odd";
        r.pass = r.value % 2 != 0;
        return r;
      });
      rec.run("thm5.5b", [&] {
        StatementResult r;
        diff(r);
        r.expected = "+-1";
        r.pass = r.value == 1 || r.value == -1;
        return r;
      });
      rec.run("rel6.5a", [&] {
        StatementResult r;
        StatementResult dr;
        diff(dr);
        const long a = triod_wu_at(d, 3, {0, 1, 2});
        const long b = triod_wu_at(d, 4, {0, 1, 2});
        r.quantity = wu_name(g, 3, {0, 1, 2}) + " - " + wu_name(g, 4, {0, 1, 2});
        r.value = a - b;
        r.expected = "= 2 (" + dr.quantity + ") = " + std::to_string(2 * dr.value);
        r.terms = {{wu_name(g, 3, {0, 1, 2}), a}, {wu_name(g, 4, {0, 1, 2}), b}};
        r.terms.insert(r.terms.end(), dr.terms.begin(), dr.terms.end());
        r.pass = a - b == 2 * dr.value;
        return r;
      });
      break;
    }
    case GraphFamily::K33MinusEdge: {
      report.family = "K_33-ab";
      std::vector<Vertex> xs;
      std::vector<Vertex> ys;
      for (int i = 1; i <= 3; ++i) {
        if (!(Vertex{i, false} == match.a)) xs.push_back({i, false});
        if (!(Vertex{i, true} == match.b)) ys.push_back({i, true});
      }
      const Cycle c = make_cycle(g, {xs[0], ys[0], xs[1], ys[1]});
      report.note = "a = " + match.a.label() + ", b = " + match.b.label() + ", C = " + c.label(g);
      rec.run("stmt5.7a", [&] {
        StatementResult r;
        const std::size_t ia = g.index_of(match.a);
        const std::size_t ib = g.index_of(match.b);
        const long wa = winding_of_vertex(d, c, ia);
        const long wb = winding_of_vertex(d, c, ib);
        r.quantity = wf_name(g, c, ia) + " - " + wf_name(g, c, ib);
        r.terms = {{wf_name(g, c, ia), wa}, {wf_name(g, c, ib), wb}};
        r.value = wa - wb;
        r.expected = "odd";
        r.pass = r.value % 2 != 0;
        return r;
      });
      break;
    }
    case GraphFamily::Other:
      report.family = "unsupported";
      report.note = "theorem checks cover K_4, K_5-45 and K_33 minus an edge";
      return report;
  }
  if (!report.almost_embedding) report.note += (report.note.empty() ? "" : "; ") + std::string("not an almost embedding, contracts do not apply");
  return report;
}

// ---------------------------------------------------------------------------

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap, bool* truncated) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Cycle> out;
  bool more = false;
  std::vector<std::size_t> path;
  std::vector<char> used(n, 0);

  // Depth-first search over paths of exactly `len` vertices from `start`, all
  // other vertices larger than start; emits in lexicographic order.
  std::function<bool(std::size_t)> extend = [&](std::size_t len) -> bool {
    const std::size_t last = path.back();
    if (path.size() == len) {
      if (path[1] < last && std::binary_search(adj[last].begin(), adj[last].end(), path[0])) {
        if (out.size() == cap) {
          more = true;
          return false;
        }
        out.push_back(Cycle{path});
      }
      return true;
    }
    for (std::size_t w : adj[last]) {
      if (w <= path[0] || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      const bool go = extend(len);
      path.pop_back();
      used[w] = 0;
      if (!go) return false;
    }
    return true;
  };

  for (std::size_t len = 3; len <= n && !more; ++len) {
    for (std::size_t s = 0; s < n && !more; ++s) {
      path = {s};
      used.assign(n, 0);
      used[s] = 1;
      if (!extend(len)) break;
    }
  }
  if (truncated) *truncated = more;
  return out;
}

InvariantProfile invariant_profile(const Drawing& d, const std::optional<std::vector<Cycle>>& cycles, std::size_t cap) {
  InvariantProfile p;
  if (cycles) {
    p.cycles = *cycles;
  } else {
    p.cycles = enumerate_cycles(d.graph(), cap, &p.truncated);
  }
  const std::size_t nv = d.graph().vertex_count();
  const auto values = batch::profile_values_parallel(d, p.cycles);
  for (std::size_t c = 0; c < p.cycles.size(); ++c) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (values[c * nv + v]) p.entries.push_back({p.cycles[c], v, *values[c * nv + v]});
    }
  }
  return p;
}

std::vector<std::pair<std::string, long>> applicable_wu_numbers(const Drawing& d) {
  const Graph& g = d.graph();
  std::vector<std::pair<std::string, long>> out;
  auto find = [&](const Vertex& v) { return g.find(v); };
  auto i1 = find({1});
  auto i2 = find({2});
  auto i3 = find({3});
  if (!i1 || !i2 || !i3) return out;
  const std::array<std::size_t, 3> tri{*i1, *i2, *i3};
  auto has = [&](std::size_t a, std::size_t b) { return g.edge_index(a, b).has_value(); };
  if (has(tri[0], tri[1]) && has(tri[1], tri[2]) && has(tri[2], tri[0])) {
    try {
      out.emplace_back(chain_name(g, tri), chain_wu_at(d, tri));
    } catch (const PreconditionError&) {
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == tri[0] || v == tri[1] || v == tri[2]) continue;
    if (!has(v, tri[0]) || !has(v, tri[1]) || !has(v, tri[2])) continue;
    try {
      out.emplace_back(wu_name(g, v, tri), triod_wu_at(d, v, tri));
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

}  // namespace wulab
