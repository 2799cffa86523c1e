#pragma once

// Graphs, piecewise-linear maps of graphs to the plane, and the validators
// for the almost-embedding and general-position conditions.

#include "wulab/winding.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace wulab {

/// Vertex label: a small positive integer, optionally primed (the second part
/// of a bipartite graph, written "3'").
struct Vertex {
  int index = 0;
  bool primed = false;

  std::string label() const { return std::to_string(index) + (primed ? "'" : ""); }

  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (a.primed != b.primed) return a.primed <=> b.primed;
    return a.index <=> b.index;
  }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

Vertex parse_vertex(std::string_view label);

/// Edge as a pair of vertex indices into Graph::vertices(), with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool incident(std::size_t w) const { return u == w || v == w; }
  bool adjacent(const Edge& other) const { return incident(other.u) || incident(other.v); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple graph: no loops, no multiple edges. Vertices are kept sorted by label
/// and edges sorted lexicographically, so two graphs built from the same data
/// compare equal.
class Graph {
 public:
  Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::optional<std::size_t> find(const Vertex& v) const;
  std::size_t index_of(const Vertex& v) const;  // throws on unknown label
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
  std::string edge_label(std::size_t e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph minus_edge(const Graph& g, const Vertex& a, const Vertex& b);
Graph cube_graph();
Graph octahedron_graph();
Graph triod_graph();

/// Named graphs: "K_n" {n}, "K_mn" {m, n}, "K_n_minus_edge" {n, u, v},
/// "K_mn_minus_edge" {m, n, u, v}, "cube", "octahedron", "triod".
/// Parameters are passed as label strings where vertices are meant.
Graph builtin_graph(std::string_view kind, const std::vector<std::pair<std::string, std::string>>& params = {});

/// A piecewise-linear map of a graph: a point per vertex and a polyline per
/// edge. Each edge polyline is stored oriented from its lower to its higher
/// endpoint (Edge::u to Edge::v); the constructor accepts either orientation.
class Drawing {
 public:
  Drawing(Graph graph, std::vector<Point2> placement, std::vector<Polyline> edge_lines);

  const Graph& graph() const { return graph_; }
  const std::vector<Point2>& placements() const { return placement_; }
  const Point2& placement(std::size_t v) const { return placement_[v]; }
  const Point2& placement(const Vertex& v) const { return placement_[graph_.index_of(v)]; }
  const std::vector<Polyline>& edge_lines() const { return edge_lines_; }
  const Polyline& edge_line(std::size_t e) const { return edge_lines_[e]; }

  /// The polyline of edge {a, b} oriented from a to b.
  Polyline edge_line(std::size_t a, std::size_t b) const;
  Polyline edge_line(const Vertex& a, const Vertex& b) const;

  friend bool operator==(const Drawing&, const Drawing&) = default;

 private:
  Graph graph_;
  std::vector<Point2> placement_;
  std::vector<Polyline> edge_lines_;
};

/// Same drawing with one edge polyline replaced.
Drawing with_edge_line(const Drawing& d, std::size_t e, Polyline line);

/// f = g o sigma: vertex v of the result is drawn where g draws sigma(v).
/// sigma is given as label pairs (v, sigma(v)); unlisted vertices are fixed.
Drawing relabel(const Drawing& g, const std::vector<std::pair<Vertex, Vertex>>& sigma);

/// Directed cycle given by vertex indices, read cyclically.
struct Cycle {
  std::vector<std::size_t> vertices;

  bool contains(std::size_t v) const;
  /// +1 if the cycle walks edge e from e.u to e.v, -1 if the other way, 0 if absent.
  int traverses(const Edge& e) const;
  Cycle reversed() const;
  std::string label(const Graph& g) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Validates that consecutive labels are adjacent and all labels distinct.
Cycle make_cycle(const Graph& g, const std::vector<Vertex>& labels);
/// Parses "123" or "1 2' 3 3'" style cycle strings.
Cycle parse_cycle(const Graph& g, std::string_view text);

ClosedPolyline restriction_to_cycle(const Drawing& d, const Cycle& c);

// ---------------------------------------------------------------------------
// Almost embedding

struct EdgesIntersect {
  std::size_t e = 0;
  std::size_t f = 0;
  std::variant<Point2, Segment> witness;
};
struct VertexOnEdge {
  std::size_t vertex = 0;
  std::size_t edge = 0;
  Point2 witness;
};
struct CoincidentVertices {
  std::size_t a = 0;
  std::size_t b = 0;
  Point2 witness;
};
using Violation = std::variant<EdgesIntersect, VertexOnEdge, CoincidentVertices>;

struct ViolationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ViolationReport validate_almost_embedding(const Drawing& d);
inline bool is_almost_embedding(const Drawing& d) { return validate_almost_embedding(d).ok(); }

// ---------------------------------------------------------------------------
// General position

/// A transverse double point between two edge images (possibly one edge
/// crossing itself), interior to both segments involved.
struct Crossing {
  std::size_t e = 0;
  std::size_t f = 0;
  Point2 at;
};

struct PositionIssue {
  enum class Kind { CoincidentVertices, VertexOnEdge, Overlap, MultiplePoint, CrossingAtBend };
  Kind kind;
  std::vector<std::size_t> edges;
  std::vector<std::size_t> vertices;
  Point2 witness;
};

std::string to_string(PositionIssue::Kind kind);

struct GeneralPositionReport {
  std::vector<PositionIssue> issues;
  std::vector<Crossing> crossings;  // sorted by point, then edges
  bool ok() const { return issues.empty(); }
};

GeneralPositionReport validate_general_position(const Drawing& d);

/// Crossings between images of non-adjacent edges, in a general-position drawing.
std::size_t count_nonadjacent_crossings(const Drawing& d, const GeneralPositionReport& report);

// ---------------------------------------------------------------------------
// Parity tools

/// |L cap P| mod 2. Rejects configurations that are not in general position
/// (shared vertices, overlaps, intersections at vertices, multiple points).
int crossing_parity(const ClosedPolyline& l, const Polyline& p);

/// Odd number of crossings of a generic ray from x with L.
bool mod2_interior_contains(const ClosedPolyline& l, const Point2& x);

}  // namespace wulab
