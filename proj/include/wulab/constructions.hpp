#pragma once

// Base drawings, finger moves, an automatic router for the standard moves,
// and generators for drawings with prescribed invariants.

#include "wulab/invariants.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <variant>

namespace wulab {

Drawing base_drawing(std::string_view name);
std::vector<std::string> base_drawing_names();

enum class MoveType { First, Second };

std::string to_string(MoveType t);
MoveType parse_move_type(std::string_view s);

/// Reroutes `edge` through a loop attached to one of its segments.
///
/// The loop runs X_a, ..., X_b where X_a and X_b are the points at parameters
/// t_in < t_out on segment `segment` of the edge polyline (stored orientation).
/// Its implicit closing side X_b -> X_a lies on the edge. The new polyline
/// follows the old one to X_a, the loop to X_b, then the old one again, so the
/// winding number of any cycle through the edge around a point p changes by
/// traverses(C, edge) * w(loop, p).
///
/// First type: the loop has positive signed area. Second type: negative.
struct FingerMoveSpec {
  std::size_t edge = 0;
  std::size_t segment = 0;
  Rational t_in;
  Rational t_out;
  ClosedPolyline loop{{Point2(0, 0)}};
  MoveType type = MoveType::First;
};

struct FingerMoveOptions {
  /// When false, the loop may cross only edges adjacent to the moved edge, so
  /// an almost embedding stays one.
  bool allow_nonadjacent_crossings = false;
};

class FingerMoveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Signed area of a closed polyline (shoelace formula).
Rational signed_area(const ClosedPolyline& line);

/// Validates the spec against d and applies it. Throws FingerMoveError with a
/// witness point on any violation: the loop touching the edge away from X_a
/// and X_b, touching a vertex image, meeting another edge other than in a
/// transverse interior crossing (or at all, for non-adjacent edges unless
/// allowed), folding back on itself, or a type that disagrees with the loop's
/// signed area.
Drawing finger_move(const Drawing& d, const FingerMoveSpec& spec, const FingerMoveOptions& opts = {});

// ---------------------------------------------------------------------------
// Routing

struct RouteOptions {
  bool preserve_almost_embedding = true;
  int max_attempts = 16;
};

class RoutingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Loop from the nearest point of the edge around a small rectangle containing
/// the targets. Every target vertex ends up with loop winding +1 (First) or -1
/// (Second), every other vertex with 0. Throws RoutingError naming the last
/// obstruction when no clearance works.
FingerMoveSpec guide_loop_around_vertex(const Drawing& d, std::size_t edge, std::size_t vertex,
                                        MoveType type = MoveType::First, const RouteOptions& opts = {});
FingerMoveSpec guide_loop_around_segment(const Drawing& d, std::size_t edge, std::size_t target_edge,
                                         MoveType type = MoveType::First, const RouteOptions& opts = {});
FingerMoveSpec guide_loop_around_vertices(const Drawing& d, std::size_t edge, const std::vector<std::size_t>& vertices,
                                          MoveType type = MoveType::First, const RouteOptions& opts = {});

// ---------------------------------------------------------------------------
// Generators

struct ExampleSpec {
  std::string family;
  std::vector<long> params;  // n, or n_1..n_4
};

std::vector<std::string> family_names();

/// Number of integer parameters the family takes.
std::size_t family_arity(std::string_view family);

/// Generated drawing for a family; triods and triangle chains come back as
/// drawings of K_{3,1} and K_3 (use triod_of / chain_of to extract them).
/// Throws std::invalid_argument on a constraint violation and
/// std::logic_error if the construction misses its target.
Drawing generate(const ExampleSpec& spec);

Triod triod_of_drawing(const Drawing& d);          // K_{3,1}: legs 1'1, 1'2, 1'3
TriangleChain chain_of_drawing(const Drawing& d);  // f|12, f|23, f|31

/// Random map with integer vertex placements in [0, grid)^2 and `bends`
/// random interior points per edge, resampled until in general position.
Drawing random_general_position_map(const Graph& g, std::uint64_t seed, int grid = 100, int bends = 2,
                                    int max_retries = 200);

/// One random finger move of a random edge around a non-adjacent segment or a
/// group of non-incident vertices whose boundary edges all touch the moved edge.
/// Empty when the router gives up or the result is not an almost embedding.
std::optional<Drawing> random_finger_move(const Drawing& d, std::mt19937_64& rng);

/// `steps` attempts of random_finger_move; `applied` receives the number kept.
Drawing random_finger_walk(const Drawing& d, std::uint64_t seed, std::size_t steps, std::size_t* applied = nullptr);

struct ExplorationResult {
  std::string graph;
  std::size_t attempts = 0;
  std::size_t accepted = 0;
  std::vector<InvariantProfile> profiles;  // distinct, in order of discovery
};

/// Base embedding the explorer starts from.
std::string exploration_base(std::string_view graph);

/// Random walks of almost-embedding-preserving finger moves from a base
/// embedding; graph one of "k4", "k5m45", "cube", "octahedron".
ExplorationResult explore_profiles(std::string_view graph, std::size_t budget, std::uint64_t seed,
                                   std::size_t cycle_cap = kDefaultCycleCap);

}  // namespace wulab
