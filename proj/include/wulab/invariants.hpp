#pragma once

// Integer and parity invariants of drawings: w_f(C, v), the K_4 alternating
// sum, Radon and van Kampen numbers, triodic and cyclic Wu numbers, and the
// theorem checkers built from them.

#include "wulab/drawing.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wulab {

struct Parity {
  int value = 0;
  bool odd() const { return value == 1; }
  friend bool operator==(Parity, Parity) = default;
};

class VertexOnCycleError : public PreconditionError {
 public:
  VertexOnCycleError(const std::string& vertex, const std::string& cycle, const Point2& at)
      : PreconditionError("vertex " + vertex + " lies on the image of cycle " + cycle, at) {}
};

/// w_f(C, v)
long winding_of_vertex(const Drawing& d, const Cycle& c, std::size_t v);

/// C_j for K_4: the cycle 1234 with j deleted, in increasing order.
Cycle k4_cycle(const Graph& g, int j);

/// (w_f(C_1, 1), ..., w_f(C_4, 4)) for a K_4 drawing.
std::array<long, 4> k4_profile(const Drawing& d);

/// sum_j (-1)^j w(f|C_j, O). Zero for every map.
long k4_alternating_sum(const Drawing& d, const Point2& o);

/// sum_j (-1)^j w_f(C_j, j).
long k4_alternating_profile_sum(const Drawing& d);

struct RadonCount {
  std::size_t crossings = 0;         // between images of non-adjacent edges
  std::size_t interior_vertices = 0; // j with f(j) in the mod 2 interior of f(C_j)
  Parity parity() const { return {static_cast<int>((crossings + interior_vertices) % 2)}; }
};

/// Requires a general-position drawing of K_4.
RadonCount radon_count(const Drawing& d);
inline Parity radon_number(const Drawing& d) { return radon_count(d).parity(); }

/// Requires a general-position drawing of K_5.
std::size_t van_kampen_crossings(const Drawing& d);
inline Parity van_kampen_number(const Drawing& d) { return {static_cast<int>(van_kampen_crossings(d) % 2)}; }

/// Legs l_m from the centre O to A_m, with A_i not on l_j for i != j.
struct Triod {
  Point2 center;
  std::array<Polyline, 3> legs;
  const Point2& end(int m) const { return legs[m].back(); }
};

/// l_1: A_1 -> A_2, l_2: A_2 -> A_3, l_3: A_3 -> A_1, with A_i not on l_{i+1}.
struct TriangleChain {
  std::array<Polyline, 3> sides;
  const Point2& corner(int m) const { return sides[m].front(); }
};

/// Throw PreconditionError (with witness) when the invariants fail.
void validate(const Triod& t);
void validate(const TriangleChain& c);

/// 2 (w'(l2^-1 l3, A1) + w'(l1^-1 l2, A3) + w'(l3^-1 l1, A2))
long triodic_wu(const Triod& t);
/// 2 (w'(l2, A1) + w'(l1, A3) + w'(l3, A2))
long cyclic_wu(const TriangleChain& c);

/// Triod of the edges centre-a, centre-b, centre-c, each oriented away from the centre.
Triod triod_of(const Drawing& d, const Vertex& center, const std::array<Vertex, 3>& ends);
/// Chain f|ab, f|bc, f|ca.
TriangleChain chain_of(const Drawing& d, const std::array<Vertex, 3>& corners);

namespace approx {
double triodic_wu(const Triod& t);
double cyclic_wu(const TriangleChain& c);
}  // namespace approx

// ---------------------------------------------------------------------------
// Theorem checks

enum class GraphFamily { K4, K5Minus45, K33MinusEdge, Other };

struct FamilyMatch {
  GraphFamily family = GraphFamily::Other;
  Vertex a;  // K_{3,3} - ab: the deleted edge
  Vertex b;
};

FamilyMatch classify(const Graph& g);

struct StatementResult {
  std::string id;          // "thm5.2", "thm5.5a", ...
  std::string quantity;    // what was computed, e.g. "w_f(123,4) - w_f(123,5)"
  long value = 0;
  std::string expected;    // "odd", "+-1", "= 2 w_f(123,4)" ...
  bool pass = false;
  std::vector<std::pair<std::string, long>> terms;
};

struct TheoremReport {
  std::string family;  // "K_4", "K_5-45", "K_33-ab", "unsupported"
  bool supported = false;
  bool almost_embedding = false;
  /// Contracts apply only when the drawing is a supported almost embedding.
  bool applicable() const { return supported && almost_embedding; }
  std::string note;
  std::vector<StatementResult> statements;
};

TheoremReport check_theorems(const Drawing& d);

// ---------------------------------------------------------------------------
// Profiles

/// Simple cycles of length >= 3, each once, in canonical orientation (starts at
/// its smallest vertex, second vertex smaller than the last), ordered by length
/// then lexicographically. Stops after `cap` cycles.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap, bool* truncated = nullptr);

struct ProfileEntry {
  Cycle cycle;
  std::size_t vertex = 0;
  long winding = 0;
  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

struct InvariantProfile {
  std::vector<Cycle> cycles;
  std::vector<ProfileEntry> entries;  // only (C, v) with v off C and f(v) off f(C)
  bool truncated = false;
  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

inline constexpr std::size_t kDefaultCycleCap = 64;

/// Uses the parallel kernel; see batch.hpp for the serial reference.
InvariantProfile invariant_profile(const Drawing& d, const std::optional<std::vector<Cycle>>& cycles = std::nullopt,
                                   std::size_t cap = kDefaultCycleCap);

/// Wu numbers that make sense for the drawing's graph, keyed by a readable name:
/// K_3 cyclic, K_{3,1} triodic, K_4 the triangle 123 and the triod at 4,
/// K_5 - 45 the triods at 4 and 5. Entries whose preconditions fail are skipped.
std::vector<std::pair<std::string, long>> applicable_wu_numbers(const Drawing& d);

}  // namespace wulab
