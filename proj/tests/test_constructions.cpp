#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

#include "wulab/checks.hpp"

#include <doctest.h>

#include <cmath>

using namespace wulab;

namespace {

Vertex v(int i, bool primed = false) { return {i, primed}; }

std::size_t edge(const Drawing& d, int a, int b) {
  return *d.graph().edge_index(d.graph().index_of(v(a)), d.graph().index_of(v(b)));
}

std::array<long, 4> tuple(long a, long b, long c, long e) { return {a, b, c, e}; }

}  // namespace

TEST_CASE("base drawings") {
  for (const auto& name : base_drawing_names()) {
    INFO(name);
    const Drawing d = base_drawing(name);
    CHECK(d.graph().vertex_count() > 0);
    const std::string file = "base_" + name + ".json";
    CHECK(io::drawing_to_json(d).dump() == fixtures::load(file).dump());
  }
  CHECK_THROWS_AS(base_drawing("heptagon"), std::invalid_argument);
  const Drawing sq = base_drawing("square_diagonals_k4");
  CHECK(sq.placement(v(3)) == Point2(4, 4));
  for (const auto& l : sq.edge_lines()) CHECK(l.size() == 2);
}

TEST_CASE("move types follow the loop orientation") {
  CHECK(signed_area(ClosedPolyline({{0, 0}, {2, 0}, {0, 2}})) == 2);
  CHECK(signed_area(ClosedPolyline({{0, 0}, {0, 2}, {2, 0}})) == -2);
  CHECK(parse_move_type("first") == MoveType::First);
  CHECK(parse_move_type("second") == MoveType::Second);
  CHECK(to_string(MoveType::Second) == "second");
  CHECK_THROWS_AS(parse_move_type("third"), std::invalid_argument);
}

TEST_CASE("finger move of edge 24 around vertex 1 of the square") {
  const Drawing sq = base_drawing("square_diagonals_k4");
  const std::size_t e24 = edge(sq, 2, 4);
  const auto spec = guide_loop_around_vertex(sq, e24, 0, MoveType::Second, {false});
  const Drawing moved = finger_move(sq, spec, {true});
  CHECK(k4_profile(moved) == tuple(1, 0, 0, 0));
  // the opposite loop orientation moves w_f(C_1, 1) the other way
  const auto first = guide_loop_around_vertex(sq, e24, 0, MoveType::First, {false});
  CHECK(k4_profile(finger_move(sq, first, {true})) == tuple(-1, 0, 0, 0));
  // only edge 24 changed
  for (std::size_t e = 0; e < sq.graph().edges().size(); ++e)
    if (e != e24) CHECK(moved.edge_line(e) == sq.edge_line(e));
}

TEST_CASE("finger move of edge 23 around the segment 14 of the triangle with centre") {
  const Drawing tc = base_drawing("triangle_center_k4");
  const auto spec = guide_loop_around_segment(tc, edge(tc, 2, 3), edge(tc, 1, 4), MoveType::First);
  const Drawing moved = finger_move(tc, spec);
  CHECK(validate_almost_embedding(moved).ok());
  const auto before = k4_profile(tc), after = k4_profile(moved);
  CHECK(std::abs(after[0] - before[0]) == 1);
  CHECK(std::abs(after[3] - before[3]) == 1);
  CHECK(after[1] == before[1]);
  CHECK(after[2] == before[2]);
}

TEST_CASE("a move and its opposite-type twin restore the profile") {
  for (const char* name : {"triangle_center_k4", "planar_k5_minus_45", "cube_nested_squares"}) {
    INFO(name);
    const Drawing d = base_drawing(name);
    const auto base = invariant_profile(d);
    int done = 0;
    for (std::size_t e = 0; e < d.graph().edges().size(); ++e) {
      for (std::size_t x = 0; x < d.graph().vertex_count(); ++x) {
        if (d.graph().edges()[e].incident(x)) continue;
        try {
          const Drawing once = finger_move(d, guide_loop_around_vertex(d, e, x, MoveType::First, {false}), {true});
          const Drawing twice =
              finger_move(once, guide_loop_around_vertex(once, e, x, MoveType::Second, {false}), {true});
          CHECK(invariant_profile(twice).entries == base.entries);
          CHECK(invariant_profile(once).entries != base.entries);
          ++done;
        } catch (const RoutingError&) {
        }
      }
    }
    CHECK(done > 0);
  }
}

TEST_CASE("finger move rejects bad specifications") {
  const Drawing tc = base_drawing("triangle_center_k4");
  const std::size_t e12 = edge(tc, 1, 2);
  FingerMoveSpec spec;
  spec.edge = e12;
  spec.segment = 0;
  spec.t_in = Rational(1, 4);
  spec.t_out = Rational(1, 2);
  // the loop dips below the edge and back: counterclockwise, so first type
  spec.loop = ClosedPolyline({{1, 0}, {1, -1}, {2, -1}, {2, 0}});
  spec.type = MoveType::First;
  CHECK_NOTHROW(finger_move(tc, spec));

  auto wrong_type = spec;
  wrong_type.type = MoveType::Second;
  CHECK_THROWS_AS(finger_move(tc, wrong_type), FingerMoveError);

  auto wrong_start = spec;
  wrong_start.loop = ClosedPolyline({{1, 1}, {1, -1}, {2, -1}, {2, 0}});
  CHECK_THROWS_AS(finger_move(tc, wrong_start), FingerMoveError);

  // loop over the top of the edge encloses vertex 4; it crosses 13, 14, 24 and also 34, which is not adjacent
  auto crossing = spec;
  crossing.t_out = Rational(5, 8);
  crossing.loop = ClosedPolyline({{1, 0}, {1, 2}, {Rational(5, 2), 2}, {Rational(5, 2), 0}});
  crossing.type = MoveType::Second;
  try {
    finger_move(tc, crossing);
    FAIL("expected rejection");
  } catch (const FingerMoveError& err) {
    CHECK(std::string(err.what()).find("3-4") != std::string::npos);
    CHECK(err.witness().has_value());
  }
  CHECK_NOTHROW(finger_move(tc, crossing, {true}));

  // transverse self-crossings are allowed, folding back is not
  auto self = spec;
  self.loop = ClosedPolyline({{1, 0}, {1, -2}, {3, -2}, {3, -1}, {0, -1}, {Rational(1, 2), -3}, {2, -3}, {2, 0}});
  self.type = sign(signed_area(self.loop)) > 0 ? MoveType::First : MoveType::Second;
  CHECK_NOTHROW(finger_move(tc, self));
  auto fold = spec;
  fold.loop = ClosedPolyline({{1, 0}, {1, -2}, {3, -2}, {1, -2}, {2, -1}, {2, 0}});
  fold.type = sign(signed_area(fold.loop)) > 0 ? MoveType::First : MoveType::Second;
  try {
    finger_move(tc, fold);
    FAIL("expected rejection");
  } catch (const FingerMoveError& err) {
    CHECK(std::string(err.what()).find("itself") != std::string::npos);
  }

  auto bad_params = spec;
  bad_params.t_in = Rational(1, 2);
  bad_params.t_out = Rational(1, 4);
  CHECK_THROWS_AS(finger_move(tc, bad_params), std::invalid_argument);
}

TEST_CASE("the anchor span must avoid other edges") {
  const Drawing sq = base_drawing("square_diagonals_k4");
  FingerMoveSpec spec;
  spec.edge = edge(sq, 2, 4);
  spec.segment = 0;
  spec.t_in = Rational(1, 4);
  spec.t_out = Rational(3, 4);  // contains the crossing with 13 at t = 1/2
  const Point2 a(3, 1), b(1, 3);
  spec.loop = ClosedPolyline({a, {5, 3}, {3, 5}, b});
  spec.type = MoveType::First;
  CHECK_THROWS_AS(finger_move(sq, spec, {true}), FingerMoveError);
}

TEST_CASE("router reports an obstructed corridor") {
  const Drawing pent = base_drawing("pentagon_k5");
  try {
    guide_loop_around_vertex(pent, edge(pent, 1, 2), 3, MoveType::First);
    FAIL("expected a routing error");
  } catch (const RoutingError& e) {
    CHECK(std::string(e.what()).find("edge 1-2") != std::string::npos);
    CHECK(e.witness().has_value());
  }
  CHECK_THROWS_AS(guide_loop_around_vertex(pent, edge(pent, 1, 2), 0), std::invalid_argument);
}

TEST_CASE("router finds the standard moves on the base drawings") {
  const Drawing sq = base_drawing("square_diagonals_k4");
  CHECK_NOTHROW(guide_loop_around_vertex(sq, edge(sq, 2, 4), 0, MoveType::First, {false}));
  const Drawing tc = base_drawing("triangle_center_k4");
  CHECK_NOTHROW(guide_loop_around_segment(tc, edge(tc, 2, 3), edge(tc, 1, 4)));
  CHECK_NOTHROW(guide_loop_around_vertices(tc, edge(tc, 1, 2), {2, 3}));
}

TEST_CASE("finger moves change windings locally by the loop winding") {
  gen::Rng r(51);
  int checked = 0;
  for (const char* name : {"triangle_center_k4", "planar_k5_minus_45", "square_diagonals_k4", "k33_minus_11"}) {
    const Drawing d = base_drawing(name);
    const auto cycles = enumerate_cycles(d.graph(), 64);
    for (std::size_t e = 0; e < d.graph().edges().size(); ++e) {
      for (std::size_t x = 0; x < d.graph().vertex_count(); ++x) {
        if (d.graph().edges()[e].incident(x)) continue;
        for (MoveType type : {MoveType::First, MoveType::Second}) {
          FingerMoveSpec spec;
          try {
            spec = guide_loop_around_vertex(d, e, x, type, {false});
          } catch (const RoutingError&) {
            continue;
          }
          const Drawing moved = finger_move(d, spec, {true});
          const Edge& moved_edge = d.graph().edges()[e];
          for (int k = 0; k < 4; ++k) {
            const Point2 p = r.fine_point(-2, 6);
            if (find_segment_containing(spec.loop, p)) continue;
            const int wl = winding_number(spec.loop, p);
            for (const auto& c : cycles) {
              try {
                const int before = winding_number(restriction_to_cycle(d, c), p);
                const int after = winding_number(restriction_to_cycle(moved, c), p);
                CHECK(after - before == c.traverses(moved_edge) * wl);
                ++checked;
              } catch (const PointOnCurveError&) {
              }
            }
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("finger moves preserve the K4 identity and almost embeddings") {
  gen::Rng r(52);
  std::mt19937_64 rng(52);
  const Drawing tc = base_drawing("triangle_center_k4");
  int moves = 0;
  for (int i = 0; i < 200; ++i) {
    const auto out = random_finger_move(tc, rng);
    if (!out) continue;
    ++moves;
    CHECK(validate_almost_embedding(*out).ok());
    for (int k = 0; k < 3; ++k) {
      const Point2 o = r.fine_point(-3, 7);
      std::optional<long> s;
      try {
        s = k4_alternating_sum(*out, o);
      } catch (const PointOnCurveError&) {
      }
      if (s) CHECK(*s == 0);
    }
  }
  CHECK(moves > 50);
}

TEST_CASE("finger walks keep drawings almost embedded") {
  for (const char* name : {"triangle_center_k4", "planar_k5_minus_45", "cube_nested_squares", "octahedron_planar"}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      std::size_t applied = 0;
      const Drawing d = random_finger_walk(base_drawing(name), seed, 6, &applied);
      CHECK(validate_almost_embedding(d).ok());
      CHECK(applied <= 6);
      CHECK(random_finger_walk(base_drawing(name), seed, 6) == d);
    }
  }
}

TEST_CASE("random moves on K5 minus 45 go around vertex groups") {
  // every single vertex of K5 - 45 has an edge not adjacent to any given edge,
  // so moves that keep the almost embedding enclose groups such as {3, 4, 5}
  const Drawing base = base_drawing("planar_k5_minus_45");
  const Cycle c = parse_cycle(base.graph(), "123");
  std::size_t moved = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    const auto next = random_finger_move(base, rng);
    if (!next) continue;
    ++moved;
    CHECK(validate_almost_embedding(*next).ok());
    CHECK(std::abs(winding_of_vertex(*next, c, 3) - winding_of_vertex(*next, c, 4)) == 1);
  }
  CHECK(moved >= 5);
}

// ---------------------------------------------------------------------------
// generators

TEST_CASE("family names and arity") {
  CHECK(family_names().size() == 8);
  CHECK(family_arity("ae_k4_windings") == 4);
  CHECK(family_arity("triod_wu") == 1);
  CHECK(family_arity("ae_k4_morozov") == 0);
  CHECK_THROWS_AS(family_arity("nope"), std::invalid_argument);
  CHECK_THROWS_AS(generate({"nope", {}}), std::invalid_argument);
  CHECK_THROWS_AS(generate({"triod_wu", {}}), std::invalid_argument);
}

TEST_CASE("map_k4_windings realizes every profile in [-2,2]^4") {
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long e = -2; e <= 2; ++e) CHECK(k4_profile(generate({"map_k4_windings", {a, b, c, e}})) == tuple(a, b, c, e));
}

TEST_CASE("ae_k4_windings realizes every admissible profile in [-2,2]^4") {
  int count = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long e = -2; e <= 2; ++e) {
          const long s = -a + b - c + e;
          if (s != 1 && s != -1) {
            CHECK_THROWS_AS(generate({"ae_k4_windings", {a, b, c, e}}), std::invalid_argument);
            continue;
          }
          ++count;
          const Drawing d = generate({"ae_k4_windings", {a, b, c, e}});
          CHECK(validate_almost_embedding(d).ok());
          CHECK(k4_profile(d) == tuple(a, b, c, e));
        }
  CHECK(count > 100);
  CHECK(k4_profile(generate({"ae_k4_windings", {0, 0, 0, 1}})) == k4_profile(base_drawing("triangle_center_k4")));
}

TEST_CASE("single-parameter families hit their targets on [-5,5]") {
  for (long n = -5; n <= 5; ++n) {
    INFO(n);
    const Drawing k3 = generate({"ae_k3_winding", {n}});
    CHECK(validate_almost_embedding(k3).ok());
    CHECK(winding_of_vertex(k3, parse_cycle(k3.graph(), "123"), k3.graph().index_of(v(4))) == n);

    const Drawing k4 = generate({"ae_k4_w123_4", {n}});
    CHECK(validate_almost_embedding(k4).ok());
    CHECK(winding_of_vertex(k4, parse_cycle(k4.graph(), "123"), 3) == n);

    const Drawing k5 = generate({"ae_k5m45_w123_5", {n}});
    CHECK(validate_almost_embedding(k5).ok());
    CHECK(winding_of_vertex(k5, parse_cycle(k5.graph(), "123"), 4) == n);

    const Triod t = triod_of_drawing(generate({"triod_wu", {n}}));
    CHECK(triodic_wu(t) == 2 * n + 1);
    CHECK(std::abs(approx::triodic_wu(t) - (2 * n + 1)) < 1e-6);

    const TriangleChain c = chain_of_drawing(generate({"cycle_wu", {n}}));
    CHECK(cyclic_wu(c) == 2 * n + 1);
    CHECK(std::abs(approx::cyclic_wu(c) - (2 * n + 1)) < 1e-6);
  }
  CHECK(winding_of_vertex(generate({"ae_k4_w123_4", {3}}), parse_cycle(complete_graph(4), "123"), 3) == 3);
  CHECK(triodic_wu(triod_of_drawing(generate({"triod_wu", {2}}))) == 5);
}

TEST_CASE("the Morozov family") {
  const Drawing d = generate({"ae_k4_morozov", {}});
  CHECK(validate_almost_embedding(d).ok());
  CHECK(k4_alternating_profile_sum(d) == 3);
  CHECK(d == fixtures::drawing("ae_k4_morozov.json"));
}

TEST_CASE("figure fixtures match the generators") {
  CHECK(generate({"ae_k4_w123_4", {3}}) == fixtures::drawing("ae_k4_w123_4_n3.json"));
  CHECK(generate({"ae_k5m45_w123_5", {3}}) == fixtures::drawing("ae_k5m45_w123_5_n3.json"));
  CHECK(generate({"triod_wu", {2}}) == fixtures::drawing("triod_wu_n2.json"));
  CHECK(generate({"cycle_wu", {2}}) == fixtures::drawing("cycle_wu_n2.json"));
}

TEST_CASE("random general-position maps") {
  const Drawing k4 = random_general_position_map(complete_graph(4), 1);
  CHECK(validate_general_position(k4).ok());
  CHECK(radon_number(k4).odd());
  CHECK(random_general_position_map(complete_graph(4), 1) == k4);
  CHECK_FALSE(random_general_position_map(complete_graph(4), 2) == k4);
  for (const auto& l : k4.edge_lines()) CHECK(l.size() == 4);

  const Drawing k5 = random_general_position_map(complete_graph(5), 7);
  CHECK(validate_general_position(k5).ok());
  CHECK(van_kampen_number(k5).odd());

  // a 1x1 grid cannot separate the vertices
  CHECK_THROWS(random_general_position_map(complete_graph(4), 3, 1, 0, 5));
}

TEST_CASE("profile exploration") {
  const auto none = explore_profiles("k4", 0, 1);
  REQUIRE(none.profiles.size() == 1);
  CHECK(none.profiles[0] == invariant_profile(base_drawing("triangle_center_k4")));
  CHECK(none.attempts == 0);

  const auto some = explore_profiles("k4", 50, 1);
  CHECK(some.profiles.size() >= 1);
  CHECK(some.accepted <= some.attempts);
  const Graph g = complete_graph(4);
  for (const auto& p : some.profiles) {
    long sum = 0;
    for (int j = 1; j <= 4; ++j)
      for (const auto& e : p.entries)
        if (e.cycle == k4_cycle(g, j) && e.vertex == static_cast<std::size_t>(j - 1)) sum += e.winding;
    CHECK(sum % 2 != 0);
  }
  const auto again = explore_profiles("k4", 50, 1);
  CHECK(again.profiles == some.profiles);

  const auto cube = explore_profiles("cube", 50, 3);
  CHECK_FALSE(cube.profiles.empty());
  for (const auto& p : cube.profiles) {
    CHECK_FALSE(p.cycles.empty());
    for (const auto& e : p.entries) CHECK(std::find(p.cycles.begin(), p.cycles.end(), e.cycle) != p.cycles.end());
  }
  CHECK_THROWS_AS(explore_profiles("petersen", 1, 1), std::invalid_argument);
}
