#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

#include "wulab/checks.hpp"

#include <doctest.h>

#include <set>

using namespace wulab;

namespace {

const Cycle3 base_triangle({{-2, -1, 0}, {2, -1, 0}, {0, 2, 0}});
const Cycle3 threading({{0, 0, -1}, {0, 0, 1}, {5, 0, 1}});

std::pair<Cycle3, Cycle3> random_pair(gen::Rng& r) {
  for (;;) {
    Cycle3 a(gen::cycle3(r, -10, 10)), b(gen::cycle3(r, -10, 10));
    if (cycles_disjoint(a, b)) return {a, b};
  }
}

}  // namespace

TEST_CASE("exact 3D predicates") {
  CHECK(orient3d({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
  CHECK(orient3d({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, -1}) == -1);
  CHECK(orient3d({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 7, 0}) == 0);
  CHECK(segments_meet({0, 0, 0}, {2, 2, 2}, {2, 0, 0}, {0, 2, 2}));
  CHECK_FALSE(segments_meet({0, 0, 0}, {2, 2, 2}, {2, 0, 1}, {0, 2, 2}));
  CHECK(segments_meet({0, 0, 0}, {2, 0, 0}, {1, 0, 0}, {3, 0, 0}));
  CHECK_FALSE(segments_meet({0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}));
  CHECK(segments_meet({0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 5, 0}));
}

TEST_CASE("cycles need three points with distinct neighbours") {
  CHECK_THROWS_AS(Cycle3({{0, 0, 0}, {1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle3({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle3({{0, 0, 0}, {1, 1, 0}, {0, 0, 0}}), std::invalid_argument);
  CHECK(reverse(base_triangle).points() == std::vector<Point3>{{-2, -1, 0}, {0, 2, 0}, {2, -1, 0}});
}

TEST_CASE("linking number examples") {
  const Cycle3 far({{10, 10, 5}, {12, 10, 5}, {11, 12, 6}});
  CHECK(linking_number(base_triangle, far) == 0);

  const auto fan = oracle::fan_linking(base_triangle.points(), threading.points());
  REQUIRE(fan);
  CHECK(*fan == 1);
  CHECK(linking_number(base_triangle, threading) == 1);
  CHECK(linking_number(threading, base_triangle) == 1);
  CHECK(linking_number(reverse(base_triangle), threading) == -1);
  CHECK(linking_number(base_triangle, reverse(threading)) == -1);
}

TEST_CASE("meeting cycles are rejected") {
  const Cycle3 touching({{0, 0, -1}, {0, 0, 1}, {5, 0, 1}, {0, -1, 0}});
  CHECK_THROWS_AS(linking_number(base_triangle, touching), PreconditionError);
}

TEST_CASE("non-generic directions are refused") {
  // the vertical direction projects the threading triangle's first side to a point
  CHECK_THROWS_AS(linking_number(base_triangle, threading, {0, 0}), NonGenericProjection);
}

TEST_CASE("linking number agrees with the fan-surface oracle") {
  gen::Rng r(61);
  int compared = 0, linked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto [a, b] = random_pair(r);
    const auto fan = oracle::fan_linking(a.points(), b.points());
    if (!fan) continue;
    const long lk = linking_number(a, b);
    CHECK(lk == *fan);
    ++compared;
    linked += lk != 0;
  }
  CHECK(compared > 200);
  CHECK(linked > 20);
}

TEST_CASE("linking number is symmetric, flips under reversal and ignores the projection direction") {
  gen::Rng r(62);
  const auto& dirs = projection_directions();
  REQUIRE(dirs.size() == 64);
  for (int i = 0; i < 100; ++i) {
    const auto [a, b] = random_pair(r);
    const long lk = linking_number(a, b);
    CHECK(linking_number(b, a) == lk);
    CHECK(linking_number(reverse(a), b) == -lk);
    std::set<long> seen;
    int used = 0;
    for (const auto& d : dirs) {
      try {
        seen.insert(linking_number(a, b, d));
        ++used;
      } catch (const NonGenericProjection&) {
      }
      if (used == 3) break;
    }
    CHECK(used == 3);
    CHECK(seen.size() == 1);
    CHECK(*seen.begin() == lk);
  }
}

TEST_CASE("random disjoint cycles from the check generator") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 50; ++i) {
    const auto [a, b] = random_disjoint_cycles(rng);
    CHECK(cycles_disjoint(a, b));
    CHECK(a.size() >= 3);
    CHECK(a.size() <= 6);
  }
}

TEST_CASE("six-point configuration fixture") {
  const SixConfig cfg = io::six_config_from_json(fixtures::load("six_config_octahedral.json"));
  CHECK_NOTHROW(validate_generic(cfg));
  const CgsReport rep = cgs_report(cfg);
  REQUIRE(rep.splittings.size() == 10);
  CHECK(rep.linked_pair_exists);
  bool unit = false;
  for (const auto& s : rep.splittings) unit = unit || std::abs(s.linking) == 1;
  CHECK(unit);
  CHECK(rep.splittings.front().label() == "123|456");
  CHECK(rep.odd_pairs == 3);
}

TEST_CASE("coplanar four points are named") {
  SixConfig cfg{{Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(7, 3, 11), Point3(1, 1, 0), Point3(2, 9, -4)}};
  try {
    validate_generic(cfg);
    FAIL("expected rejection");
  } catch (const DegenerateConfiguration& e) {
    CHECK(e.labels() == std::array<int, 4>{1, 2, 3, 5});
    CHECK(std::string(e.what()).find("1235") != std::string::npos);
  }
  CHECK_THROWS_AS(cgs_report(cfg), DegenerateConfiguration);
}

TEST_CASE("every generic six-point configuration has a linked pair of triangles") {
  gen::Rng r(64);
  int done = 0;
  while (done < 150) {
    SixConfig cfg;
    for (auto& p : cfg.points) p = r.point3(-30, 30);
    try {
      validate_generic(cfg);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    ++done;
    const CgsReport rep = cgs_report(cfg);
    CHECK(rep.linked_pair_exists);
    std::size_t odd = 0;
    std::set<std::string> labels;
    for (const auto& s : rep.splittings) {
      CHECK(std::abs(s.linking) <= 1);
      odd += s.linking % 2 != 0;
      labels.insert(s.label());
      std::vector<Point3> a, b;
      for (int k : s.first) a.push_back(cfg.points[k - 1]);
      for (int k : s.second) b.push_back(cfg.points[k - 1]);
      const auto fan = oracle::fan_linking(a, b);
      REQUIRE(fan);
      CHECK(*fan == s.linking);
    }
    CHECK(labels.size() == 10);
    CHECK(odd == rep.odd_pairs);
  }
}
