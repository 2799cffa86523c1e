#pragma once

// Hand-rolled random instance generators for the property tests.

#include "wulab/constructions.hpp"
#include "wulab/space3.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace gen {

using wulab::ClosedPolyline;
using wulab::Point2;
using wulab::Point3;
using wulab::Polyline;
using wulab::Rational;

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::mt19937_64 engine;

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  bool coin() { return integer(0, 1) == 1; }
  Point2 point(long lo, long hi) { return {integer(lo, hi), integer(lo, hi)}; }
  /// Point with denominators 2..7, so predicates see non-integer input.
  Point2 fine_point(long lo, long hi) {
    return {Rational(integer(lo * 7, hi * 7), integer(2, 7)), Rational(integer(lo * 7, hi * 7), integer(2, 7))};
  }
  Point3 point3(long lo, long hi) { return {integer(lo, hi), integer(lo, hi), integer(lo, hi)}; }
};

/// n vertices, consecutive ones distinct.
inline std::vector<Point2> path(Rng& r, std::size_t n, long lo = -50, long hi = 50) {
  std::vector<Point2> out;
  while (out.size() < n) {
    Point2 p = r.point(lo, hi);
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  return out;
}

inline ClosedPolyline closed(Rng& r, std::size_t n, long lo = -50, long hi = 50) {
  for (;;) {
    auto pts = path(r, n, lo, hi);
    if (!(pts.front() == pts.back())) return ClosedPolyline(std::move(pts));
  }
}

/// Convex hull by the monotone chain, counterclockwise, no collinear points.
inline std::vector<Point2> hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto turn = [](const Point2& o, const Point2& a, const Point2& b) -> Rational {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Point2> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && turn(lower[lower.size() - 2], lower.back(), p) <= 0) lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && turn(upper[upper.size() - 2], upper.back(), *it) <= 0) upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  std::vector<Point2> h = lower;
  h.insert(h.end(), upper.begin(), upper.end());
  return h;
}

inline std::vector<Point2> convex_polygon(Rng& r) {
  for (;;) {
    std::vector<Point2> pts;
    const long n = r.integer(3, 12);
    for (long i = 0; i < n; ++i) pts.push_back(r.point(-40, 40));
    auto h = hull(pts);
    if (h.size() >= 3) return h;
  }
}

/// Random straight-or-bent map of g with integer coordinates, not filtered.
inline wulab::Drawing map(Rng& r, const wulab::Graph& g, int bends, long lo = 0, long hi = 99) {
  for (;;) {
    std::vector<Point2> at;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) at.push_back(r.point(lo, hi));
    std::vector<Polyline> lines;
    bool ok = true;
    for (const auto& e : g.edges()) {
      std::vector<Point2> pts{at[e.u]};
      for (int b = 0; b < bends; ++b) pts.push_back(r.point(lo, hi));
      pts.push_back(at[e.v]);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) ok = ok && !(pts[i] == pts[i + 1]);
      if (!ok) break;
      lines.emplace_back(std::move(pts));
    }
    if (ok) return wulab::Drawing(g, std::move(at), std::move(lines));
  }
}

inline wulab::Drawing general_position_map(Rng& r, const wulab::Graph& g, int bends) {
  for (;;) {
    auto d = map(r, g, bends);
    if (wulab::validate_general_position(d).ok()) return d;
  }
}

/// Centre at the origin shifted by a random offset, legs with 0..3 bends,
/// resampled until the triod invariants hold and the ends are not collinear.
inline wulab::Triod triod(Rng& r) {
  for (;;) {
    const Point2 o = r.point(-10, 10);
    std::array<Polyline, 3> legs{Polyline({o}), Polyline({o}), Polyline({o})};
    bool ok = true;
    for (auto& leg : legs) {
      std::vector<Point2> pts{o};
      const long bends = r.integer(0, 3);
      for (long b = 0; b <= bends; ++b) {
        Point2 p = r.point(-30, 30);
        if (p == pts.back()) {
          ok = false;
          break;
        }
        pts.push_back(p);
      }
      if (!ok) break;
      leg = Polyline(std::move(pts));
    }
    if (!ok) continue;
    wulab::Triod t{o, legs};
    if (wulab::orient(t.end(0), t.end(1), t.end(2)) == 0) continue;
    try {
      wulab::validate(t);
      return t;
    } catch (const wulab::PreconditionError&) {
    }
  }
}

inline wulab::TriangleChain chain(Rng& r) {
  for (;;) {
    std::array<Point2, 3> a{r.point(-30, 30), r.point(-30, 30), r.point(-30, 30)};
    if (wulab::orient(a[0], a[1], a[2]) == 0) continue;
    std::array<Polyline, 3> sides{Polyline({a[0]}), Polyline({a[0]}), Polyline({a[0]})};
    bool ok = true;
    for (int m = 0; m < 3 && ok; ++m) {
      std::vector<Point2> pts{a[m]};
      const long bends = r.integer(0, 3);
      for (long b = 0; b < bends; ++b) pts.push_back(r.point(-30, 30));
      pts.push_back(a[(m + 1) % 3]);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) ok = ok && !(pts[i] == pts[i + 1]);
      if (ok) sides[m] = Polyline(std::move(pts));
    }
    if (!ok) continue;
    wulab::TriangleChain c{sides};
    try {
      wulab::validate(c);
      return c;
    } catch (const wulab::PreconditionError&) {
    }
  }
}

inline std::vector<Point3> cycle3(Rng& r, long lo = -20, long hi = 20) {
  for (;;) {
    std::vector<Point3> pts;
    const long n = r.integer(3, 6);
    while (static_cast<long>(pts.size()) < n) {
      Point3 p = r.point3(lo, hi);
      if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
    }
    if (!(pts.front() == pts.back())) return pts;
  }
}

}  // namespace gen
