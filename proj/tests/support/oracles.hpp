#pragma once

// Independent reference computations. None of these call the library code
// they are compared against.

#include "wulab/space3.hpp"
#include "wulab/winding.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using wulab::Point2;
using wulab::Point3;
using wulab::Rational;

inline std::pair<double, double> d2(const Point2& p) { return {p.x.get_d(), p.y.get_d()}; }

/// Oriented angle AOB in (-pi, pi] by atan2.
inline double angle(const Point2& a, const Point2& o, const Point2& b) {
  auto [ax, ay] = d2(a);
  auto [bx, by] = d2(b);
  auto [ox, oy] = d2(o);
  ax -= ox, ay -= oy, bx -= ox, by -= oy;
  return std::atan2(ax * by - ay * bx, ax * bx + ay * by);
}

/// Sum of oriented angles along the vertex sequence divided by 2 pi.
inline double angle_sum(const std::vector<Point2>& pts, const Point2& o, bool closed) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += angle(pts[i], o, pts[i + 1]);
  if (closed && pts.size() > 1) total += angle(pts.back(), o, pts.front());
  return total / (2 * M_PI);
}

inline double winding(const wulab::ClosedPolyline& l, const Point2& o) { return angle_sum(l.vertices(), o, true); }
inline double partial(const wulab::Polyline& l, const Point2& o) { return angle_sum(l.vertices(), o, false); }

/// Concatenation of two vertex sequences sharing an endpoint.
inline std::vector<Point2> join(std::vector<Point2> a, const std::vector<Point2>& b) {
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

inline std::vector<Point2> reversed(std::vector<Point2> a) {
  std::reverse(a.begin(), a.end());
  return a;
}

/// Eq (*) by angle sums: 2 (w'(l2^-1 l3, A1) + w'(l1^-1 l2, A3) + w'(l3^-1 l1, A2)); legs run from the centre.
inline double triodic_wu(const std::vector<Point2>& l1, const std::vector<Point2>& l2, const std::vector<Point2>& l3) {
  const Point2& a1 = l1.back();
  const Point2& a2 = l2.back();
  const Point2& a3 = l3.back();
  return 2 * (angle_sum(join(reversed(l2), l3), a1, false) + angle_sum(join(reversed(l1), l2), a3, false) +
              angle_sum(join(reversed(l3), l1), a2, false));
}

/// Eq (**): 2 (w'(l2, A1) + w'(l1, A3) + w'(l3, A2)).
inline double cyclic_wu(const std::vector<Point2>& l1, const std::vector<Point2>& l2, const std::vector<Point2>& l3) {
  return 2 * (angle_sum(l2, l1.front(), false) + angle_sum(l1, l3.front(), false) + angle_sum(l3, l2.front(), false));
}

/// Intersection of closed segments by solving a + s (b - a) = c + t (d - c)
/// with Cramer's rule. Returns nullopt for no intersection, the point for a
/// single point; `overlap` is set when the segments share more than a point.
inline std::optional<Point2> segment_meet(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                                          bool* overlap = nullptr) {
  if (overlap) *overlap = false;
  const Rational rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const Rational det = rx * sy - ry * sx;
  const Rational qx = c.x - a.x, qy = c.y - a.y;
  if (det != 0) {
    const Rational s = (qx * sy - qy * sx) / det;
    const Rational t = (qx * ry - qy * rx) / det;
    if (s < 0 || s > 1 || t < 0 || t > 1) return std::nullopt;
    return Point2(a.x + s * rx, a.y + s * ry);
  }
  if (qx * ry - qy * rx != 0) return std::nullopt;  // parallel lines
  const Rational rr = rx * rx + ry * ry;
  Rational t0 = (qx * rx + qy * ry) / rr;
  Rational t1 = ((d.x - a.x) * rx + (d.y - a.y) * ry) / rr;
  if (t0 > t1) std::swap(t0, t1);
  const Rational lo = t0 > 0 ? t0 : Rational(0);
  const Rational hi = t1 < 1 ? t1 : Rational(1);
  if (lo > hi) return std::nullopt;
  if (lo < hi) {
    if (overlap) *overlap = true;
  }
  return Point2(a.x + lo * rx, a.y + lo * ry);
}

inline Rational det3(const Point3& u, const Point3& v, const Point3& w) {
  return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) + u.z * (v.x * w.y - v.y * w.x);
}

inline int side(const Point3& a, const Point3& b, const Point3& c, const Point3& p) {
  const Rational v = det3(b - a, c - a, p - a);
  return (v > 0) - (v < 0);
}

/// Linking number as the signed count of segments of `b` piercing the fan
/// surface (P0, Pi, Pi+1) spanned by `a`. Sign +1 when the segment crosses in
/// the direction of the fan normal (Pi - P0) x (Pi+1 - P0). Returns nullopt if
/// some segment touches a fan triangle in a non-transverse way.
inline std::optional<long> fan_linking(const std::vector<Point3>& a, const std::vector<Point3>& b) {
  long total = 0;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    const Point3 &p0 = a[0], &p1 = a[i], &p2 = a[i + 1];
    const Point3 n{(p1 - p0).y * (p2 - p0).z - (p1 - p0).z * (p2 - p0).y,
                   (p1 - p0).z * (p2 - p0).x - (p1 - p0).x * (p2 - p0).z,
                   (p1 - p0).x * (p2 - p0).y - (p1 - p0).y * (p2 - p0).x};
    if (n.x == 0 && n.y == 0 && n.z == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Point3& q = b[j];
      const Point3& r = b[(j + 1) % b.size()];
      const int sq = side(p0, p1, p2, q);
      const int sr = side(p0, p1, p2, r);
      if (sq == sr && sq != 0) continue;
      if (sq == 0 || sr == 0) {
        // touches the plane: harmless only when it misses the triangle, which
        // we do not try to decide here
        return std::nullopt;
      }
      const int e0 = side(q, r, p0, p1);
      const int e1 = side(q, r, p1, p2);
      const int e2 = side(q, r, p2, p0);
      if (e0 == 0 || e1 == 0 || e2 == 0) return std::nullopt;
      if (e0 == e1 && e1 == e2) total += sr > 0 ? 1 : -1;
    }
  }
  return total;
}

/// Points of proper crossings between two polylines, by doubles; for counting
/// on generic instances only.
inline std::size_t float_crossings(const std::vector<Point2>& p, const std::vector<Point2>& q) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      auto [ax, ay] = d2(p[i]);
      auto [bx, by] = d2(p[i + 1]);
      auto [cx, cy] = d2(q[j]);
      auto [dx, dy] = d2(q[j + 1]);
      auto cr = [](double ux, double uy, double vx, double vy) { return ux * vy - uy * vx; };
      const double d1 = cr(bx - ax, by - ay, cx - ax, cy - ay);
      const double d2v = cr(bx - ax, by - ay, dx - ax, dy - ay);
      const double d3 = cr(dx - cx, dy - cy, ax - cx, ay - cy);
      const double d4 = cr(dx - cx, dy - cy, bx - cx, by - cy);
      if (((d1 > 0 && d2v < 0) || (d1 < 0 && d2v > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) ++n;
    }
  }
  return n;
}

/// Even-odd rule by a horizontal ray to the right, in doubles.
inline bool float_even_odd(const std::vector<Point2>& poly, const Point2& x) {
  auto [px, py] = d2(x);
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    auto [xi, yi] = d2(poly[i]);
    auto [xj, yj] = d2(poly[j]);
    if ((yi > py) != (yj > py) && px < (xj - xi) * (py - yi) / (yj - yi) + xi) inside = !inside;
  }
  return inside;
}

}  // namespace oracle
