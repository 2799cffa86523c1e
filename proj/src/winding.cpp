#include "wulab/winding.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace wulab {

Polyline::Polyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("polyline needs at least one vertex");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i + 1]) {
      throw std::invalid_argument("polyline has repeated consecutive vertex " + to_string(vertices_[i]));
    }
  }
}

ClosedPolyline::ClosedPolyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("closed polyline needs at least one vertex");
  if (vertices_.size() == 1) return;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[(i + 1) % vertices_.size()]) {
      throw std::invalid_argument("closed polyline has repeated consecutive vertex " +
                                  to_string(vertices_[i]));
    }
  }
}

Polyline reverse(const Polyline& line) {
  return Polyline({line.vertices().rbegin(), line.vertices().rend()});
}

ClosedPolyline reverse(const ClosedPolyline& line) {
  // Keep the starting vertex so that reversing twice is the identity.
  std::vector<Point2> v{line.vertices().front()};
  v.insert(v.end(), line.vertices().rbegin(), line.vertices().rend() - 1);
  return ClosedPolyline(std::move(v));
}

Polyline concat(const Polyline& a, const Polyline& b) {
  if (!(a.back() == b.front())) throw std::invalid_argument("concat: polylines do not share an endpoint");
  std::vector<Point2> v = a.vertices();
  v.insert(v.end(), b.vertices().begin() + 1, b.vertices().end());
  return Polyline(std::move(v));
}

ClosedPolyline close(const Polyline& line) {
  std::vector<Point2> v = line.vertices();
  if (v.size() > 1 && v.front() == v.back()) v.pop_back();
  return ClosedPolyline(std::move(v));
}

std::optional<std::size_t> find_segment_containing(const Polyline& line, const Point2& p) {
  if (line.size() == 1) return line.front() == p ? std::optional<std::size_t>(0) : std::nullopt;
  for (std::size_t i = 0; i < line.segment_count(); ++i) {
    if (point_on_segment(p, line.segment(i))) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_segment_containing(const ClosedPolyline& line, const Point2& p) {
  if (line.size() == 1) return line.vertices().front() == p ? std::optional<std::size_t>(0) : std::nullopt;
  for (std::size_t i = 0; i < line.segment_count(); ++i) {
    if (point_on_segment(p, line.segment(i))) return i;
  }
  return std::nullopt;
}

AngleSign oriented_angle_sign(const Point2& a, const Point2& o, const Point2& b) {
  if (a == o || b == o) throw std::invalid_argument("oriented angle: ray endpoint coincides with the vertex");
  const Point2 u = a - o;
  const Point2 v = b - o;
  const int s = sign(cross(u, v));
  if (s != 0) return {s, AngleMagnitude::Between};
  if (sign(dot(u, v)) > 0) return {0, AngleMagnitude::Zero};
  return {+1, AngleMagnitude::Straight};
}

Point2 generic_direction(std::span<const Point2> avoid) {
  for (const auto& v : avoid) {
    if (sign(v.x) == 0 && sign(v.y) == 0) throw std::invalid_argument("generic_direction: zero vector");
  }
  auto ok = [&](const Point2& d) {
    for (const auto& v : avoid) {
      if (sign(cross(d, v)) == 0) return false;
    }
    return true;
  };
  // Finitely many directions are excluded, so this terminates.
  for (long n = 1;; ++n) {
    for (long p = 0; p <= n; ++p) {
      const long q = n - p;
      if (std::gcd(p, q) != 1) continue;
      Point2 d(p, q);
      if (ok(d)) return d;
      if (p != 0 && q != 0) {
        Point2 e(p, -q);
        if (ok(e)) return e;
      }
    }
  }
}

int ray_passes(const Point2& d, const Point2& u, const Point2& v) {
  const int hu = sign(cross(d, u));
  const int hv = sign(cross(d, v));
  if (hu == hv) return 0;
  const int s = sign(cross(u, v));
  if (hu > 0) return s < 0 ? -1 : 0;
  return s >= 0 ? 1 : 0;
}

namespace {

void require_off(const ClosedPolyline& line, const Point2& o) {
  if (auto i = find_segment_containing(line, o)) throw PointOnCurveError(o, *i);
}

void require_off(const Polyline& line, const Point2& o) {
  if (auto i = find_segment_containing(line, o)) throw PointOnCurveError(o, *i);
}

std::vector<Point2> relative(const std::vector<Point2>& pts, const Point2& o) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p - o);
  return out;
}

}  // namespace

int winding_number(const ClosedPolyline& line, const Point2& o) {
  require_off(line, o);
  if (line.size() == 1) return 0;
  const auto rel = relative(line.vertices(), o);
  std::vector<Point2> avoid = rel;
  for (std::size_t i = 0; i < line.segment_count(); ++i) avoid.push_back(line.segment(i).direction());
  const Point2 d = generic_direction(avoid);
  int w = 0;
  for (std::size_t i = 0; i < rel.size(); ++i) w += ray_passes(d, rel[i], rel[(i + 1) % rel.size()]);
  return w;
}

double ExactTurn::value() const {
  const double theta = approx::oriented_angle(from_dir, Point2(0, 0), to_dir);
  return static_cast<double>(whole) + theta / (2 * std::numbers::pi);
}

ExactTurn partial_winding(const Polyline& line, const Point2& o) {
  if (line.size() < 2) throw std::invalid_argument("partial winding needs at least two vertices");
  require_off(line, o);
  const auto rel = relative(line.vertices(), o);
  std::vector<Point2> avoid = rel;
  for (std::size_t i = 0; i < line.segment_count(); ++i) avoid.push_back(line.segment(i).direction());
  const Point2 d = generic_direction(avoid);
  long passes = 0;
  for (std::size_t i = 0; i + 1 < rel.size(); ++i) passes += ray_passes(d, rel[i], rel[i + 1]);
  return ExactTurn{passes - ray_passes(d, rel.front(), rel.back()), rel.front(), rel.back()};
}

long winding_from_parts(std::span<const ExactTurn> parts) {
  if (parts.empty()) throw std::invalid_argument("winding_from_parts: no parts");
  std::vector<Point2> avoid;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& cur = parts[i];
    const auto& next = parts[(i + 1) % parts.size()];
    if (sign(cross(cur.to_dir, next.from_dir)) != 0 || sign(dot(cur.to_dir, next.from_dir)) <= 0) {
      throw std::invalid_argument("winding_from_parts: part " + std::to_string(i) +
                                  " does not chain into the next one");
    }
    avoid.push_back(cur.from_dir);
    avoid.push_back(cur.to_dir);
  }
  const Point2 d = generic_direction(avoid);
  long total = 0;
  for (const auto& p : parts) total += p.whole + ray_passes(d, p.from_dir, p.to_dir);
  return total;
}

namespace approx {

double oriented_angle(const Point2& a, const Point2& o, const Point2& b) {
  const double ux = to_double(a.x) - to_double(o.x), uy = to_double(a.y) - to_double(o.y);
  const double vx = to_double(b.x) - to_double(o.x), vy = to_double(b.y) - to_double(o.y);
  double t = std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
  if (t <= -std::numbers::pi + 1e-15) t = std::numbers::pi;
  return t;
}

double winding_number(const ClosedPolyline& line, const Point2& o) {
  const auto& v = line.vertices();
  if (v.size() == 1) return 0.0;
  double sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += oriented_angle(v[i], o, v[(i + 1) % v.size()]);
  return sum / (2 * std::numbers::pi);
}

double partial_winding(const Polyline& line, const Point2& o) {
  const auto& v = line.vertices();
  double sum = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) sum += oriented_angle(v[i], o, v[i + 1]);
  return sum / (2 * std::numbers::pi);
}

}  // namespace approx

}  // namespace wulab
