#pragma once

// Winding numbers of closed polygonal lines and exact partial windings of
// open ones. Everything here is combinatorial: angles are never evaluated,
// only orientation signs against a generic reference direction.

#include "wulab/geometry.hpp"

#include <span>
#include <vector>

namespace wulab {

/// Ordered vertex sequence A_1..A_m (m >= 1) with consecutive vertices distinct.
class Polyline {
 public:
  explicit Polyline(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  Segment segment(std::size_t i) const { return {vertices_[i], vertices_[i + 1]}; }
  const Point2& front() const { return vertices_.front(); }
  const Point2& back() const { return vertices_.back(); }

  friend bool operator==(const Polyline&, const Polyline&) = default;

 private:
  std::vector<Point2> vertices_;
};

/// Cyclic vertex sequence; the closing segment A_m A_1 is implicit. A single
/// vertex is the degenerate one-point closed line.
class ClosedPolyline {
 public:
  explicit ClosedPolyline(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t segment_count() const { return vertices_.size() == 1 ? 0 : vertices_.size(); }
  Segment segment(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % vertices_.size()]}; }

  friend bool operator==(const ClosedPolyline&, const ClosedPolyline&) = default;

 private:
  std::vector<Point2> vertices_;
};

Polyline reverse(const Polyline& line);
ClosedPolyline reverse(const ClosedPolyline& line);

/// a followed by b; requires a.back() == b.front().
Polyline concat(const Polyline& a, const Polyline& b);

/// The closed line formed by an open one whose last vertex returns to its first.
ClosedPolyline close(const Polyline& line);

/// Index of the first segment containing p, if any.
std::optional<std::size_t> find_segment_containing(const Polyline& line, const Point2& p);
std::optional<std::size_t> find_segment_containing(const ClosedPolyline& line, const Point2& p);

/// Thrown when the winding centre lies on the curve.
class PointOnCurveError : public PreconditionError {
 public:
  PointOnCurveError(const Point2& point, std::size_t segment)
      : PreconditionError("point on polyline: " + to_string(point) + " lies on segment " +
                              std::to_string(segment),
                          point),
        segment_(segment) {}
  std::size_t segment() const { return segment_; }

 private:
  std::size_t segment_;
};

enum class AngleMagnitude { Zero, Between, Straight };

/// Exact classification of the oriented angle from ray o->a to ray o->b,
/// measured in (-pi, pi]. A straight angle has sign +1.
struct AngleSign {
  int sign;
  AngleMagnitude magnitude;
};

AngleSign oriented_angle_sign(const Point2& a, const Point2& o, const Point2& b);

/// Direction d such that cross(d, v) != 0 for every v; taken from a fixed
/// enumeration of primitive integer directions, so the choice is deterministic.
Point2 generic_direction(std::span<const Point2> avoid);

/// Net count of counterclockwise passes of the ray {o + s d, s > 0} made by a
/// vector rotating from u to v through the oriented angle from u to v.
/// Requires cross(d, u) != 0 and cross(d, v) != 0.
int ray_passes(const Point2& d, const Point2& u, const Point2& v);

int winding_number(const ClosedPolyline& line, const Point2& o);

/// w'(P, O) = whole + theta / 2 pi, with theta in (-pi, pi] the oriented angle
/// from from_dir to to_dir. Directions are relative to the centre.
struct ExactTurn {
  long whole = 0;
  Point2 from_dir;
  Point2 to_dir;

  /// Real value, for reporting and cross-checks only.
  double value() const;
};

ExactTurn partial_winding(const Polyline& line, const Point2& o);

/// Sum of turns whose directions chain cyclically (to_dir of each part is a
/// positive multiple of from_dir of the next). The result is an integer.
long winding_from_parts(std::span<const ExactTurn> parts);

/// Floating-point reference implementations (atan2 accumulation). These are
/// only for cross-checking the exact code; nothing in the library uses them.
namespace approx {
double winding_number(const ClosedPolyline& line, const Point2& o);
double partial_winding(const Polyline& line, const Point2& o);
double oriented_angle(const Point2& a, const Point2& o, const Point2& b);
}  // namespace approx

}  // namespace wulab
