#pragma once

// Exact rational points and the orientation / intersection predicates that
// every invariant in the library is computed from.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace wulab {

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline double to_double(const Rational& value) { return value.get_d(); }

struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point2(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
  friend Point2 operator*(const Rational& s, const Point2& a) { return {s * a.x, s * a.y}; }
};

std::string to_string(const Point2& p);

/// Base class for rejected geometric preconditions. Carries an optional exact
/// witness point so callers (CLI, HTTP service) can point at the offending spot.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what, std::optional<Point2> witness = std::nullopt)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::optional<Point2>& witness() const { return witness_; }

 private:
  std::optional<Point2> witness_;
};

inline Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

/// Rotation by +90 degrees.
inline Point2 perp(const Point2& u) { return {-u.y, u.x}; }

/// a + t (b - a)
inline Point2 lerp(const Point2& a, const Point2& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// Sign of (b - a) x (c - a): +1 when c is strictly left of the directed line a->b.
int orient(const Point2& a, const Point2& b, const Point2& c);

/// Closed segment with distinct endpoints.
class Segment {
 public:
  Segment(Point2 a, Point2 b);

  const Point2& a() const { return a_; }
  const Point2& b() const { return b_; }
  Point2 direction() const { return b_ - a_; }

  friend bool operator==(const Segment& s, const Segment& t) { return s.a_ == t.a_ && s.b_ == t.b_; }

 private:
  Point2 a_;
  Point2 b_;
};

struct NoIntersection {
  friend bool operator==(NoIntersection, NoIntersection) { return true; }
};

/// Empty, a single point, or a shared subsegment. Overlap endpoints are
/// ordered lexicographically so the result does not depend on argument order.
using SegmentIntersection = std::variant<NoIntersection, Point2, Segment>;

SegmentIntersection segment_intersection(const Segment& s, const Segment& t);

bool point_on_segment(const Point2& p, const Segment& s);

/// True when p lies on s but is not one of its endpoints.
bool point_in_segment_interior(const Point2& p, const Segment& s);

/// Squared euclidean distance from p to the closed segment, and the clamped
/// parameter of the nearest point.
std::pair<Rational, Rational> squared_distance_to_segment(const Point2& p, const Segment& s);

}  // namespace wulab
