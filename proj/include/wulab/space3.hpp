#pragma once

// Linking numbers of disjoint closed polygonal lines in 3-space and the
// linked-triangles check for six points.

#include "wulab/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace wulab {

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  Point3() = default;
  Point3(Rational px, Rational py, Rational pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}
  Point3(long px, long py, long pz) : x(px), y(py), z(pz) {}

  friend bool operator==(const Point3& a, const Point3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(const Rational& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

std::string to_string(const Point3& p);

Point3 cross(const Point3& u, const Point3& v);
Rational dot(const Point3& u, const Point3& v);

/// Sign of det[b - a, c - a, d - a].
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// Closed segments [a, b] and [c, d] share a point.
bool segments_meet(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// Cyclic sequence of at least three points, consecutive points distinct.
class Cycle3 {
 public:
  explicit Cycle3(std::vector<Point3> points);
  const std::vector<Point3>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point3& operator[](std::size_t i) const { return points_[i % points_.size()]; }

 private:
  std::vector<Point3> points_;
};

Cycle3 reverse(const Cycle3& c);

bool cycles_disjoint(const Cycle3& a, const Cycle3& b);

/// Projection along (a, b, 1): p -> (x - a z, y - b z); z is the depth.
struct ProjectionDirection {
  Rational a;
  Rational b;
};

/// The fixed sequence of 64 directions tried by linking_number.
const std::vector<ProjectionDirection>& projection_directions();

class NonGenericProjection : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Half the sum of crossing signs between the projections of c1 and c2.
/// Throws NonGenericProjection if the direction is not generic for the pair.
long linking_number(const Cycle3& c1, const Cycle3& c2, const ProjectionDirection& dir);

/// Uses the first generic direction of projection_directions(). Throws
/// PreconditionError if the cycles meet or no direction is generic.
long linking_number(const Cycle3& c1, const Cycle3& c2);

struct SixConfig {
  std::array<Point3, 6> points;
};

class DegenerateConfiguration : public PreconditionError {
 public:
  DegenerateConfiguration(const std::array<int, 4>& labels);
  const std::array<int, 4>& labels() const { return labels_; }

 private:
  std::array<int, 4> labels_;
};

/// Throws DegenerateConfiguration naming the first coplanar 4-tuple (labels 1..6).
void validate_generic(const SixConfig& cfg);

struct Splitting {
  std::array<int, 3> first;   // labels 1..6, first contains 1
  std::array<int, 3> second;
  long linking = 0;
  std::string label() const;  // "123|456"
};

struct CgsReport {
  std::vector<Splitting> splittings;  // 10 entries
  bool linked_pair_exists = false;
  std::size_t odd_pairs = 0;          // observation only
};

CgsReport cgs_report(const SixConfig& cfg);

}  // namespace wulab
