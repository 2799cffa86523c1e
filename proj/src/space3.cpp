#include "wulab/space3.hpp"

#include <algorithm>

namespace wulab {

std::string to_string(const Point3& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ", " + to_string(p.z) + ")";
}

Point3 cross(const Point3& u, const Point3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Rational dot(const Point3& u, const Point3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sign(dot(cross(b - a, c - a), d - a));
}

namespace {

bool is_zero(const Point3& v) { return sign(v.x) == 0 && sign(v.y) == 0 && sign(v.z) == 0; }

bool in_unit(const Rational& t) { return t >= 0 && t <= 1; }

}  // namespace

bool segments_meet(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const Point3 e = b - a;
  const Point3 f = d - c;
  const Point3 w = c - a;
  const Point3 n = cross(e, f);
  if (!is_zero(n)) {
    if (sign(dot(w, n)) != 0) return false;  // skew
    // a + l e = c + m f, solved on the coordinate plane where n has a nonzero component.
    Rational l;
    Rational m;
    if (sign(n.z) != 0) {
      l = (w.x * f.y - w.y * f.x) / n.z;
      m = (w.x * e.y - w.y * e.x) / n.z;
    } else if (sign(n.y) != 0) {
      l = (w.z * f.x - w.x * f.z) / n.y;
      m = (w.z * e.x - w.x * e.z) / n.y;
    } else {
      l = (w.y * f.z - w.z * f.y) / n.x;
      m = (w.y * e.z - w.z * e.y) / n.x;
    }
    return in_unit(l) && in_unit(m);
  }
  if (!is_zero(cross(w, e))) return false;  // parallel, not collinear
  const Rational ee = dot(e, e);
  Rational t0 = dot(c - a, e) / ee;
  Rational t1 = dot(d - a, e) / ee;
  if (t0 > t1) std::swap(t0, t1);
  return t1 >= 0 && t0 <= 1;
}

Cycle3::Cycle3(std::vector<Point3> points) : points_(std::move(points)) {
  if (points_.size() < 3) throw std::invalid_argument("3d cycle needs at least three points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if ((*this)[i] == (*this)[i + 1]) throw std::invalid_argument("3d cycle has repeated consecutive point");
  }
}

Cycle3 reverse(const Cycle3& c) {
  std::vector<Point3> p{c.points().front()};
  p.insert(p.end(), c.points().rbegin(), c.points().rend() - 1);
  return Cycle3(std::move(p));
}

bool cycles_disjoint(const Cycle3& a, const Cycle3& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (segments_meet(a[i], a[i + 1], b[j], b[j + 1])) return false;
    }
  }
  return true;
}

const std::vector<ProjectionDirection>& projection_directions() {
  static const std::vector<ProjectionDirection> dirs = [] {
    std::vector<ProjectionDirection> out;
    for (long i = 0; i < 64; ++i) out.push_back({Rational((17 * i + 3) % 29 - 14, 31), Rational((23 * i + 5) % 37 - 18, 41)});
    return out;
  }();
  return dirs;
}

namespace {

Point2 project(const Point3& p, const ProjectionDirection& d) { return {p.x - d.a * p.z, p.y - d.b * p.z}; }

}  // namespace

long linking_number(const Cycle3& c1, const Cycle3& c2, const ProjectionDirection& dir) {
  long twice = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const Point2 p = project(c1[i], dir);
    const Point2 pn = project(c1[i + 1], dir);
    if (p == pn) throw NonGenericProjection("projection: a segment is parallel to the direction", p);
    const Segment s(p, pn);
    for (std::size_t j = 0; j < c2.size(); ++j) {
      const Point2 r = project(c2[j], dir);
      const Point2 rn = project(c2[j + 1], dir);
      if (r == rn) throw NonGenericProjection("projection: a segment is parallel to the direction", r);
      const Segment t(r, rn);
      auto x = segment_intersection(s, t);
      if (std::holds_alternative<NoIntersection>(x)) continue;
      if (auto* ov = std::get_if<Segment>(&x)) throw NonGenericProjection("projection: segments overlap", ov->a());
      const Point2& at = std::get<Point2>(x);
      if (at == s.a() || at == s.b() || at == t.a() || at == t.b()) {
        throw NonGenericProjection("projection: crossing at a vertex", at);
      }
      const Point2 ds = s.direction();
      const Point2 dt = t.direction();
      // Depth of each strand at the crossing, from the parameter along the segment.
      const Rational ls = sign(ds.x) != 0 ? (at.x - s.a().x) / ds.x : (at.y - s.a().y) / ds.y;
      const Rational lt = sign(dt.x) != 0 ? (at.x - t.a().x) / dt.x : (at.y - t.a().y) / dt.y;
      const Rational z1 = c1[i].z + ls * (c1[i + 1].z - c1[i].z);
      const Rational z2 = c2[j].z + lt * (c2[j + 1].z - c2[j].z);
      if (z1 == z2) throw PreconditionError("cycles intersect", at);
      const int handed = sign(cross(ds, dt));
      twice += z1 > z2 ? handed : -handed;
    }
  }
  if (twice % 2 != 0) throw std::logic_error("linking number: odd crossing sign sum");
  return twice / 2;
}

long linking_number(const Cycle3& c1, const Cycle3& c2) {
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (segments_meet(c1[i], c1[i + 1], c2[j], c2[j + 1])) {
        throw PreconditionError("linking number: cycles meet (segment " + std::to_string(i) + " and " +
                                std::to_string(j) + ")");
      }
    }
  }
  for (const auto& dir : projection_directions()) {
    try {
      return linking_number(c1, c2, dir);
    } catch (const NonGenericProjection&) {
    }
  }
  throw PreconditionError("linking number: no generic projection direction in 64 attempts");
}

DegenerateConfiguration::DegenerateConfiguration(const std::array<int, 4>& labels)
    : PreconditionError("points " + std::to_string(labels[0]) + std::to_string(labels[1]) + std::to_string(labels[2]) +
                        std::to_string(labels[3]) + " are coplanar"),
      labels_(labels) {}

void validate_generic(const SixConfig& cfg) {
  const auto& p = cfg.points;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d)
          if (orient3d(p[a], p[b], p[c], p[d]) == 0) throw DegenerateConfiguration({a + 1, b + 1, c + 1, d + 1});
}

std::string Splitting::label() const {
  std::string s;
  for (int v : first) s += std::to_string(v);
  s += "|";
  for (int v : second) s += std::to_string(v);
  return s;
}

CgsReport cgs_report(const SixConfig& cfg) {
  validate_generic(cfg);
  CgsReport report;
  for (int b = 2; b <= 6; ++b) {
    for (int c = b + 1; c <= 6; ++c) {
      Splitting s;
      s.first = {1, b, c};
      int k = 0;
      for (int v = 2; v <= 6; ++v)
        if (v != b && v != c) s.second[k++] = v;
      auto tri = [&](const std::array<int, 3>& l) {
        return Cycle3({cfg.points[l[0] - 1], cfg.points[l[1] - 1], cfg.points[l[2] - 1]});
      };
      s.linking = linking_number(tri(s.first), tri(s.second));
      if (s.linking % 2 != 0) {
        report.linked_pair_exists = true;
        ++report.odd_pairs;
      }
      report.splittings.push_back(s);
    }
  }
  return report;
}

}  // namespace wulab
