#include "wulab/geometry.hpp"

#include <algorithm>
#include <cctype>

namespace wulab {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

int orient(const Point2& a, const Point2& b, const Point2& c) { return sign(cross(b - a, c - a)); }

Segment::Segment(Point2 a, Point2 b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw std::invalid_argument("degenerate segment at " + to_string(a_));
}

SegmentIntersection segment_intersection(const Segment& s, const Segment& t) {
  const Point2 d = s.direction();
  const Point2 e = t.direction();
  const Point2 ac = t.a() - s.a();
  const Rational denom = cross(d, e);
  if (sign(denom) != 0) {
    // s.a + lambda d == t.a + mu e
    Rational lambda = cross(ac, e) / denom;
    Rational mu = cross(ac, d) / denom;
    if (lambda < 0 || lambda > 1 || mu < 0 || mu > 1) return NoIntersection{};
    return lerp(s.a(), s.b(), lambda);
  }
  if (sign(cross(ac, d)) != 0) return NoIntersection{};

  // Collinear: intersect the parameter intervals along s.
  const Rational dd = dot(d, d);
  Rational t0 = dot(t.a() - s.a(), d) / dd;
  Rational t1 = dot(t.b() - s.a(), d) / dd;
  if (t0 > t1) std::swap(t0, t1);
  Rational lo = t0 > 0 ? t0 : Rational(0);
  Rational hi = t1 < 1 ? t1 : Rational(1);
  if (lo > hi) return NoIntersection{};
  Point2 p = lerp(s.a(), s.b(), lo);
  if (lo == hi) return p;
  Point2 q = lerp(s.a(), s.b(), hi);
  if (q < p) std::swap(p, q);
  return Segment(std::move(p), std::move(q));
}

bool point_on_segment(const Point2& p, const Segment& s) {
  if (orient(s.a(), s.b(), p) != 0) return false;
  const Point2 d = s.direction();
  const Rational proj = dot(p - s.a(), d);
  return proj >= 0 && proj <= dot(d, d);
}

bool point_in_segment_interior(const Point2& p, const Segment& s) {
  return point_on_segment(p, s) && p != s.a() && p != s.b();
}

std::pair<Rational, Rational> squared_distance_to_segment(const Point2& p, const Segment& s) {
  const Point2 d = s.direction();
  Rational t = dot(p - s.a(), d) / dot(d, d);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Point2 q = lerp(s.a(), s.b(), t);
  const Point2 diff = p - q;
  return {dot(diff, diff), t};
}

}  // namespace wulab
