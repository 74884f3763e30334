#include "vclines/geom.hpp"

#include <stdexcept>
#include <utility>

namespace vclines {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  using boost::multiprecision::gcd;
  return gcd(gcd(abs(a), abs(b)), abs(c));
}

}  // namespace

std::string point_str(const Point& p) {
  return "(" + rational_str(p.x) + ", " + rational_str(p.y) + ")";
}

Line::Line(BigInt a_, BigInt b_, BigInt c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a == 0 && b == 0) throw std::invalid_argument("degenerate line: a = b = 0");
  BigInt g = gcd3(a, b, c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line through identical points " + point_str(p));
  Rational ra = q.y - p.y;
  Rational rb = p.x - q.x;
  Rational rc = ra * p.x + rb * p.y;
  BigInt m = lcm(lcm(denominator(ra), denominator(rb)), denominator(rc));
  auto scaled = [&m](const Rational& r) { return BigInt(numerator(r) * (m / denominator(r))); };
  return Line(scaled(ra), scaled(rb), scaled(rc));
}

bool Line::contains(const Point& p) const { return a * p.x + b * p.y == c; }

bool Line::operator<(const Line& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::size_t hash_value(const Line& l) {
  std::size_t h = hash_value_bigint(l.a);
  h = hash_combine(h, hash_value_bigint(l.b));
  h = hash_combine(h, hash_value_bigint(l.c));
  return h;
}

bool are_collinear(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

std::optional<Point> line_intersection(const Line& l, const Line& m) {
  BigInt det = l.a * m.b - l.b * m.a;
  if (det == 0) return std::nullopt;
  return Point{make_rational(l.c * m.b - l.b * m.c, det),
               make_rational(l.a * m.c - l.c * m.a, det)};
}

bool parallel(const Line& l, const Line& m) { return l.a * m.b - l.b * m.a == 0; }

AffineMap2 AffineMap2::identity() { return {1, 0, 0, 1, 0, 0}; }

Point AffineMap2::apply(const Point& p) const {
  return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
}

}  // namespace vclines
