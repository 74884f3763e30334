#pragma once

#include "vclines/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

namespace vclines {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
};

std::string point_str(const Point& p);

// Line a*x + b*y = c with integer coefficients in canonical form:
// gcd(|a|,|b|,|c|) = 1 and the first nonzero of (a,b) is positive. Canonical
// form makes structural equality coincide with equality of point sets.
struct Line {
  BigInt a;
  BigInt b;
  BigInt c;

  Line(BigInt a_, BigInt b_, BigInt c_);

  static Line through(const Point& p, const Point& q);  // throws on p == q

  bool contains(const Point& p) const;

  bool operator==(const Line&) const = default;
  bool operator<(const Line& o) const;
};

std::size_t hash_value(const Line& l);

bool are_collinear(const Point& p, const Point& q, const Point& r);

// Intersection of two lines; nullopt when parallel or identical.
std::optional<Point> line_intersection(const Line& l, const Line& m);

bool parallel(const Line& l, const Line& m);

// x' = m00*x + m01*y + tx, y' = m10*x + m11*y + ty.
struct AffineMap2 {
  Rational m00, m01, m10, m11, tx, ty;

  static AffineMap2 identity();
  Point apply(const Point& p) const;
  Rational det() const { return m00 * m11 - m01 * m10; }
  bool invertible() const { return det() != 0; }
};

}  // namespace vclines
