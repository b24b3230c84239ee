#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace montes {

struct PPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const PPoint& a, const PPoint& b) { return a.x == b.x && a.y == b.y; }
};

// slope -h/e with e >= 1, gcd(h, e) = 1
struct Slope {
  std::int64_t h = 0;
  std::int64_t e = 1;
  friend bool operator==(const Slope& a, const Slope& b) { return a.h == b.h && a.e == b.e; }
  std::string to_string() const;
};

// a is steeper (more negative) than b
bool steeper(const Slope& a, const Slope& b);

struct Side {
  PPoint start, end;
  std::int64_t E = 0;  // length
  std::int64_t H = 0;  // height, start.y - end.y (may be <= 0 outside the principal part)
  std::int64_t d = 0;  // degree
  Slope slope;

  static Side between(PPoint a, PPoint b);
  friend bool operator==(const Side& a, const Side& b) { return a.start == b.start && a.end == b.end; }
};

// full lower convex hull
struct Polygon {
  std::vector<PPoint> vertices;
  std::vector<Side> sides() const;
};

// negative-slope part, sides ordered steepest first
struct PrincipalPolygon {
  std::vector<Side> sides;

  bool empty() const { return sides.empty(); }
  std::int64_t length() const;
  std::int64_t start_x() const { return sides.empty() ? 0 : sides.front().start.x; }
  std::int64_t end_x() const { return sides.empty() ? 0 : sides.back().end.x; }
  std::vector<PPoint> vertices() const;
  std::string to_string() const;
  friend bool operator==(const PrincipalPolygon& a, const PrincipalPolygon& b) { return a.sides == b.sides; }
};

Polygon lower_hull(std::vector<PPoint> points);
PrincipalPolygon principal(const Polygon& n);
PrincipalPolygon principal_from(const std::vector<PPoint>& vertices);
PrincipalPolygon cut(const PrincipalPolygon& n, std::int64_t h);
std::int64_t polygon_index(const PrincipalPolygon& n);
std::int64_t cut_index(const PrincipalPolygon& n, std::int64_t h, std::int64_t weight);
// (x, y) -> (x, y - s*x); s may be negative, the image must stay principal
PrincipalPolygon affine_H(const PrincipalPolygon& n, std::int64_t s);

// checked int64 helpers, InvariantViolation on overflow
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace montes
