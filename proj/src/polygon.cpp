#include "montes/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "montes/error.hpp"

namespace montes {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::InvariantViolation, "64-bit overflow in polygon arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::InvariantViolation, "64-bit overflow in polygon arithmetic");
  return r;
}

std::string Slope::to_string() const {
  std::string s = h == 0 ? "0" : "-" + std::to_string(h);
  if (e != 1) s += "/" + std::to_string(e);
  return s;
}

bool steeper(const Slope& a, const Slope& b) {
  // -a.h/a.e < -b.h/b.e  <=>  a.h*b.e > b.h*a.e
  return static_cast<__int128>(a.h) * b.e > static_cast<__int128>(b.h) * a.e;
}

Side Side::between(PPoint a, PPoint b) {
  Side s;
  s.start = a;
  s.end = b;
  s.E = b.x - a.x;
  s.H = a.y - b.y;
  if (s.E <= 0) fail(Errc::InvariantViolation, "side with non-positive length");
  s.d = s.H == 0 ? s.E : std::gcd(s.E, s.H < 0 ? -s.H : s.H);
  s.slope = Slope{s.H / s.d, s.E / s.d};
  return s;
}

std::vector<Side> Polygon::sides() const {
  std::vector<Side> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back(Side::between(vertices[i], vertices[i + 1]));
  return out;
}

std::int64_t PrincipalPolygon::length() const { return end_x() - start_x(); }

std::vector<PPoint> PrincipalPolygon::vertices() const {
  std::vector<PPoint> v;
  if (sides.empty()) return v;
  v.push_back(sides.front().start);
  for (const auto& s : sides) v.push_back(s.end);
  return v;
}

std::string PrincipalPolygon::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& p : vertices()) {
    os << (first ? "" : " -- ") << '(' << p.x << ',' << p.y << ')';
    first = false;
  }
  if (first) os << "(empty)";
  return os.str();
}

Polygon lower_hull(std::vector<PPoint> points) {
  if (points.empty()) fail(Errc::NoPoints, "lower hull of an empty point set");
  std::map<std::int64_t, std::int64_t> best;
  for (const auto& p : points) {
    auto it = best.find(p.x);
    if (it == best.end() || p.y < it->second) best[p.x] = p.y;
  }
  std::vector<PPoint> hull;
  for (const auto& [x, y] : best) {
    PPoint c{x, y};
    while (hull.size() >= 2) {
      const PPoint& a = hull[hull.size() - 2];
      const PPoint& b = hull.back();
      // keep b only if a -> b -> c turns left
      __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(c);
  }
  return Polygon{hull};
}

PrincipalPolygon principal(const Polygon& n) {
  PrincipalPolygon out;
  for (const auto& s : n.sides()) {
    if (s.H <= 0) break;
    out.sides.push_back(s);
  }
  return out;
}

PrincipalPolygon principal_from(const std::vector<PPoint>& vertices) {
  PrincipalPolygon out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    Side s = Side::between(vertices[i], vertices[i + 1]);
    if (s.H <= 0) fail(Errc::SlopeOverflow, "principal polygon needs negative slopes");
    if (!out.sides.empty() && !steeper(out.sides.back().slope, s.slope))
      fail(Errc::InvariantViolation, "principal polygon slopes must increase");
    out.sides.push_back(s);
  }
  return out;
}

PrincipalPolygon cut(const PrincipalPolygon& n, std::int64_t h) {
  if (h < 0) fail(Errc::SlopeOverflow, "cut needs h >= 0");
  PrincipalPolygon out;
  for (const auto& s : n.sides) {
    if (static_cast<__int128>(s.H) <= static_cast<__int128>(h) * s.E) break;
    out.sides.push_back(s);
  }
  return out;
}

std::int64_t polygon_index(const PrincipalPolygon& n) {
  std::int64_t total = 0, heights_after = 0;
  for (std::size_t i = n.sides.size(); i-- > 0;) {
    const Side& s = n.sides[i];
    std::int64_t twice = checked_add(checked_mul(s.E, s.H) - s.E - s.H, s.d);
    total = checked_add(total, twice / 2);
    total = checked_add(total, checked_mul(s.E, heights_after));
    heights_after = checked_add(heights_after, s.H);
  }
  return total;
}

std::int64_t cut_index(const PrincipalPolygon& n, std::int64_t h, std::int64_t weight) {
  PrincipalPolygon c = cut(n, h);
  if (c.empty()) return 0;
  std::int64_t l = c.length();
  std::int64_t v = polygon_index(c) - checked_mul(h, checked_mul(l, l - 1) / 2);
  return checked_mul(weight, v);
}

PrincipalPolygon affine_H(const PrincipalPolygon& n, std::int64_t s) {
  std::vector<PPoint> v = n.vertices();
  for (auto& p : v) p.y = p.y - checked_mul(s, p.x);
  PrincipalPolygon out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Side side = Side::between(v[i], v[i + 1]);
    if (side.H <= 0) fail(Errc::SlopeOverflow, "affine image is not principal");
    out.sides.push_back(side);
  }
  return out;
}

}  // namespace montes
