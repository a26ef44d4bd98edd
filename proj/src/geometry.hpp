#pragma once

#include <algorithm>
#include <cmath>

#include "chartbraid/chart.hpp"

namespace chartbraid::detail {

inline constexpr double kEps = 1e-9;

inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline bool near(Point a, Point b, double eps = 1e-7) { return norm(a - b) <= eps; }

enum class Contact { none, proper, touch, overlap };

struct SegmentHit {
  Contact contact = Contact::none;
  double t = 0;  // parameter along the first segment
  double u = 0;  // parameter along the second segment
};

/// Intersection of segments [a,b] and [c,d]. `proper` means the interiors
/// cross transversally at one point; `touch` means they meet at an endpoint
/// of at least one of them.
inline SegmentHit intersect(Point a, Point b, Point c, Point d) {
  Point r = b - a;
  Point s = d - c;
  double denom = cross(r, s);
  double scale = std::max({norm(r), norm(s), 1.0});
  if (std::abs(denom) <= kEps * scale * scale) {
    // parallel
    if (std::abs(cross(c - a, r)) > kEps * scale * scale) return {};
    double rr = dot(r, r);
    if (rr == 0) return {};
    double t0 = dot(c - a, r) / rr;
    double t1 = dot(d - a, r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    double lo = std::max(t0, 0.0);
    double hi = std::min(t1, 1.0);
    if (hi < lo - kEps) return {};
    if (hi - lo <= kEps) return {Contact::touch, lo, 0};
    return {Contact::overlap, lo, 0};
  }
  double t = cross(c - a, s) / denom;
  double u = cross(c - a, r) / denom;
  const double e = 1e-9;
  if (t < -e || t > 1 + e || u < -e || u > 1 + e) return {};
  bool interior = t > e && t < 1 - e && u > e && u < 1 - e;
  return {interior ? Contact::proper : Contact::touch, t, u};
}

}  // namespace chartbraid::detail
