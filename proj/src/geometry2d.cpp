#include "anstar/geometry2d.hpp"

#include <algorithm>
#include <cmath>

namespace anstar::geom {

double cross(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double distance(const PlanePoint& a, const PlanePoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double signed_area(const Polygon& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % p.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

Polygon convex_hull(std::vector<PlanePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const PlanePoint& a, const PlanePoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (pts.size() < 3) return pts;
  Polygon hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 1e-15) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-15) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Polygon clip_convex(const Polygon& subject, const Polygon& clip) {
  Polygon out = subject;
  for (std::size_t i = 0; i < clip.size() && !out.empty(); ++i) {
    const PlanePoint& a = clip[i];
    const PlanePoint& b = clip[(i + 1) % clip.size()];
    Polygon in = std::move(out);
    out.clear();
    for (std::size_t j = 0; j < in.size(); ++j) {
      const PlanePoint& p = in[j];
      const PlanePoint& q = in[(j + 1) % in.size()];
      const double cp = cross(a, b, p);
      const double cq = cross(a, b, q);
      if (cp >= 0) out.push_back(p);
      if ((cp >= 0) != (cq >= 0)) {
        const double t = cp / (cp - cq);
        out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
  }
  return out;
}

double intersection_area(const Polygon& a, const Polygon& b) {
  const Polygon c = clip_convex(a, b);
  return c.size() < 3 ? 0.0 : std::max(0.0, signed_area(c));
}

bool contains(const Polygon& p, const PlanePoint& x, double tol) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % p.size()];
    if (cross(a, b, x) < -tol * distance(a, b)) return false;
  }
  return true;
}

bool contains_strictly(const Polygon& p, const PlanePoint& x, double tol) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % p.size()];
    if (cross(a, b, x) <= tol * distance(a, b)) return false;
  }
  return true;
}

double segment_distance(const PlanePoint& a, const PlanePoint& b, const PlanePoint& x) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((x.x - a.x) * dx + (x.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(a.x + t * dx - x.x, a.y + t * dy - x.y);
}

PlanePoint rotate(const PlanePoint& p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

PlanePoint reflect(const PlanePoint& p, double axis_angle) {
  const double c = std::cos(2 * axis_angle);
  const double s = std::sin(2 * axis_angle);
  return {c * p.x + s * p.y, s * p.x - c * p.y};
}

} // namespace anstar::geom
