#ifndef ANSTAR_GEOMETRY2D_HPP
#define ANSTAR_GEOMETRY2D_HPP

#include "anstar/projection.hpp"

#include <vector>

namespace anstar::geom {

using Polygon = std::vector<PlanePoint>;

double cross(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b);
double distance(const PlanePoint& a, const PlanePoint& b);
/// Shoelace formula; positive for counter-clockwise polygons.
double signed_area(const Polygon& p);
/// Andrew's monotone chain, counter-clockwise, collinear points dropped.
Polygon convex_hull(std::vector<PlanePoint> pts);
/// Sutherland-Hodgman clip of `subject` against the convex CCW polygon `clip`.
Polygon clip_convex(const Polygon& subject, const Polygon& clip);
/// Area of the intersection of two convex CCW polygons.
double intersection_area(const Polygon& a, const Polygon& b);
/// Point inside or on the boundary of a convex CCW polygon, within tol.
bool contains(const Polygon& p, const PlanePoint& x, double tol);
/// Point strictly inside a convex CCW polygon, at least tol from every edge.
bool contains_strictly(const Polygon& p, const PlanePoint& x, double tol);
/// Distance from x to the segment [a, b].
double segment_distance(const PlanePoint& a, const PlanePoint& b, const PlanePoint& x);
PlanePoint rotate(const PlanePoint& p, double angle);
PlanePoint reflect(const PlanePoint& p, double axis_angle);

} // namespace anstar::geom

#endif // ANSTAR_GEOMETRY2D_HPP
