#pragma once

// Exact planar geometry on rational points (RatVec of size 2). Polygons are
// convex vertex lists in counter-clockwise order unless stated otherwise.

#include <vector>

#include "iams/numeric.hpp"

namespace iams::geo {

using Polygon = std::vector<RatVec>;

/// (a - o) x (b - o).
Rat cross(const RatVec& o, const RatVec& a, const RatVec& b);
int orientation(const RatVec& o, const RatVec& a, const RatVec& b);
/// Signed, doubled area (positive for CCW).
Rat twice_area(const Polygon& poly);
Polygon make_ccw(Polygon poly);

bool on_segment(const RatVec& p, const RatVec& a, const RatVec& b);

enum class Where { Outside, Boundary, Inside };
Where locate_in_convex(const Polygon& poly, const RatVec& p);
inline bool contains(const Polygon& poly, const RatVec& p) {
  return locate_in_convex(poly, p) != Where::Outside;
}

/// Keeps the part of `poly` where <normal, x> + offset >= 0.
Polygon clip(const Polygon& poly, const RatVec& normal, const Rat& offset);
/// Drops repeated and collinear vertices.
Polygon cleanup(const Polygon& poly);
Polygon box(const Rat& xlo, const Rat& ylo, const Rat& xhi, const Rat& yhi);
/// Convex hull (CCW, no collinear points) of an arbitrary finite point set.
Polygon convex_hull(std::vector<RatVec> points);

/// Integral points of a closed convex polygon, sorted lexicographically.
std::vector<IntVec> lattice_points(const Polygon& poly);

/// Affine coordinates of p with respect to the triangle (a, b, c).
RatVec barycentric(const RatVec& a, const RatVec& b, const RatVec& c, const RatVec& p);
RatVec centroid(const Polygon& poly);

/// Order-insensitive comparison of vertex lists.
bool same_vertex_set(Polygon a, Polygon b);

/// Parameter t in [0,1] where segment p + t (q - p) meets segment [a, b],
/// when they cross at a single point; false otherwise.
bool segment_crossing(const RatVec& p, const RatVec& q, const RatVec& a, const RatVec& b, Rat& t);

}  // namespace iams::geo
