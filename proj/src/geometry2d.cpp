#include "iams/geometry2d.hpp"

#include <algorithm>

namespace iams::geo {

Rat cross(const RatVec& o, const RatVec& a, const RatVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

int orientation(const RatVec& o, const RatVec& a, const RatVec& b) { return sgn(cross(o, a, b)); }

Rat twice_area(const Polygon& poly) {
  Rat total = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    total += p[0] * q[1] - p[1] * q[0];
  }
  return total;
}

Polygon make_ccw(Polygon poly) {
  if (twice_area(poly) < 0) std::reverse(poly.begin(), poly.end());
  return poly;
}

bool on_segment(const RatVec& p, const RatVec& a, const RatVec& b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

Where locate_in_convex(const Polygon& poly, const RatVec& p) {
  if (poly.empty()) return Where::Outside;
  if (poly.size() == 1) return poly[0] == p ? Where::Boundary : Where::Outside;
  if (poly.size() == 2) return on_segment(p, poly[0], poly[1]) ? Where::Boundary : Where::Outside;
  bool boundary = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int o = orientation(poly[i], poly[(i + 1) % n], p);
    if (o < 0) return Where::Outside;
    if (o == 0) boundary = true;
  }
  return boundary ? Where::Boundary : Where::Inside;
}

Polygon clip(const Polygon& poly, const RatVec& normal, const Rat& offset) {
  Polygon out;
  const std::size_t n = poly.size();
  auto value = [&](const RatVec& x) -> Rat { return normal[0] * x[0] + normal[1] * x[1] + offset; };
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec& cur = poly[i];
    const RatVec& nxt = poly[(i + 1) % n];
    const Rat vc = value(cur);
    const Rat vn = value(nxt);
    if (vc >= 0) out.push_back(cur);
    if ((vc > 0 && vn < 0) || (vc < 0 && vn > 0)) {
      const Rat t = vc / (vc - vn);
      out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return cleanup(out);
}

Polygon cleanup(const Polygon& poly) {
  Polygon tmp;
  for (const auto& p : poly)
    if (tmp.empty() || tmp.back() != p) tmp.push_back(p);
  while (tmp.size() > 1 && tmp.front() == tmp.back()) tmp.pop_back();
  if (tmp.size() < 3) return tmp;
  bool changed = true;
  while (changed && tmp.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < tmp.size(); ++i) {
      const auto& prev = tmp[(i + tmp.size() - 1) % tmp.size()];
      const auto& next = tmp[(i + 1) % tmp.size()];
      if (cross(prev, tmp[i], next) == 0) {
        tmp.erase(tmp.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return tmp;
}

Polygon box(const Rat& xlo, const Rat& ylo, const Rat& xhi, const Rat& yhi) {
  return {{xlo, ylo}, {xhi, ylo}, {xhi, yhi}, {xlo, yhi}};
}

Polygon convex_hull(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Polygon hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<IntVec> lattice_points(const Polygon& poly) {
  std::vector<IntVec> out;
  if (poly.empty()) return out;
  Rat xlo = poly[0][0], xhi = poly[0][0], ylo = poly[0][1], yhi = poly[0][1];
  for (const auto& p : poly) {
    xlo = std::min(xlo, p[0]);
    xhi = std::max(xhi, p[0]);
    ylo = std::min(ylo, p[1]);
    yhi = std::max(yhi, p[1]);
  }
  for (Int x = ceil_of(xlo); x <= floor_of(xhi); ++x)
    for (Int y = ceil_of(ylo); y <= floor_of(yhi); ++y)
      if (contains(poly, {Rat(x), Rat(y)})) out.push_back({x, y});
  return out;
}

RatVec barycentric(const RatVec& a, const RatVec& b, const RatVec& c, const RatVec& p) {
  const Rat total = cross(a, b, c);
  if (total == 0) throw ArithmeticError("barycentric: degenerate triangle");
  const Rat wa = cross(p, b, c) / total;
  const Rat wb = cross(a, p, c) / total;
  return {wa, wb, Rat(1) - wa - wb};
}

RatVec centroid(const Polygon& poly) {
  RatVec c{0, 0};
  for (const auto& p : poly) c = add(c, p);
  return scale(Rat(1, static_cast<long>(poly.size())), c);
}

bool same_vertex_set(Polygon a, Polygon b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool segment_crossing(const RatVec& p, const RatVec& q, const RatVec& a, const RatVec& b, Rat& t) {
  const RatVec d = sub(q, p);
  const RatVec e = sub(b, a);
  const Rat denom = d[0] * e[1] - d[1] * e[0];
  if (denom == 0) return false;
  const RatVec w = sub(a, p);
  t = (w[0] * e[1] - w[1] * e[0]) / denom;
  const Rat u = (w[0] * d[1] - w[1] * d[0]) / denom;
  return t >= 0 && t <= 1 && u >= 0 && u <= 1;
}

}  // namespace iams::geo
