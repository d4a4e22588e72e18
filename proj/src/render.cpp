#include "iams/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace iams {

namespace {

struct Frame {
  Window w;
  Rat unit;  // pixels per unit length
  Rat x(const Rat& v) const { return 20 + (v - w.xlo) * unit; }
  Rat y(const Rat& v) const { return 20 + (w.yhi - v) * unit; }
};

std::string points_attr(const Frame& f, const geo::Polygon& poly) {
  std::string s;
  for (std::size_t i = 0; i < poly.size(); ++i)
    s += (i ? " " : "") + decimal(f.x(poly[i][0])) + "," + decimal(f.y(poly[i][1]));
  return s;
}

/// Integer range of coordinate i of M^{-1}(p - q) over p in ps, q in qs.
std::pair<Int, Int> coefficient_range(const RatMat& inv, const std::vector<RatVec>& ps,
                                      const std::vector<RatVec>& qs, std::size_t i) {
  bool first = true;
  Rat lo, hi;
  for (const auto& p : ps)
    for (const auto& q : qs) {
      const Rat c = multiply(inv, sub(p, q))[i];
      if (first || c < lo) lo = c;
      if (first || c > hi) hi = c;
      first = false;
    }
  return {floor_of(lo), ceil_of(hi)};
}

bool meets(const geo::Polygon& poly, const Window& w) {
  Rat xlo = poly[0][0], xhi = poly[0][0], ylo = poly[0][1], yhi = poly[0][1];
  for (const auto& v : poly) {
    xlo = std::min(xlo, v[0]);
    xhi = std::max(xhi, v[0]);
    ylo = std::min(ylo, v[1]);
    yhi = std::max(yhi, v[1]);
  }
  return xlo <= w.xhi && w.xlo <= xhi && ylo <= w.yhi && w.ylo <= yhi;
}

bool inside(const RatVec& p, const Window& w) {
  return w.xlo <= p[0] && p[0] <= w.xhi && w.ylo <= p[1] && p[1] <= w.yhi;
}

}  // namespace

std::string decimal(const Rat& v, int digits) {
  Int pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Int r = floor_of(v * Rat(pow10) + Rat(1, 2));
  const bool neg = r < 0;
  if (neg) r = -r;
  std::string s = r.get_str();
  if (digits == 0) return (neg ? "-" : "") + s;
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

Window parse_window(const std::string& text) {
  std::vector<Rat> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("window entry '" + item + "' is not a rational number");
    }
  }
  if (vals.size() != 4) throw std::invalid_argument("window needs four entries xlo,ylo,xhi,yhi");
  Window w{vals[0], vals[1], vals[2], vals[3]};
  if (!(w.xlo < w.xhi) || !(w.ylo < w.yhi)) throw std::invalid_argument("window is empty");
  return w;
}

Window reference_window(const PeriodicComplex& complex) {
  const auto& ref = complex.base().reference;
  Window w{ref[0][0], ref[0][1], ref[0][0], ref[0][1]};
  for (const auto& v : ref) {
    w.xlo = std::min(w.xlo, v[0]);
    w.ylo = std::min(w.ylo, v[1]);
    w.xhi = std::max(w.xhi, v[0]);
    w.yhi = std::max(w.yhi, v[1]);
  }
  return w;
}

Drawing render_complex(const PeriodicComplex& complex, const Window& w, const std::string& title) {
  if (!(w.xlo < w.xhi) || !(w.ylo < w.yhi)) throw std::invalid_argument("window is empty");
  const ValidatedData& data = complex.data();
  const Rat width = w.xhi - w.xlo, height = w.yhi - w.ylo;
  const Frame f{w, Rat(480) / std::max(width, height)};
  const std::vector<RatVec> corners{{w.xlo, w.ylo}, {w.xhi, w.ylo}, {w.xhi, w.yhi}, {w.xlo, w.yhi}};

  Drawing out;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << decimal(width * f.unit + 40, 0)
      << "\" height=\"" << decimal(height * f.unit + 40, 0) << "\">\n";
  svg << "<title>" << title << "</title>\n";
  svg << "<defs><clipPath id=\"window\"><rect x=\"20\" y=\"20\" width=\"" << decimal(width * f.unit)
      << "\" height=\"" << decimal(height * f.unit) << "\"/></clipPath></defs>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  svg << "<g clip-path=\"url(#window)\" fill=\"none\" stroke=\"#666\" stroke-width=\"1\">\n";
  const RatMat& inv = data.b_tilde_inverse();
  const auto& ref = complex.base().reference;
  const auto r0 = coefficient_range(inv, ref, corners, 0);
  const auto r1 = coefficient_range(inv, ref, corners, 1);
  for (Int a = r0.first; a <= r0.second; ++a)
    for (Int b = r1.first; b <= r1.second; ++b) {
      const RatVec shift = to_rat(b_tilde(data, {a, b}));
      for (const auto& poly : complex.patch()) {
        geo::Polygon moved;
        for (const auto& v : poly) moved.push_back(sub(v, shift));
        if (!meets(moved, w)) continue;
        ++out.cells;
        svg << "<polygon class=\"cell\" points=\"" << points_attr(f, moved) << "\"/>\n";
      }
    }
  svg << "</g>\n";

  svg << "<polygon class=\"reference\" fill=\"none\" stroke=\"#b00\" stroke-width=\"2\" points=\""
      << points_attr(f, ref) << "\"/>\n";

  // Boundary edges of sigma_0, labelled by their L-orbit.
  std::map<Face, int> uses;
  for (const auto& poly : complex.patch())
    for (std::size_t i = 0; i < poly.size(); ++i) ++uses[make_face({poly[i], poly[(i + 1) % poly.size()]})];
  std::map<Face, std::size_t> orbit_ids;
  for (const auto& [edge, n] : uses)
    if (n == 1) orbit_ids.emplace(complex.l_key(edge), orbit_ids.size());
  for (const auto& [edge, n] : uses) {
    if (n != 1) continue;
    const RatVec mid = geo::centroid(edge);
    svg << "<text class=\"glue\" x=\"" << decimal(f.x(mid[0])) << "\" y=\"" << decimal(f.y(mid[1]))
        << "\" font-size=\"10\" fill=\"#b00\">e" << orbit_ids.at(complex.l_key(edge)) << "</text>\n";
  }

  if (data.has_involution()) {
    const RatVec& n0 = data.center_shift();
    const RatMat half_inv = scale(Rat(2), inv);
    std::vector<RatVec> base{negate(n0)};
    const auto s0 = coefficient_range(half_inv, corners, base, 0);
    const auto s1 = coefficient_range(half_inv, corners, base, 1);
    for (Int a = s0.first; a <= s0.second; ++a)
      for (Int b = s1.first; b <= s1.second; ++b) {
        const RatVec p = sub(scale(Rat(1, 2), to_rat(b_tilde(data, {a, b}))), n0);
        if (!inside(p, w)) continue;
        ++out.highlighted;
        svg << "<circle class=\"ftilde\" cx=\"" << decimal(f.x(p[0])) << "\" cy=\"" << decimal(f.y(p[1]))
            << "\" r=\"4\" fill=\"#06c\"/>\n";
      }
  }
  svg << "<rect class=\"window\" x=\"20\" y=\"20\" width=\"" << decimal(width * f.unit) << "\" height=\""
      << decimal(height * f.unit) << "\" fill=\"none\" stroke=\"#000\"/>\n";
  svg << "</svg>\n";
  out.svg = svg.str();
  return out;
}

}  // namespace iams
