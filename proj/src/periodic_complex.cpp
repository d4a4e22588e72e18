#include "iams/periodic_complex.hpp"

#include <algorithm>
#include <set>

namespace iams {

Face make_face(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::string face_to_string(const Face& face) {
  std::string s = "[";
  for (std::size_t i = 0; i < face.size(); ++i) s += (i ? " " : "") + to_string(face[i]);
  return s + "]";
}

std::vector<Face> faces_of(const geo::Polygon& poly) {
  std::vector<Face> out;
  for (const auto& v : poly) out.push_back({v});
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(make_face({poly[i], poly[(i + 1) % n]}));
  out.push_back(make_face(poly));
  return out;
}

PeriodicComplex::PeriodicComplex(ConeDecomposition base, std::vector<geo::Polygon> patch)
    : base_(std::move(base)), patch_(std::move(patch)) {
  std::set<RatVec> verts;
  std::set<Face> edges;
  for (auto& poly : patch_) {
    poly = geo::make_ccw(poly);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      verts.insert(poly[i]);
      edges.insert(make_face({poly[i], poly[(i + 1) % poly.size()]}));
    }
  }
  vertices_.assign(verts.begin(), verts.end());
  edges_.assign(edges.begin(), edges.end());
}

std::vector<Face> PeriodicComplex::patch_faces() const {
  std::set<Face> all;
  for (const auto& poly : patch_)
    for (auto& f : faces_of(poly)) all.insert(std::move(f));
  return {all.begin(), all.end()};
}

std::vector<geo::Polygon> PeriodicComplex::cells_containing(const RatVec& p) const {
  std::vector<geo::Polygon> out;
  const VarphiResult res = varphi_min(data(), p);
  for (const auto& a : res.minimizers) {
    const RatVec shift = to_rat(b_tilde(data(), a));
    const RatVec q = add(p, shift);
    for (const auto& poly : patch_) {
      if (!geo::contains(poly, q)) continue;
      geo::Polygon moved;
      for (const auto& v : poly) moved.push_back(sub(v, shift));
      out.push_back(std::move(moved));
    }
  }
  return out;
}

Face PeriodicComplex::carrier(const RatVec& p) const {
  const auto cells = cells_containing(p);
  if (cells.empty()) throw std::logic_error("point not covered by the complex");
  const geo::Polygon& poly = cells.front();
  const std::size_t n = poly.size();
  for (const auto& v : poly)
    if (v == p) return {p};
  for (std::size_t i = 0; i < n; ++i)
    if (geo::on_segment(p, poly[i], poly[(i + 1) % n])) return make_face({poly[i], poly[(i + 1) % n]});
  return make_face(poly);
}

std::vector<geo::Polygon> PeriodicComplex::star_cells(const Face& face) const {
  std::vector<geo::Polygon> out;
  for (auto& poly : cells_containing(geo::centroid(face))) {
    const Face verts = make_face(poly);
    if (std::includes(verts.begin(), verts.end(), face.begin(), face.end()))
      out.push_back(std::move(poly));
  }
  return out;
}

bool PeriodicComplex::is_vertex(const RatVec& p) const { return carrier(p).size() == 1; }

bool PeriodicComplex::is_face(const Face& face) const {
  return carrier(geo::centroid(face)) == face;
}

RatVec PeriodicComplex::reduce(const RatVec& p) const {
  const RatVec& n0 = data().center_shift();
  RatVec c = multiply(data().b_tilde_inverse(), add(p, n0));
  IntVec whole(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) whole[i] = floor_of(c[i]);
  return sub(p, to_rat(b_tilde(data(), whole)));
}

Face PeriodicComplex::l_key(const Face& face) const {
  Face best;
  for (const auto& v : face) {
    const RatVec t = sub(reduce(v), v);
    Face cand;
    for (const auto& w : face) cand.push_back(add(w, t));
    cand = make_face(std::move(cand));
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

Face PeriodicComplex::act(const GammaElement& g, const Face& face) const {
  Face out;
  for (const auto& v : face) out.push_back(act_height1(data(), g, v));
  return make_face(std::move(out));
}

Face PeriodicComplex::gamma_key(const Face& face) const {
  Face best = l_key(face);
  if (data().has_involution()) {
    Face other = l_key(act(GammaElement{IntVec(2, 0), -1}, face));
    if (other < best) best = std::move(other);
  }
  return best;
}

std::vector<GammaElement> PeriodicComplex::elements_mapping_face(const Face& from,
                                                                 const Face& to) const {
  std::vector<GammaElement> out;
  if (from.size() != to.size() || from.empty()) return out;
  for (const auto& target : to)
    for (const auto& g : elements_mapping(data(), from.front(), target))
      if (act(g, from) == to && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

PeriodicComplex canonical_complex(const ConeDecomposition& decomp) {
  return PeriodicComplex(decomp, {decomp.reference});
}

}  // namespace iams
