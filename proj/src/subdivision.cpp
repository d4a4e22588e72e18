#include "iams/subdivision.hpp"

#include <algorithm>
#include <set>

namespace iams {

namespace {

void absorb_denominators(Int& nu, const RatVec& v) { nu = lcm_of(nu, denominator_lcm(v)); }

bool in_translation_lattice(const ValidatedData& data, const RatVec& v, IntVec& l) {
  const RatVec c = multiply(data.b_tilde_inverse(), v);
  if (!is_integral(c)) return false;
  l = to_int(c);
  return true;
}

}  // namespace

IntegralizeResult integralize(const ConeDecomposition& decomp, const Int& cap) {
  Int nu = 1;
  for (const auto& v : decomp.reference) absorb_denominators(nu, v);
  for (const auto& f : fixed_point_classes(decomp.data)) absorb_denominators(nu, f);
  absorb_denominators(nu, decomp.data.center_shift());
  if (nu > cap)
    throw NoIntegralizer("integralizing base change " + to_string(nu) + " exceeds the cap " +
                         to_string(cap));
  if (nu == 1) return {nu, decomp};
  return {nu, build_decomposition(base_change(decomp.data, nu))};
}

namespace {

struct Tri {
  IntVec a, b, c;  // CCW
};

Int cross_int(const IntVec& o, const IntVec& a, const IntVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

class Triangulation {
 public:
  std::vector<Tri> tris;
  std::set<IntVec> vertices;

  void insert(const IntVec& q) {
    if (vertices.count(q)) return;
    std::vector<Tri> next;
    bool placed = false;
    for (const Tri& t : tris) {
      const Int s0 = cross_int(t.a, t.b, q);
      const Int s1 = cross_int(t.b, t.c, q);
      const Int s2 = cross_int(t.c, t.a, q);
      if (s0 < 0 || s1 < 0 || s2 < 0) {
        next.push_back(t);
        continue;
      }
      placed = true;
      if (s0 > 0 && s1 > 0 && s2 > 0) {
        next.push_back({t.a, t.b, q});
        next.push_back({t.b, t.c, q});
        next.push_back({t.c, t.a, q});
      } else if (s0 == 0) {
        next.push_back({t.a, q, t.c});
        next.push_back({q, t.b, t.c});
      } else if (s1 == 0) {
        next.push_back({t.b, q, t.a});
        next.push_back({q, t.c, t.a});
      } else {
        next.push_back({t.c, q, t.b});
        next.push_back({q, t.a, t.b});
      }
    }
    if (!placed) throw std::logic_error("lattice point outside the reference cell");
    tris = std::move(next);
    vertices.insert(q);
  }
};

}  // namespace

PeriodicComplex triangulate_reference(const ConeDecomposition& decomp) {
  const ValidatedData& data = decomp.data;
  const RatVec center_rat = scale(Rat(-1), data.center_shift());
  if (!is_integral(center_rat)) throw std::invalid_argument("triangulation needs an integral center");
  for (const auto& v : decomp.reference)
    if (!is_integral(v)) throw std::invalid_argument("triangulation needs integral vertices");
  const IntVec center = to_int(center_rat);

  std::vector<IntVec> boundary;
  const std::size_t n = decomp.reference.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec from = to_int(decomp.reference[i]);
    const IntVec to = to_int(decomp.reference[(i + 1) % n]);
    const IntVec d = sub(to, from);
    const Int g = gcd_of(d[0], d[1]);
    const IntVec step{d[0] / g, d[1] / g};
    for (Int k = 0; k < g; ++k) boundary.push_back(add(from, scale(k, step)));
  }

  Triangulation tri;
  tri.vertices.insert(center);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    tri.tris.push_back({center, boundary[i], boundary[(i + 1) % boundary.size()]});
    tri.vertices.insert(boundary[i]);
  }
  for (const auto& q : geo::lattice_points(decomp.reference)) {
    tri.insert(q);
    if (data.has_involution()) tri.insert(sub(scale(Int(2), center), q));
  }

  std::vector<geo::Polygon> patch;
  for (const Tri& t : tri.tris) {
    const Int det = cross_int(t.a, t.b, t.c);
    if (det != 1) throw std::logic_error("non-unimodular triangle left after insertion");
    patch.push_back({to_rat(t.a), to_rat(t.b), to_rat(t.c)});
  }
  std::sort(patch.begin(), patch.end());
  return PeriodicComplex(decomp, std::move(patch));
}

RefinedDecomposition make_refined(PeriodicComplex complex, const Int& nu) {
  RefinedDecomposition r;
  std::set<Face> keys;
  for (const auto& poly : complex.patch()) keys.insert(complex.gamma_key(make_face(poly)));
  r.triangles.assign(keys.begin(), keys.end());
  r.sing_rays = fixed_point_classes(complex.data());
  r.nu = nu;
  r.complex = std::move(complex);
  return r;
}

RefinedDecomposition refine(const ConeDecomposition& decomp, const Int& nu,
                            const RefineOptions& options) {
  ConeDecomposition current = decomp;
  Int acc = nu;
  for (int round = 0;; ++round) {
    PeriodicComplex complex = triangulate_reference(current);
    const ConditionReport report = verify_conditions(complex);
    if (report.all() && round >= options.forced_doublings) return make_refined(std::move(complex), acc);
    if (round >= options.rounds)
      throw RefinementDiverged("conditions still fail after " + std::to_string(options.rounds) +
                               " refinement rounds (nu = " + to_string(acc) + ")");
    acc *= 2;
    current = build_decomposition(base_change(current.data, 2));
  }
}

RefinedDecomposition refine(const RefinedDecomposition& refined, const RefineOptions& options) {
  if (verify_conditions(refined).all()) return refined;
  return refine(refined.complex.base(), refined.nu, options);
}

ConditionReport verify_conditions(const PeriodicComplex& complex) {
  const ValidatedData& data = complex.data();
  ConditionReport rep;

  for (const auto& v : complex.patch_vertices())
    if (!is_integral(v)) {
      rep.semistable = {false, "vertex " + to_string(v) + " is not in N"};
      break;
    }

  for (const auto& poly : complex.patch()) {
    if (poly.size() != 3) {
      rep.smooth = {false, "cell " + face_to_string(make_face(poly)) + " is not a triangle"};
      break;
    }
    const Rat det = abs_of(geo::cross(poly[0], poly[1], poly[2]));
    if (det != 1) {
      rep.smooth = {false, "triangle " + face_to_string(make_face(poly)) + " has determinant " +
                               to_string(det)};
      break;
    }
  }

  if (!complex.is_vertex(RatVec{0, 0})) rep.contains_sigma_T = {false, "(0,0) is not a vertex"};

  // (d): a 2-cell meets its translate by b~(l) iff b~(l) lies in P - P.
  for (const auto& poly : complex.patch()) {
    if (!rep.cond_d.ok) break;
    std::vector<RatVec> diffs;
    for (const auto& v : poly)
      for (const auto& w : poly) diffs.push_back(sub(v, w));
    const geo::Polygon body = geo::convex_hull(diffs);
    Rat lo[2], hi[2];
    for (std::size_t k = 0; k < body.size(); ++k) {
      const RatVec c = multiply(data.b_tilde_inverse(), body[k]);
      for (int i = 0; i < 2; ++i) {
        if (k == 0 || c[i] < lo[i]) lo[i] = c[i];
        if (k == 0 || c[i] > hi[i]) hi[i] = c[i];
      }
    }
    for (Int i = ceil_of(lo[0]); i <= floor_of(hi[0]) && rep.cond_d.ok; ++i)
      for (Int j = ceil_of(lo[1]); j <= floor_of(hi[1]); ++j) {
        const IntVec l{i, j};
        if (is_zero(l)) continue;
        if (geo::contains(body, to_rat(b_tilde(data, l)))) {
          rep.cond_d = {false, "cell " + face_to_string(make_face(poly)) + " meets its translate by l = " +
                                   to_string(l)};
          break;
        }
      }
  }

  // (e): Star(s) meets Star(s) + b~(l) iff one 2-cell holds two vertices
  // differing by b~(l).
  for (const auto& poly : complex.patch()) {
    if (!rep.cond_e.ok) break;
    for (std::size_t i = 0; i < poly.size() && rep.cond_e.ok; ++i)
      for (std::size_t j = i + 1; j < poly.size(); ++j) {
        IntVec l;
        if (in_translation_lattice(data, sub(poly[j], poly[i]), l)) {
          rep.cond_e = {false, "vertices " + to_string(poly[i]) + " and " + to_string(poly[j]) +
                                   " of one cell differ by b~(" + to_string(l) + ")"};
          break;
        }
      }
  }

  for (const auto& c : fixed_point_classes(data))
    if (!complex.is_vertex(c)) {
      rep.cond_f = {false, to_string(c)};
      break;
    }

  // (g): no 2-cell contains both s and S_gamma(s), gamma != 1, s not in I_sing.
  for (const auto& poly : complex.patch()) {
    if (!rep.cond_g.ok) break;
    const auto faces = faces_of(poly);
    for (const auto& s : faces) {
      if (!rep.cond_g.ok) break;
      if (s.size() == 1 && is_fixed_point(data, s[0])) continue;
      for (const auto& t : faces) {
        if (t.size() != s.size()) continue;
        for (const auto& g : complex.elements_mapping_face(s, t)) {
          if (is_identity(g)) continue;
          rep.cond_g = {false, "cell " + face_to_string(make_face(poly)) + " contains " +
                                   face_to_string(s) + " and its image under " + to_string(g)};
          break;
        }
        if (!rep.cond_g.ok) break;
      }
    }
  }
  return rep;
}

nlohmann::json to_json(const ConditionReport& r) {
  auto one = [](const ConditionCheck& c) {
    nlohmann::json j = {{"ok", c.ok}};
    if (!c.ok) j["witness"] = c.witness;
    return j;
  };
  return {{"semistable", one(r.semistable)}, {"smooth", one(r.smooth)},
          {"contains_sigma_T", one(r.contains_sigma_T)}, {"cond_d", one(r.cond_d)},
          {"cond_e", one(r.cond_e)}, {"cond_f", one(r.cond_f)},
          {"cond_g", one(r.cond_g)}};
}

namespace {

nlohmann::json points_json(const std::vector<RatVec>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pts) out.push_back({to_string(p[0]), to_string(p[1])});
  return out;
}

}  // namespace

nlohmann::json to_json(const RefinedDecomposition& refined) {
  nlohmann::json tris = nlohmann::json::array();
  for (std::size_t i = 0; i < refined.triangles.size(); ++i)
    tris.push_back({{"orbit_id", i}, {"vertices", points_json(refined.triangles[i])}, {"dim", 3}});
  nlohmann::json patch = nlohmann::json::array();
  for (const auto& p : refined.complex.patch()) patch.push_back(points_json(p));
  return {{"data", to_json(refined.data().raw())},
          {"nu", to_string(refined.nu)},
          {"triangles", tris},
          {"patch", patch},
          {"sing_rays", points_json(refined.sing_rays)}};
}

}  // namespace iams
