#include "iams/complexes_quotients.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iams {

namespace {

std::size_t dim_of(const Face& f) { return f.size() >= 3 ? 2 : f.size() - 1; }

std::size_t index_in(const std::vector<Face>& sorted, const Face& f) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
  if (it == sorted.end() || *it != f) throw NotAdmissible("face " + face_to_string(f) + " has no orbit");
  return static_cast<std::size_t>(it - sorted.begin());
}

/// Sub-faces one dimension down.
std::vector<Face> facets(const Face& f, const PeriodicComplex& c) {
  std::vector<Face> out;
  if (f.size() == 2) {
    out.push_back({f[0]});
    out.push_back({f[1]});
  } else if (f.size() >= 3) {
    const auto cells = c.star_cells(f);
    const geo::Polygon poly = cells.empty() ? geo::convex_hull(f) : cells.front();
    for (std::size_t i = 0; i < poly.size(); ++i)
      out.push_back(make_face({poly[i], poly[(i + 1) % poly.size()]}));
  }
  return out;
}

nlohmann::json point_json(const RatVec& v) { return {to_string(v[0]), to_string(v[1])}; }

nlohmann::json face_json(const Face& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : f) j.push_back(point_json(v));
  return j;
}

bool is_singular_vertex(const PeriodicComplex& c, const Face& f) {
  return f.size() == 1 && c.data().has_involution() && is_fixed_point(c.data(), f[0]);
}

}  // namespace

Face SimplicialComplex::coordinates(const std::vector<std::size_t>& face) const {
  std::vector<RatVec> pts;
  for (auto i : face) pts.push_back(vertices[i]);
  return make_face(std::move(pts));
}

bool SimplicialComplex::closed_under_subsets() const {
  std::set<std::vector<std::size_t>> edges(faces[1].begin(), faces[1].end());
  for (const auto& e : faces[1])
    for (auto v : e)
      if (v >= vertices.size()) return false;
  for (const auto& poly : periodic.patch()) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto a = std::lower_bound(vertices.begin(), vertices.end(), poly[i]);
      const auto b = std::lower_bound(vertices.begin(), vertices.end(), poly[(i + 1) % poly.size()]);
      if (a == vertices.end() || b == vertices.end()) return false;
      std::vector<std::size_t> e{static_cast<std::size_t>(a - vertices.begin()),
                                 static_cast<std::size_t>(b - vertices.begin())};
      std::sort(e.begin(), e.end());
      if (!edges.count(e)) return false;
    }
  }
  return true;
}

SimplicialComplex dual_complex(const RefinedDecomposition& refined) {
  SimplicialComplex sc;
  sc.periodic = refined.complex;
  sc.vertices = sc.periodic.patch_vertices();
  auto idx = [&](const RatVec& v) {
    return static_cast<std::size_t>(std::lower_bound(sc.vertices.begin(), sc.vertices.end(), v) -
                                    sc.vertices.begin());
  };
  for (std::size_t i = 0; i < sc.vertices.size(); ++i) {
    sc.faces[0].push_back({i});
    if (is_singular_vertex(sc.periodic, {sc.vertices[i]})) sc.singular.push_back(i);
  }
  for (const auto& e : sc.periodic.patch_edges()) sc.faces[1].push_back({idx(e[0]), idx(e[1])});
  for (const auto& poly : sc.periodic.patch()) {
    std::vector<std::size_t> f;
    for (const auto& v : poly) f.push_back(idx(v));
    std::sort(f.begin(), f.end());
    sc.faces[2].push_back(std::move(f));
  }
  std::sort(sc.faces[2].begin(), sc.faces[2].end());
  return sc;
}

long QuotientComplex::euler_characteristic() const {
  return static_cast<long>(count(0)) - static_cast<long>(count(1)) + static_cast<long>(count(2));
}

Face QuotientComplex::key(const Face& face) const {
  return group == QuotientGroup::L ? base.periodic.l_key(face) : base.periodic.gamma_key(face);
}

std::size_t QuotientComplex::orbit_of(const Face& face) const {
  return index_in(orbit_faces[dim_of(face)], key(face));
}

QuotientComplex quotient(const SimplicialComplex& complex, QuotientGroup group) {
  QuotientComplex q;
  q.base = complex;
  q.group = group;
  const PeriodicComplex& pc = complex.periodic;
  std::vector<GammaElement> gens;
  for (const auto& g : generators(pc.data()))
    if (group == QuotientGroup::Gamma || g.h == 1) gens.push_back(g);

  for (std::size_t d = 0; d < 3; ++d) {
    std::set<Face> keys;
    for (const auto& f : complex.faces[d]) {
      const Face coords = complex.coordinates(f);
      for (const auto& g : gens) {
        const Face image = pc.act(g, coords);
        if (!pc.is_face(image))
          throw NotAdmissible("S_" + to_string(g) + " maps " + face_to_string(coords) +
                              " to " + face_to_string(image) + ", which is not a face");
      }
      keys.insert(q.key(coords));
    }
    q.orbit_faces[d].assign(keys.begin(), keys.end());
    for (const auto& f : complex.faces[d]) q.orbit_map[d].push_back(index_in(q.orbit_faces[d], q.key(complex.coordinates(f))));
  }

  for (std::size_t d = 1; d < 3; ++d) {
    q.boundary[d].assign(q.count(static_cast<int>(d)), {});
    std::vector<bool> seen(q.count(static_cast<int>(d)), false);
    for (std::size_t i = 0; i < complex.faces[d].size(); ++i) {
      std::vector<std::size_t> bd;
      for (const auto& sub : facets(complex.coordinates(complex.faces[d][i]), pc))
        bd.push_back(index_in(q.orbit_faces[d - 1], q.key(sub)));
      std::sort(bd.begin(), bd.end());
      const std::size_t o = q.orbit_map[d][i];
      if (!seen[o]) {
        q.boundary[d][o] = std::move(bd);
        seen[o] = true;
      } else if (q.boundary[d][o] != bd) {
        throw NotAdmissible("face relation of orbit " + face_to_string(q.orbit_faces[d][o]) +
                            " depends on the representative");
      }
    }
  }

  if (group == QuotientGroup::Gamma)
    for (std::size_t i = 0; i < q.count(0); ++i)
      if (is_singular_vertex(pc, q.orbit_faces[0][i])) q.singular_marks.push_back(i);
  return q;
}

CoveringReport covering_report(const PeriodicComplex& complex) {
  CoveringReport rep;
  const ValidatedData& data = complex.data();
  const bool inv = data.has_involution();

  std::set<Face> l_keys;
  for (const auto& f : complex.patch_faces()) l_keys.insert(complex.l_key(f));

  // Star(f) meets a translate Star(g f) iff some cell contains f and g f.
  for (const auto& f : l_keys) {
    const bool singular = is_singular_vertex(complex, f);
    for (const auto& cell : complex.star_cells(f)) {
      for (const auto& other : faces_of(cell)) {
        if (other.size() != f.size() || other == f) continue;
        for (const auto& g : complex.elements_mapping_face(f, other)) {
          if (g.h == 1) {
            rep.torus_evenly_covered = false;
            rep.torus_collisions.push_back({f, other, g});
          }
          if (!singular && (g.h == 1 || inv)) {
            rep.sphere_evenly_covered = false;
            rep.sphere_collisions.push_back({f, other, g});
          }
        }
      }
    }
    const auto stab = complex.elements_mapping_face(f, f);
    if (stab.size() > 1 && !singular) {
      rep.sphere_evenly_covered = false;
      for (const auto& g : stab)
        if (!is_identity(g)) rep.sphere_collisions.push_back({f, f, g});
    }
  }

  // Each Gamma-orbit splits into |H| / |stabilizer| L-orbits.
  std::map<Face, std::size_t> l_orbits_per_gamma_orbit;
  for (const auto& f : l_keys) ++l_orbits_per_gamma_orbit[complex.gamma_key(f)];
  const std::size_t h_order = inv ? 2 : 1;
  for (const auto& [key, n] : l_orbits_per_gamma_orbit) {
    const std::size_t stab = complex.elements_mapping_face(key, key).size();
    if (n * stab != h_order) rep.orbit_counts_consistent = false;
  }

  std::set<Face> ramified;
  for (const auto& [key, n] : l_orbits_per_gamma_orbit) {
    (void)n;
    if (key.size() != 1) continue;
    const std::size_t stab = complex.elements_mapping_face(key, key).size();
    if (stab > 1) {
      rep.ramification.push_back({key, stab});
      ramified.insert(key);
    }
  }
  std::set<Face> z;
  for (const auto& p : fixed_point_classes(data)) z.insert(complex.gamma_key({p}));
  rep.ramified_exactly_on_z = ramified == z;
  return rep;
}

nlohmann::json to_json(const SimplicialComplex& c) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : c.vertices) verts.push_back(point_json(v));
  return {{"vertices", verts},
          {"edges", c.faces[1]},
          {"cells", c.faces[2]},
          {"singular", c.singular}};
}

nlohmann::json to_json(const QuotientComplex& q) {
  nlohmann::json faces = nlohmann::json::array();
  for (std::size_t d = 0; d < 3; ++d) {
    nlohmann::json level = nlohmann::json::array();
    for (std::size_t i = 0; i < q.orbit_faces[d].size(); ++i) {
      nlohmann::json f = {{"id", i}, {"key", face_json(q.orbit_faces[d][i])}};
      if (d > 0) f["boundary"] = q.boundary[d][i];
      level.push_back(std::move(f));
    }
    faces.push_back(std::move(level));
  }
  nlohmann::json z = nlohmann::json::array();
  for (auto i : q.singular_marks) z.push_back(point_json(q.orbit_faces[0][i][0]));
  return {{"group", q.group == QuotientGroup::L ? "L" : "Gamma"},
          {"counts", {q.count(0), q.count(1), q.count(2)}},
          {"euler_characteristic", q.euler_characteristic()},
          {"faces", faces},
          {"orbit_map", q.orbit_map},
          {"Z", z}};
}

nlohmann::json to_json(const CoveringReport& r) {
  auto collisions = [](const std::vector<StarCollision>& cs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : cs)
      j.push_back({{"face", face_json(c.face)}, {"image", face_json(c.image)}, {"gamma", to_string(c.gamma)}});
    return j;
  };
  nlohmann::json ram = nlohmann::json::array();
  for (const auto& x : r.ramification) ram.push_back({{"vertex", point_json(x.vertex[0])}, {"index", x.index}});
  return {{"pass", r.pass()},
          {"torus_evenly_covered", r.torus_evenly_covered},
          {"sphere_evenly_covered", r.sphere_evenly_covered},
          {"orbit_counts_consistent", r.orbit_counts_consistent},
          {"ramified_exactly_on_Z", r.ramified_exactly_on_z},
          {"torus_collisions", collisions(r.torus_collisions)},
          {"sphere_collisions", collisions(r.sphere_collisions)},
          {"ramification", ram}};
}

}  // namespace iams
