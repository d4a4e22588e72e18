#include "iams/affine_structures.hpp"

#include <algorithm>
#include <set>

namespace iams {

namespace {

constexpr std::size_t kMaxWalk = 100000;

bool is_excluded(const AffineAtlas& atlas, const Face& f) {
  return f.size() == 1 && atlas.group == QuotientGroup::Gamma && is_fixed_point(atlas.complex.data(), f[0]);
}

/// Sub-faces of a cell that carry a chart.
std::vector<Face> chart_faces(const AffineAtlas& atlas, const geo::Polygon& cell) {
  std::vector<Face> out;
  for (auto& f : faces_of(cell))
    if (!is_excluded(atlas, f)) out.push_back(std::move(f));
  return out;
}

struct NonGeneric {};

/// Carriers met by the segment p -> p + d, starting and ending in open 2-cells.
std::vector<Face> walk(const PeriodicComplex& c, const RatVec& p, const RatVec& d) {
  const RatVec q = add(p, d);
  auto cells = c.cells_containing(p);
  if (cells.size() != 1) throw NonGeneric{};
  geo::Polygon cur = cells.front();
  std::vector<Face> out{make_face(cur)};
  Rat t = 0;
  for (std::size_t step = 0; step < kMaxWalk; ++step) {
    bool found = false;
    Rat exit;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      Rat s;
      if (geo::segment_crossing(p, q, cur[k], cur[(k + 1) % cur.size()], s) && s > t) {
        if (!found || s > exit) exit = s;
        found = true;
      }
    }
    if (!found) return out;
    if (exit == 1) throw NonGeneric{};
    const Face edge = c.carrier(add(p, scale(exit, d)));
    if (edge.size() != 2) throw NonGeneric{};
    const Face here = make_face(cur);
    bool moved = false;
    for (auto& cell : c.star_cells(edge)) {
      if (make_face(cell) == here) continue;
      cur = std::move(cell);
      moved = true;
      break;
    }
    if (!moved) throw std::logic_error("edge " + face_to_string(edge) + " bounds only one cell");
    out.push_back(edge);
    out.push_back(make_face(cur));
    t = exit;
  }
  throw std::logic_error("segment walk did not terminate");
}

ChartLoop loop_through(const AffineAtlas& atlas, const std::vector<Face>& carriers) {
  ChartLoop loop;
  GammaElement prev;
  for (std::size_t k = 0; k < carriers.size(); ++k) {
    const GammaElement g = atlas.placement(carriers[k]);
    LoopStep step{atlas.chart_of(carriers[k]), identity_element(2)};
    if (k > 0) step.gamma = compose(inverse(prev), g);
    loop.push_back(step);
    prev = g;
  }
  return loop;
}

RatMat halve(const RatMat& m) {
  RatMat out = scale(Rat(1, 2), m);
  for (const auto& row : out)
    if (!is_integral(row))
      throw IntegralityViolation("half of the torus radiance obstruction is not integral");
  return out;
}

nlohmann::json mat_json(const RatMat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    j.push_back(r);
  }
  return j;
}

IntMat columns_to_int(const std::vector<RatVec>& cols) {
  IntMat m(cols.front().size(), IntVec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i].get_num();
  return m;
}

}  // namespace

RatVec AffineTransform::apply(const RatVec& x) const {
  return add(multiply(to_rat(linear), x), translation);
}

AffineTransform identity_transform(std::size_t rank) {
  return {identity_int(rank), RatVec(rank)};
}

AffineTransform compose(const AffineTransform& a, const AffineTransform& b) {
  return {multiply(a.linear, b.linear), add(multiply(to_rat(a.linear), b.translation), a.translation)};
}

AffineTransform inverse(const AffineTransform& t) {
  const RatMat inv = inverse(to_rat(t.linear));
  IntMat lin(inv.size(), IntVec(inv.size()));
  for (std::size_t i = 0; i < inv.size(); ++i) lin[i] = to_int(inv[i]);
  return {lin, negate(multiply(inv, t.translation))};
}

AffineTransform transform_of(const ValidatedData& data, const GammaElement& g) {
  const std::size_t r = static_cast<std::size_t>(data.rank());
  IntMat lin = identity_int(r);
  for (std::size_t i = 0; i < r; ++i) lin[i][i] = g.h;
  RatVec t = add(scale(Rat(g.h - 1), data.center_shift()), to_rat(b_tilde(data, g.l)));
  return {lin, t};
}

std::string to_string(const AffineTransform& t) {
  std::string s = "x -> [";
  for (std::size_t i = 0; i < t.linear.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < t.linear[i].size(); ++j) s += (j ? " " : "") + t.linear[i][j].get_str();
  }
  return s + "] x + " + to_string(t.translation);
}

std::size_t AffineAtlas::chart_of(const Face& face) const {
  const Face key = group == QuotientGroup::L ? complex.l_key(face) : complex.gamma_key(face);
  const auto it = index_.find(key);
  if (it == index_.end()) throw NonOverlapping("face " + face_to_string(face) + " carries no chart");
  return it->second;
}

GammaElement AffineAtlas::placement(const Face& face) const {
  const Face& rep = charts[chart_of(face)].rep;
  auto gs = complex.elements_mapping_face(rep, face);
  if (group == QuotientGroup::L)
    gs.erase(std::remove_if(gs.begin(), gs.end(), [](const GammaElement& g) { return g.h != 1; }), gs.end());
  if (gs.size() > 1)
    throw AmbiguousDeck("two deck transformations carry " + face_to_string(rep) + " onto " +
                        face_to_string(face));
  if (gs.empty()) throw std::logic_error("no deck transformation onto " + face_to_string(face));
  return gs.front();
}

AffineAtlas build_atlas(const QuotientComplex& q) {
  AffineAtlas atlas;
  atlas.complex = q.base.periodic;
  atlas.group = q.group;
  for (auto i : q.singular_marks) atlas.excluded.push_back(q.orbit_faces[0][i][0]);
  for (std::size_t d = 0; d < 3; ++d)
    for (const auto& key : q.orbit_faces[d]) {
      if (is_excluded(atlas, key)) continue;
      atlas.index_[key] = atlas.charts.size();
      atlas.charts.push_back({key});
    }
  const ValidatedData& data = atlas.complex.data();
  for (std::size_t i = 0; i < atlas.charts.size(); ++i)
    for (const auto& cell : atlas.complex.star_cells(atlas.charts[i].rep))
      for (const auto& f : chart_faces(atlas, cell)) {
        const GammaElement g = atlas.placement(f);
        atlas.transitions[{i, atlas.chart_of(f), g}] = transform_of(data, g);
      }
  return atlas;
}

CocycleReport check_cocycle(const AffineAtlas& atlas) {
  CocycleReport rep;
  std::set<std::pair<TransitionKey, TransitionKey>> seen;
  auto lookup = [&](const TransitionKey& k) -> const AffineTransform* {
    const auto it = atlas.transitions.find(k);
    return it == atlas.transitions.end() ? nullptr : &it->second;
  };
  for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
    for (const auto& cell : atlas.complex.star_cells(atlas.charts[i].rep)) {
      std::vector<std::pair<std::size_t, GammaElement>> placed;
      for (const auto& f : chart_faces(atlas, cell)) placed.emplace_back(atlas.chart_of(f), atlas.placement(f));
      for (const auto& [j, g1] : placed)
        for (const auto& [k, g13] : placed) {
          const TransitionKey ij{i, j, g1};
          const TransitionKey jk{j, k, compose(inverse(g1), g13)};
          const TransitionKey ik{i, k, g13};
          if (!seen.insert({ij, ik}).second) continue;
          ++rep.triples;
          const AffineTransform* tij = lookup(ij);
          const AffineTransform* tjk = lookup(jk);
          const AffineTransform* tik = lookup(ik);
          if (!tij || !tjk || !tik) {
            rep.ok = false;
            rep.failures.push_back("missing transition on the overlap of charts " + std::to_string(i) +
                                   ", " + std::to_string(j) + ", " + std::to_string(k));
            continue;
          }
          if (!(compose(*tij, *tjk) == *tik)) {
            rep.ok = false;
            rep.failures.push_back("T_ik != T_ij o T_jk for charts " + std::to_string(i) + ", " +
                                   std::to_string(j) + ", " + std::to_string(k));
          }
        }
    }
  }
  return rep;
}

AffineTransform holonomy(const AffineAtlas& atlas, const ChartLoop& loop) {
  if (loop.empty()) throw NotALoop("empty chart sequence");
  if (loop.front().chart != loop.back().chart) throw NotALoop("chart sequence does not close up");
  AffineTransform total = identity_transform(2);
  for (std::size_t k = 1; k < loop.size(); ++k) {
    const auto it = atlas.transitions.find({loop[k - 1].chart, loop[k].chart, loop[k].gamma});
    if (it == atlas.transitions.end())
      throw NonOverlapping("charts " + std::to_string(loop[k - 1].chart) + " and " +
                           std::to_string(loop[k].chart) + " do not overlap via " + to_string(loop[k].gamma));
    total = compose(total, it->second);
  }
  return total;
}

ChartLoop generator_loop(const AffineAtlas& atlas, std::size_t i) {
  const ValidatedData& data = atlas.complex.data();
  IntVec e(2, 0);
  e.at(i) = 1;
  const RatVec d = to_rat(b_tilde(data, e));
  const geo::Polygon& start = atlas.complex.patch().front();
  const RatVec c = geo::centroid(start);
  for (long k = 1; k < 200; ++k) {
    const RatVec p = add(c, {Rat(k, 1009), Rat(k * k, 10007)});
    if (geo::locate_in_convex(start, p) != geo::Where::Inside) continue;
    try {
      return loop_through(atlas, walk(atlas.complex, p, d));
    } catch (const NonGeneric&) {
    }
  }
  throw std::logic_error("no generic segment found for the generator loop");
}

ChartLoop singular_loop(const AffineAtlas& atlas, const RatVec& c) {
  const ValidatedData& data = atlas.complex.data();
  GammaElement rho;
  bool found = false;
  for (const auto& g : elements_mapping(data, c, c))
    if (g.h == -1) {
      rho = g;
      found = true;
    }
  if (!found) throw std::invalid_argument(to_string(c) + " is not fixed by an involution");
  const auto star = atlas.complex.star_cells({c});
  if (star.empty()) throw std::invalid_argument(to_string(c) + " is not a vertex");
  geo::Polygon cur = star.front();
  const Face target = atlas.complex.act(rho, make_face(cur));
  std::vector<Face> carriers{make_face(cur)};
  Face prev_edge;
  for (std::size_t step = 0; step < kMaxWalk && carriers.back() != target; ++step) {
    Face edge;
    const std::size_t n = cur.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (cur[k] != c) continue;
      for (const auto& nb : {cur[(k + 1) % n], cur[(k + n - 1) % n]}) {
        const Face cand = make_face({c, nb});
        if (cand != prev_edge) {
          edge = cand;
          break;
        }
      }
    }
    const Face here = make_face(cur);
    for (auto& cell : atlas.complex.star_cells(edge))
      if (make_face(cell) != here) {
        cur = std::move(cell);
        break;
      }
    carriers.push_back(edge);
    carriers.push_back(make_face(cur));
    prev_edge = edge;
  }
  if (carriers.back() != target) throw std::logic_error("walk around " + to_string(c) + " did not close");
  return loop_through(atlas, carriers);
}

RatMat radiance_obstruction_torus(const AffineAtlas& torus) {
  if (torus.group != QuotientGroup::L) throw std::invalid_argument("torus atlas expected");
  RatMat m(2, RatVec(2));
  for (std::size_t j = 0; j < 2; ++j) {
    const AffineTransform h = holonomy(torus, generator_loop(torus, j));
    for (std::size_t i = 0; i < 2; ++i) m[i][j] = h.translation[i];
  }
  return m;
}

RatMat radiance_obstruction_sphere(const AffineAtlas& sphere, const AffineAtlas& torus) {
  if (sphere.group != QuotientGroup::Gamma || !sphere.complex.data().has_involution())
    throw std::invalid_argument("sphere atlas expected");
  return halve(radiance_obstruction_torus(torus));
}

bool NAReport::pass() const {
  return cocycle_torus.ok && cocycle_sphere.ok && torus_linear_identity && torus_radiance_is_b_tilde &&
         translation_lattice_is_b_tilde && sphere_linear_pm_identity && z_monodromy_order_two &&
         fixed_points_consistent && sphere_radiance_integral;
}

NAReport na_report(const RefinedDecomposition& refined) {
  NAReport rep;
  const ValidatedData& data = refined.data();
  const SimplicialComplex sc = dual_complex(refined);
  const AffineAtlas torus = build_atlas(quotient(sc, QuotientGroup::L));
  rep.cocycle_torus = check_cocycle(torus);
  if (!rep.cocycle_torus.ok) rep.failures.push_back("torus cocycle condition fails");

  const IntMat id = identity_int(2);
  for (const auto& [key, t] : torus.transitions)
    if (t.linear != id) rep.torus_linear_identity = false;
  for (std::size_t i = 0; i < 2; ++i) {
    rep.generator_holonomies.push_back(holonomy(torus, generator_loop(torus, i)));
    if (rep.generator_holonomies.back().linear != id) rep.torus_linear_identity = false;
  }
  if (!rep.torus_linear_identity) rep.failures.push_back("torus holonomy has nontrivial linear part");
  rep.radiance_torus = radiance_obstruction_torus(torus);

  std::vector<RatVec> b_cols;
  for (std::size_t i = 0; i < 2; ++i) {
    IntVec e(2, 0);
    e[i] = 1;
    b_cols.push_back(to_rat(b_tilde(data, e)));
    if (rep.radiance_torus[0][i] != b_cols[i][0] || rep.radiance_torus[1][i] != b_cols[i][1])
      rep.torus_radiance_is_b_tilde = false;
  }
  if (!rep.torus_radiance_is_b_tilde) rep.failures.push_back("torus radiance obstruction differs from b~");
  const IntMat b_hnf = lattice_hnf(columns_to_int(b_cols));
  std::vector<RatVec> trans;
  for (const auto& h : rep.generator_holonomies) trans.push_back(h.translation);
  rep.translation_lattice_is_b_tilde =
      std::all_of(trans.begin(), trans.end(), [](const RatVec& t) { return is_integral(t); }) &&
      determinant(columns_to_int(trans)) != 0 && lattice_hnf(columns_to_int(trans)) == b_hnf;
  if (!rep.translation_lattice_is_b_tilde) rep.failures.push_back("holonomy translations do not span b~(L)");

  if (!data.has_involution()) return rep;

  const QuotientComplex qs = quotient(sc, QuotientGroup::Gamma);
  const AffineAtlas sphere = build_atlas(qs);
  rep.cocycle_sphere = check_cocycle(sphere);
  if (!rep.cocycle_sphere.ok) rep.failures.push_back("sphere cocycle condition fails");
  IntMat minus = id;
  for (auto& row : minus)
    for (auto& x : row) x = -x;
  for (const auto& [key, t] : sphere.transitions)
    if (t.linear != id && t.linear != minus) rep.sphere_linear_pm_identity = false;
  if (!rep.sphere_linear_pm_identity) rep.failures.push_back("sphere transition outside {+-Id}");

  std::set<RatVec> classes;
  std::vector<RatVec> fixed;
  for (const auto& c : sphere.excluded) {
    ZMonodromy z{c, holonomy(sphere, singular_loop(sphere, c)), {}};
    z.fixed_point = scale(Rat(1, 2), z.holonomy.translation);
    const AffineTransform sq = compose(z.holonomy, z.holonomy);
    IntVec coeffs;
    const bool square_in_lattice =
        sq.linear == id && is_integral(sq.translation) &&
        solve_integral(columns_to_int(b_cols), sq.translation, coeffs);
    if (z.holonomy.linear != minus || !square_in_lattice) rep.z_monodromy_order_two = false;
    if (!is_fixed_point(data, z.fixed_point)) rep.fixed_points_consistent = false;
    classes.insert(sphere.complex.reduce(z.fixed_point));
    fixed.push_back(z.fixed_point);
    rep.monodromy_z.push_back(std::move(z));
  }
  if (!rep.z_monodromy_order_two) rep.failures.push_back("monodromy around Z is not of order two");
  if (classes.size() != 4 || fixed.size() != 4) rep.fixed_points_consistent = false;
  if (rep.fixed_points_consistent) {
    // Differences of the fixed points together with b~(L) span b~(L)/2.
    std::vector<RatVec> gens;
    for (std::size_t k = 1; k < fixed.size(); ++k) gens.push_back(scale(Rat(2), sub(fixed[k], fixed[0])));
    for (const auto& b : b_cols) gens.push_back(scale(Rat(2), b));
    if (lattice_hnf(columns_to_int(gens)) != b_hnf) rep.fixed_points_consistent = false;
  }
  if (!rep.fixed_points_consistent) rep.failures.push_back("fixed points of Z monodromy do not span b~(L)/2");
  try {
    rep.radiance_sphere = radiance_obstruction_sphere(sphere, torus);
  } catch (const IntegralityViolation& e) {
    rep.sphere_radiance_integral = false;
    rep.radiance_sphere = scale(Rat(1, 2), rep.radiance_torus);
    rep.failures.push_back(e.what());
  }
  return rep;
}

nlohmann::json to_json(const AffineTransform& t) {
  nlohmann::json lin = nlohmann::json::array();
  for (const auto& row : t.linear) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    lin.push_back(r);
  }
  nlohmann::json tr = nlohmann::json::array();
  for (const auto& x : t.translation) tr.push_back(to_string(x));
  return {{"linear", lin}, {"translation", tr}};
}

nlohmann::json to_json(const NAReport& r) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& h : r.generator_holonomies) gens.push_back(to_json(h));
  nlohmann::json z = nlohmann::json::array();
  for (const auto& m : r.monodromy_z)
    z.push_back({{"point", {to_string(m.point[0]), to_string(m.point[1])}},
                 {"holonomy", to_json(m.holonomy)},
                 {"fixed_point", {to_string(m.fixed_point[0]), to_string(m.fixed_point[1])}}});
  nlohmann::json j = {{"pass", r.pass()},
                      {"holonomy_generators", gens},
                      {"radiance_torus", mat_json(r.radiance_torus)},
                      {"radiance_sphere", r.radiance_sphere.empty() ? nlohmann::json(nullptr) : mat_json(r.radiance_sphere)},
                      {"monodromy_Z", z},
                      {"cocycle_torus", {{"ok", r.cocycle_torus.ok}, {"triples", r.cocycle_torus.triples}}},
                      {"cocycle_sphere", {{"ok", r.cocycle_sphere.ok}, {"triples", r.cocycle_sphere.triples}}}};
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

}  // namespace iams
