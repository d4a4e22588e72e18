#include "iams/polarize.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "iams/lp.hpp"
#include "iams/sampling.hpp"

namespace iams {

namespace {

std::vector<RatVec> vertex_reps(const PeriodicComplex& c) {
  std::set<RatVec> reps;
  for (const auto& v : c.patch_vertices()) reps.insert(c.gamma_key({v}).front());
  return {reps.begin(), reps.end()};
}

std::size_t rep_index(const PolarizationFunction& pf, const RatVec& w, RatVec& rep) {
  rep = pf.complex.gamma_key({w}).front();
  const auto it = std::lower_bound(pf.reps.begin(), pf.reps.end(), rep);
  if (it == pf.reps.end() || *it != rep)
    throw std::invalid_argument("point " + to_string(w) + " is not a vertex of the complex");
  return static_cast<std::size_t>(it - pf.reps.begin());
}

/// Three vertices of a polygon in general position.
std::array<std::size_t, 3> frame(const geo::Polygon& poly) {
  for (std::size_t k = 2; k < poly.size(); ++k)
    if (geo::cross(poly[0], poly[1], poly[k]) != 0) return {0, 1, k};
  throw std::logic_error("degenerate cell");
}

/// Affine expression in (u_0, ..., u_{r-1}, kappa).
using Expr = RatVec;

Expr value_expr(const PeriodicComplex& c, const std::vector<RatVec>& reps, const RatVec& w) {
  const RatVec rep = c.gamma_key({w}).front();
  const auto it = std::lower_bound(reps.begin(), reps.end(), rep);
  Expr e(reps.size() + 1);
  e[static_cast<std::size_t>(it - reps.begin())] = 1;
  const auto gs = elements_mapping(c.data(), rep, w);
  e.back() = -chi(c.data(), gs.front(), NTildePoint{rep, Rat(1)});
  return e;
}

Rat lattice_height(const RatVec& v1, const RatVec& v2, const RatVec& w) {
  RatVec m{v1[1] - v2[1], v2[0] - v1[0], v1[0] * v2[1] - v1[1] * v2[0]};
  const Int den = denominator_lcm(m);
  m = scale(Rat(den), m);
  Int g = 0;
  for (const auto& x : m) g = gcd_of(g, x.get_num());
  m = scale(Rat(1) / Rat(g), m);
  return abs_of(m[0] * w[0] + m[1] * w[1] + m[2]);
}

struct WallExpr {
  Expr numerator;  ///< l_P1(w2) - phi(w2)
  Rat height;
};

WallExpr wall_expr(const PeriodicComplex& c, const std::vector<RatVec>& reps, const Face& wall) {
  const auto cells = c.star_cells(wall);
  if (cells.size() != 2) throw std::logic_error("wall " + face_to_string(wall) + " is not interior");
  auto off_line = [&](const geo::Polygon& p) {
    for (const auto& v : p)
      if (geo::cross(wall[0], wall[1], v) != 0) return v;
    throw std::logic_error("cell degenerate along its wall");
  };
  const RatVec w1 = off_line(cells[0]);
  const RatVec w2 = off_line(cells[1]);
  const RatVec beta = geo::barycentric(wall[0], wall[1], w1, w2);
  Expr num = scale(beta[0], value_expr(c, reps, wall[0]));
  num = add(num, scale(beta[1], value_expr(c, reps, wall[1])));
  num = add(num, scale(beta[2], value_expr(c, reps, w1)));
  num = sub(num, value_expr(c, reps, w2));
  return {num, lattice_height(wall[0], wall[1], w2)};
}

Rat evaluate(const PolarizationFunction& pf, const Expr& e) {
  Rat total = e.back() * pf.kappa;
  for (std::size_t i = 0; i < pf.values.size(); ++i) total += e[i] * pf.values[i];
  return total;
}

std::vector<Face> wall_reps(const PeriodicComplex& c) {
  std::set<Face> walls;
  for (const auto& e : c.patch_edges()) walls.insert(c.gamma_key(e));
  return {walls.begin(), walls.end()};
}

void check_stabilizers(const PeriodicComplex& c, const std::vector<RatVec>& reps) {
  for (const auto& r : reps)
    for (const auto& g : elements_mapping(c.data(), r, r))
      if (chi(c.data(), g, NTildePoint{r, Rat(1)}) != 0)
        throw InconsistentStabilizer("chi(" + to_string(g) + ", (" + to_string(r) +
                                     ",1)) != 0 for a stabilizing element");
}

}  // namespace

PolarizationFunction construct(const RefinedDecomposition& refined,
                               const ConstructOptions& options) {
  const PeriodicComplex& c = refined.complex;
  const std::vector<RatVec> reps = vertex_reps(c);
  check_stabilizers(c, reps);
  const std::size_t nv = reps.size() + 1;

  lp::Problem prob;
  prob.num_vars = nv;
  prob.free_var.assign(nv, true);
  prob.free_var.back() = false;
  prob.objective.assign(nv, Rat(0));
  prob.objective.back() = 1;

  RatVec anchor(nv);
  anchor[0] = 1;
  prob.constraints.push_back({anchor, lp::Sense::Equal, 0, "anchor value at " + to_string(reps[0]) + " = 0"});
  RatVec kap(nv);
  kap.back() = 1;
  prob.constraints.push_back({kap, lp::Sense::GreaterEqual, 1, "kappa >= 1"});
  for (const auto& wall : wall_reps(c)) {
    const WallExpr we = wall_expr(c, reps, wall);
    prob.constraints.push_back({scale(1 / we.height, we.numerator), lp::Sense::GreaterEqual, 1,
                                "bending >= 1 at wall " + face_to_string(wall)});
  }
  for (const auto& wall : options.flat_walls) {
    const WallExpr we = wall_expr(c, reps, make_face(wall));
    prob.constraints.push_back({we.numerator, lp::Sense::Equal, 0,
                                "forced flat wall " + face_to_string(make_face(wall))});
  }

  const lp::Result res = lp::solve(prob);
  if (res.status != lp::Status::Optimal) {
    std::vector<std::string> labels;
    for (auto i : lp::irreducible_infeasible_subsystem(prob)) labels.push_back(prob.constraints[i].label);
    throw Infeasible("no twisted polarization function exists for this decomposition",
                     std::move(labels));
  }
  Int den = denominator_lcm(res.x);
  PolarizationFunction pf;
  pf.complex = c;
  pf.reps = reps;
  for (std::size_t i = 0; i < reps.size(); ++i) pf.values.push_back(res.x[i] * den);
  pf.kappa = res.x.back() * den;
  return pf;
}

PolarizationFunction canonical_polarization(const ConeDecomposition& decomp) {
  PolarizationFunction pf;
  pf.complex = canonical_complex(decomp);
  pf.reps = vertex_reps(pf.complex);
  pf.kappa = 1;
  for (const auto& r : pf.reps) pf.values.push_back(varphi_min(decomp.data, r).value);
  return pf;
}

Rat vertex_value(const PolarizationFunction& pf, const RatVec& w) {
  RatVec rep;
  const std::size_t idx = rep_index(pf, w, rep);
  const auto gs = elements_mapping(pf.complex.data(), rep, w);
  Rat out;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const Rat v = pf.values[idx] - pf.kappa * chi(pf.complex.data(), gs[k], NTildePoint{rep, Rat(1)});
    if (k == 0) {
      out = v;
    } else if (v != out) {
      throw InconsistentStabilizer("two transports of the value at " + to_string(w) + " disagree");
    }
  }
  return out;
}

Rat transport_value(const PolarizationFunction& pf, const NTildePoint& x) {
  if (x.s == 0) {
    if (!std::all_of(x.n.begin(), x.n.end(), [](const Rat& v) { return v == 0; }))
      throw std::invalid_argument("point outside C");
    return 0;
  }
  const RatVec p = scale(1 / x.s, x.n);
  const auto cells = pf.complex.cells_containing(p);
  const geo::Polygon& poly = cells.front();
  const auto f = frame(poly);
  const RatVec beta = geo::barycentric(poly[f[0]], poly[f[1]], poly[f[2]], p);
  Rat v = 0;
  for (int k = 0; k < 3; ++k) v += beta[k] * vertex_value(pf, poly[f[k]]);
  return x.s * v;
}

std::vector<WallBending> wall_bendings(const PolarizationFunction& pf) {
  std::vector<WallBending> out;
  for (const auto& wall : wall_reps(pf.complex)) {
    const WallExpr we = wall_expr(pf.complex, pf.reps, wall);
    out.push_back({wall, evaluate(pf, we.numerator) / we.height});
  }
  return out;
}

PolarizationReport check(const PolarizationFunction& pf, std::size_t samples, std::uint64_t seed) {
  PolarizationReport rep;
  const PeriodicComplex& c = pf.complex;
  const ValidatedData& data = c.data();

  try {
    check_stabilizers(c, pf.reps);
    for (const auto& v : c.patch_vertices()) vertex_value(pf, v);
  } catch (const InconsistentStabilizer& e) {
    rep.stabilizers = false;
    rep.failures.push_back(e.what());
  }

  for (const auto& poly : c.patch()) {
    const auto f = frame(poly);
    Rat vals[3];
    for (int k = 0; k < 3; ++k) vals[k] = vertex_value(pf, poly[f[k]]);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const RatVec beta = geo::barycentric(poly[f[0]], poly[f[1]], poly[f[2]], poly[i]);
      if (beta[0] * vals[0] + beta[1] * vals[1] + beta[2] * vals[2] != vertex_value(pf, poly[i])) {
        rep.linear = false;
        rep.failures.push_back("values on cell " + face_to_string(make_face(poly)) + " are not affine");
        break;
      }
    }
    // The linear form (m, k) on the cone over the cell must lie in M~.
    RatMat a;
    RatVec rhs;
    for (int k = 0; k < 3; ++k) {
      a.push_back({poly[f[k]][0], poly[f[k]][1], Rat(1)});
      rhs.push_back(vals[k]);
    }
    const RatVec form = solve(a, rhs);
    if (!is_integral(form)) {
      rep.integral = false;
      rep.failures.push_back("linear form " + to_string(form) + " on cell " +
                             face_to_string(make_face(poly)) + " is not integral");
    }
  }

  bool first = true;
  for (const auto& wb : wall_bendings(pf)) {
    if (first || wb.bending < rep.min_bending) rep.min_bending = wb.bending;
    first = false;
    if (wb.bending < 1) {
      rep.convex = false;
      rep.failures.push_back("bending " + to_string(wb.bending) + " < 1 at wall " + face_to_string(wb.wall));
    }
  }

  Sampler sampler(seed);
  const auto gens = generators(data);
  Rat extent = 0;
  for (const auto& v : c.base().reference) extent = std::max(extent, norm1(v));
  extent = 3 * extent + 1;
  for (std::size_t i = 0; i < samples; ++i) {
    const NTildePoint x{sampler.point(-extent, extent), sampler.rational(Rat(1, 4), Rat(3))};
    const GammaElement g = (i % 2 == 0) ? gens[i / 2 % gens.size()] : sampler.gamma(data);
    const Rat lhs = transport_value(pf, act(data, g, x));
    const Rat rhs = transport_value(pf, x) - pf.kappa * chi(data, g, x);
    ++rep.twist_samples;
    if (lhs != rhs) {
      rep.twist = false;
      rep.failures.push_back("twist identity fails for " + to_string(g) + " at (" + to_string(x.n) +
                             ", " + to_string(x.s) + ")");
      break;
    }
    const Rat r = sampler.rational(Rat(1, 8), Rat(5));
    if (transport_value(pf, NTildePoint{scale(r, x.n), r * x.s}) != r * transport_value(pf, x)) {
      rep.homogeneous = false;
      rep.failures.push_back("homogeneity fails at (" + to_string(x.n) + ", " + to_string(x.s) + ")");
      break;
    }
  }
  rep.pass = rep.stabilizers && rep.linear && rep.integral && rep.convex && rep.twist && rep.homogeneous;
  return rep;
}

nlohmann::json to_json(const PolarizationFunction& pf) {
  nlohmann::json vals = nlohmann::json::array();
  for (std::size_t i = 0; i < pf.reps.size(); ++i)
    vals.push_back({{"vertex", {to_string(pf.reps[i][0]), to_string(pf.reps[i][1])}},
                    {"value", to_string(pf.values[i])}});
  return {{"kappa", to_string(pf.kappa)}, {"values", vals}};
}

nlohmann::json to_json(const PolarizationReport& r) {
  nlohmann::json j = {{"pass", r.pass},           {"stabilizers", r.stabilizers},
                      {"linear", r.linear},       {"integral", r.integral},
                      {"convex", r.convex},       {"twist", r.twist},
                      {"homogeneous", r.homogeneous}, {"min_bending", to_string(r.min_bending)},
                      {"twist_samples", r.twist_samples}};
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

}  // namespace iams
