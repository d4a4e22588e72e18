#include "iams/cone_decomp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace iams {

namespace {

void sort_unique(MinimizerSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

Int round_half_up(const Rat& v) { return floor_of(v + Rat(1, 2)); }

}  // namespace

VarphiResult varphi_min(const ValidatedData& data, const NTildePoint& x) {
  if (x.s == 0) throw OriginQuery();
  const auto r = static_cast<std::size_t>(data.rank());
  const RatVec phi_t_n = multiply(transpose(to_rat(data.raw().phi)), x.n);
  const RatVec c = add(scale(x.s, to_rat(data.raw().lambda)), phi_t_n);
  const RatVec center = scale(-1 / x.s, multiply(data.gram_inverse(), c));
  auto f = [&](const IntVec& l) -> Rat { return x.s * Rat(a_value(data, l)) + dot(to_rat(l), phi_t_n); };
  IntVec rounded(r);
  for (std::size_t i = 0; i < r; ++i) rounded[i] = round_half_up(center[i]);
  // f(l) - f(l*) = (s/2)(l - l*)^T B (l - l*) >= (s/2) mu |l - l*|^2.
  const Rat f_center = Rat(-1, 2) / x.s * dot(c, multiply(data.gram_inverse(), c));
  const Rat slack = f(rounded) - f_center;
  const Rat bound = 2 * slack / (x.s * data.eigen_lower_bound());
  const Int radius = isqrt_floor(ceil_of(bound)) + 1;

  VarphiResult best;
  bool have = false;
  IntVec l(r);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == r) {
      const Rat v = f(l);
      if (!have || v < best.value) {
        best.value = v;
        best.minimizers.assign(1, l);
        have = true;
      } else if (v == best.value) {
        best.minimizers.push_back(l);
      }
      return;
    }
    const Int lo = ceil_of(center[i] - Rat(radius));
    const Int hi = floor_of(center[i] + Rat(radius));
    for (Int v = lo; v <= hi; ++v) {
      l[i] = v;
      walk(i + 1);
    }
  };
  walk(0);
  sort_unique(best.minimizers);
  return best;
}

VarphiResult varphi_min(const ValidatedData& data, const RatVec& n) {
  return varphi_min(data, NTildePoint{n, Rat(1)});
}

MinimizerSet transport(const MinimizerSet& alpha, const GammaElement& g) {
  MinimizerSet out;
  out.reserve(alpha.size());
  for (const auto& a : alpha) out.push_back(sub(scale(Int(g.h), a), g.l));
  sort_unique(out);
  return out;
}

MinimizerSet canonical_minimizer_set(const ValidatedData& data, const MinimizerSet& alpha) {
  MinimizerSet best;
  for (int h : {1, -1}) {
    if (h == -1 && !data.has_involution()) continue;
    for (const auto& a : alpha) {
      // h(alpha) - h(a) contains 0.
      MinimizerSet cand = transport(alpha, GammaElement{scale(Int(h), a), h});
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

namespace {

geo::Polygon reference_polygon(const ValidatedData& data,
                               std::vector<MinimizerSet>& vertex_minimizers) {
  if (data.rank() != 2) throw std::invalid_argument("cell geometry needs rank 2");
  const RatMat phi_t = transpose(to_rat(data.raw().phi));
  // <phi(e_i), n> in [-a(e_i), a(-e_i)] bounds a parallelogram.
  std::vector<RatVec> corners;
  for (int s0 : {0, 1})
    for (int s1 : {0, 1}) {
      RatVec target(2);
      for (std::size_t i = 0; i < 2; ++i) {
        IntVec e{0, 0};
        e[i] = 1;
        const bool upper = (i == 0 ? s0 : s1) != 0;
        target[i] = upper ? Rat(a_value(data, negate(e))) : Rat(-a_value(data, e));
      }
      corners.push_back(solve(phi_t, target));
    }
  const geo::Polygon start = geo::convex_hull(corners);
  for (long k = 2;; k *= 2) {
    geo::Polygon poly = start;
    for (long i = -k; i <= k; ++i)
      for (long j = -k; j <= k; ++j) {
        if (i == 0 && j == 0) continue;
        const IntVec l{i, j};
        poly = geo::clip(poly, to_rat(multiply(data.raw().phi, l)), Rat(a_value(data, l)));
      }
    vertex_minimizers.clear();
    bool certified = true;
    for (const auto& v : poly) {
      VarphiResult res = varphi_min(data, v);
      if (res.value != 0) {
        certified = false;
        break;
      }
      vertex_minimizers.push_back(std::move(res.minimizers));
    }
    if (certified) return poly;
  }
}

geo::Polygon reference_face(const ConeDecomposition& decomp, const MinimizerSet& beta) {
  geo::Polygon face;
  for (std::size_t i = 0; i < decomp.reference.size(); ++i) {
    const auto& mins = decomp.reference_vertex_minimizers[i];
    if (std::includes(mins.begin(), mins.end(), beta.begin(), beta.end()))
      face.push_back(decomp.reference[i]);
  }
  return face;
}

int affine_dimension(const geo::Polygon& pts) {
  if (pts.size() <= 1) return 0;
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (geo::cross(pts[0], pts[1], pts[i]) != 0) return 2;
  return 1;
}

}  // namespace

Cell cell_from_minimizers(const ConeDecomposition& decomp, const MinimizerSet& alpha) {
  if (alpha.empty()) throw std::invalid_argument("empty minimizer set");
  const IntVec& a = alpha.front();
  const MinimizerSet beta = transport(alpha, GammaElement{a, 1});
  geo::Polygon face = reference_face(decomp, beta);
  if (face.empty()) throw std::invalid_argument("minimizer set does not index a cell");
  const RatVec shift = to_rat(b_tilde(decomp.data, a));
  for (auto& v : face) v = sub(v, shift);
  Cell cell;
  cell.minimizer_set = alpha;
  cell.vertices = std::move(face);
  cell.dim = affine_dimension(cell.vertices) + 1;
  return cell;
}

Cell cell_of(const ConeDecomposition& decomp, const NTildePoint& x) {
  const VarphiResult res = varphi_min(decomp.data, x);
  return cell_from_minimizers(decomp, res.minimizers);
}

Cell cell_of(const ValidatedData& data, const NTildePoint& x) {
  if (x.s == 0) throw OriginQuery();
  return cell_of(build_decomposition(data), x);
}

int orbit_of(const ConeDecomposition& decomp, const MinimizerSet& alpha) {
  const MinimizerSet key = canonical_minimizer_set(decomp.data, alpha);
  for (std::size_t i = 0; i < decomp.fundamental_cells.size(); ++i)
    if (decomp.fundamental_cells[i].minimizer_set == key) return static_cast<int>(i);
  return -1;
}

ConeDecomposition build_decomposition(const ValidatedData& data) {
  ConeDecomposition d;
  d.data = data;
  d.reference = reference_polygon(data, d.reference_vertex_minimizers);

  std::set<MinimizerSet> keys;
  keys.insert(canonical_minimizer_set(data, {IntVec{0, 0}}));
  const std::size_t n = d.reference.size();
  for (std::size_t i = 0; i < n; ++i) {
    keys.insert(canonical_minimizer_set(data, d.reference_vertex_minimizers[i]));
    const RatVec mid = scale(Rat(1, 2), add(d.reference[i], d.reference[(i + 1) % n]));
    keys.insert(canonical_minimizer_set(data, varphi_min(data, mid).minimizers));
  }
  // Order: 2-cells, then edges, then vertices; lexicographic within a dimension.
  std::vector<Cell> cells;
  for (const auto& k : keys) cells.push_back(cell_from_minimizers(d, k));
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& a, const Cell& b) { return a.dim > b.dim; });
  d.fundamental_cells = std::move(cells);
  d.includes_sigma_T = varphi_min(data, RatVec{0, 0}).minimizers.size() >= 3;
  return d;
}

AdmissibilityReport check_gamma_admissible(const ConeDecomposition& decomp) {
  AdmissibilityReport rep;
  std::set<MinimizerSet> seen;
  for (std::size_t idx = 0; idx < decomp.fundamental_cells.size(); ++idx) {
    const Cell& cell = decomp.fundamental_cells[idx];
    seen.insert(canonical_minimizer_set(decomp.data, cell.minimizer_set));
    for (const auto& g : generators(decomp.data)) {
      geo::Polygon moved;
      for (const auto& v : cell.vertices) moved.push_back(act_height1(decomp.data, g, v));
      const MinimizerSet expected = transport(cell.minimizer_set, g);
      const VarphiResult at = varphi_min(decomp.data, geo::centroid(moved));
      if (at.minimizers != expected) {
        rep.failures.push_back({g, idx, "minimizer set at the image is not h(alpha) - l"});
        continue;
      }
      Cell target;
      try {
        target = cell_from_minimizers(decomp, expected);
      } catch (const std::invalid_argument&) {
        rep.failures.push_back({g, idx, "h(alpha) - l indexes no cell"});
        continue;
      }
      if (!geo::same_vertex_set(moved, target.vertices))
        rep.failures.push_back({g, idx, "S_gamma(cell) differs from sigma_{h(alpha)-l}"});
    }
  }
  rep.orbit_count = seen.size();
  if (seen.size() != decomp.fundamental_cells.size())
    rep.failures.push_back({identity_element(decomp.data.rank()), 0,
                            "representatives are not pairwise inequivalent"});
  rep.pass = rep.failures.empty();
  return rep;
}

bool in_fundamental_domain(const ValidatedData& data, const RatVec& n) {
  const RatVec c = multiply(data.b_tilde_inverse(), add(n, data.center_shift()));
  for (const auto& x : c)
    if (x < 0 || x >= 1) return false;
  return true;
}

std::vector<Cell> cells_in_window(const ConeDecomposition& decomp, const Rat& xlo, const Rat& ylo,
                                  const Rat& xhi, const Rat& yhi) {
  const geo::Polygon window = geo::box(xlo, ylo, xhi, yhi);
  // a with (sigma_0 - b~(a)) meeting the window: a = b~^-1 (p - w).
  Rat lo[2], hi[2];
  bool first = true;
  for (const auto& p : decomp.reference)
    for (const auto& w : window) {
      const RatVec a = multiply(decomp.data.b_tilde_inverse(), sub(p, w));
      for (int i = 0; i < 2; ++i) {
        if (first || a[i] < lo[i]) lo[i] = a[i];
        if (first || a[i] > hi[i]) hi[i] = a[i];
      }
      first = false;
    }
  auto meets = [&](const geo::Polygon& face) {
    geo::Polygon clipped = face;
    if (clipped.size() < 3) {
      for (const auto& v : face)
        if (geo::contains(window, v)) return true;
      if (clipped.size() == 2) {
        for (std::size_t i = 0; i < 4; ++i) {
          Rat t;
          if (geo::segment_crossing(face[0], face[1], window[i], window[(i + 1) % 4], t)) return true;
        }
      }
      return false;
    }
    clipped = geo::clip(clipped, {1, 0}, -xlo);
    clipped = geo::clip(clipped, {-1, 0}, xhi);
    clipped = geo::clip(clipped, {0, 1}, -ylo);
    clipped = geo::clip(clipped, {0, -1}, yhi);
    if (!clipped.empty()) return true;
    return false;
  };

  std::set<MinimizerSet> faces_at_zero;
  faces_at_zero.insert({IntVec{0, 0}});
  const std::size_t n = decomp.reference.size();
  for (std::size_t i = 0; i < n; ++i) {
    faces_at_zero.insert(decomp.reference_vertex_minimizers[i]);
    const RatVec mid = scale(Rat(1, 2), add(decomp.reference[i], decomp.reference[(i + 1) % n]));
    faces_at_zero.insert(varphi_min(decomp.data, mid).minimizers);
  }

  std::set<MinimizerSet> seen;
  std::vector<Cell> out;
  for (Int i = ceil_of(lo[0]); i <= floor_of(hi[0]); ++i)
    for (Int j = ceil_of(lo[1]); j <= floor_of(hi[1]); ++j) {
      const IntVec a{i, j};
      for (const auto& beta : faces_at_zero) {
        const MinimizerSet alpha = transport(beta, GammaElement{negate(a), 1});
        if (seen.count(alpha)) continue;
        Cell c = cell_from_minimizers(decomp, alpha);
        if (!meets(c.vertices)) continue;
        seen.insert(alpha);
        out.push_back(std::move(c));
      }
    }
  std::sort(out.begin(), out.end(), [](const Cell& x, const Cell& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.minimizer_set < y.minimizer_set;
  });
  return out;
}

nlohmann::json to_json(const Cell& cell) {
  nlohmann::json mins = nlohmann::json::array();
  for (const auto& m : cell.minimizer_set) mins.push_back(to_string(m));
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : cell.vertices) verts.push_back({to_string(v[0]), to_string(v[1])});
  return {{"minimizers", mins}, {"vertices", verts}, {"dim", cell.dim}};
}

nlohmann::json to_json(const ConeDecomposition& decomp) {
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t i = 0; i < decomp.fundamental_cells.size(); ++i) {
    nlohmann::json c = to_json(decomp.fundamental_cells[i]);
    c["orbit_id"] = i;
    cells.push_back(c);
  }
  return {{"data", to_json(decomp.data.raw())},
          {"cells", cells},
          {"includes_sigma_T", decomp.includes_sigma_T}};
}

}  // namespace iams
