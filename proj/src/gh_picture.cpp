#include "iams/gh_picture.hpp"

#include <algorithm>

namespace iams {

namespace {

Rat form(const IntMat& g, const RatVec& x, const RatVec& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s += x[i] * Rat(g[i][j]) * y[j];
  return s;
}

std::string mat_string(const IntMat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "; " : "") + to_string(m[i]);
  return s + "]";
}

nlohmann::json int_mat_json(const IntMat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    j.push_back(r);
  }
  return j;
}

}  // namespace

IntMat gram(const DegenerationData& data) {
  if (!is_square(data.b, 2) || !is_square(data.phi, 2))
    throw std::invalid_argument("Gram matrix needs 2 x 2 b and phi");
  IntMat g = multiply(data.b, data.phi);
  if (!is_symmetric(g)) throw NotSymmetric("b * phi = " + mat_string(g) + " is not symmetric");
  return g;
}

geo::Polygon voronoi_cell(const IntMat& g) {
  if (!is_symmetric(g) || !is_positive_definite(g)) throw std::invalid_argument("Gram matrix must be positive definite");
  // Bounding parallelogram from +-e_i, then a box of lattice vectors whose
  // size is certified against the circumradius.
  const RatMat ginv = inverse(to_rat(g));
  Rat reach = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    Rat row = 0;
    for (std::size_t j = 0; j < 2; ++j) row += abs_of(ginv[i][j]) * Rat(g[j][j]) / 2;
    reach = std::max(reach, row);
  }
  const Rat mu = Rat(determinant(g)) / Rat(g[0][0] + g[1][1]);  // lower bound on the smallest eigenvalue
  for (long k = 1;; k *= 2) {
    geo::Polygon cell = geo::box(-reach - 1, -reach - 1, reach + 1, reach + 1);
    for (long a = -k; a <= k; ++a)
      for (long b = -k; b <= k; ++b) {
        if (a == 0 && b == 0) continue;
        const RatVec l{Rat(a), Rat(b)};
        // keep 2 G(x, l) <= G(l, l)
        const RatVec gl = multiply(to_rat(g), l);
        cell = geo::clip(cell, scale(Rat(-2), gl), form(g, l, l));
      }
    Rat r2 = 0;
    for (const auto& v : cell) r2 = std::max(r2, form(g, v, v));
    if (Rat(k) * Rat(k) * mu >= 4 * r2) return cell;
  }
}

Rat torus_diameter_sq(const IntMat& g) {
  Rat r2 = 0;
  for (const auto& v : voronoi_cell(g)) r2 = std::max(r2, form(g, v, v));
  return r2;
}

GHStructure gh_structure(const DegenerationData& data) {
  if (!is_square(data.phi, 2)) throw std::invalid_argument("phi must be 2 x 2");
  const Int det = determinant(data.phi);
  if (abs_of(det) != 1) throw NotPrincipal("det phi = " + det.get_str() + " is not +-1");
  GHStructure gh;
  gh.gram = gram(data);
  if (!is_positive_definite(gh.gram)) throw std::invalid_argument("Gram matrix is not positive definite");
  gh.diameter_sq = torus_diameter_sq(gh.gram);
  gh.translation_lattice = gh.gram;
  gh.phi = data.phi;
  return gh;
}

ComparisonResult compare(const IntMat& na, const GHStructure& gh) {
  ComparisonResult res;
  const IntMat& t = gh.translation_lattice;
  if (determinant(na) == 0 || determinant(t) == 0) {
    res.witness = "degenerate lattice";
    return res;
  }
  const IntMat hn = hermite_normal_form(na).hnf;
  const IntMat hg = hermite_normal_form(t).hnf;
  const Rat s = Rat(hn[0][0]) / Rat(hg[0][0]);
  const Int p = s.get_num(), q = s.get_den();
  if (scale(q, hn) != scale(p, hg)) {
    res.witness = "HNF " + mat_string(hn) + " is not a rational multiple of HNF " + mat_string(hg);
    return res;
  }
  const RatMat pm = multiply(inverse(to_rat(na)), scale(s, to_rat(t)));
  IntMat pint(2, IntVec(2));
  for (std::size_t i = 0; i < 2; ++i) {
    if (!is_integral(pm[i])) {
      res.witness = "change of basis is not integral";
      return res;
    }
    pint[i] = to_int(pm[i]);
  }
  if (abs_of(determinant(pint)) != 1) {
    res.witness = "change of basis " + mat_string(pint) + " is not unimodular";
    return res;
  }
  res.matched = true;
  res.scale_sq = s * s;
  res.change_of_basis = pint;
  return res;
}

IntMat na_translation_lattice(const NAReport& report, const IntMat& phi) {
  const RatMat m = multiply(transpose(to_rat(phi)), report.radiance_torus);
  IntMat out(2, IntVec(2));
  for (std::size_t i = 0; i < 2; ++i) out[i] = to_int(m[i]);
  return out;
}

ComparisonResult kummer_compare(const NAReport& report, const GHStructure& gh) {
  ComparisonResult res = compare(na_translation_lattice(report, gh.phi), gh);
  std::vector<std::string> problems;
  if (!res.matched) problems.push_back(res.witness);
  if (!report.cocycle_torus.ok)
    problems.push_back("torus cocycle: " + (report.cocycle_torus.failures.empty() ? std::string("failed") : report.cocycle_torus.failures.front()));
  if (!report.cocycle_sphere.ok)
    problems.push_back("sphere cocycle: " + (report.cocycle_sphere.failures.empty() ? std::string("failed") : report.cocycle_sphere.failures.front()));
  if (!report.sphere_linear_pm_identity) problems.push_back("sphere linear part outside {+-Id}");
  if (report.monodromy_z.size() != 4 || !report.z_monodromy_order_two)
    problems.push_back("expected four singular points with order-two monodromy");
  if (report.radiance_sphere != scale(Rat(1, 2), report.radiance_torus) || !report.sphere_radiance_integral)
    problems.push_back("sphere radiance is not half the torus radiance");
  if (!report.fixed_points_consistent) problems.push_back("singular fixed points inconsistent with b~(L)/2");
  if (!problems.empty()) {
    res.matched = false;
    res.witness.clear();
    for (std::size_t i = 0; i < problems.size(); ++i) res.witness += (i ? "; " : "") + problems[i];
  }
  return res;
}

nlohmann::json to_json(const GHStructure& gh) {
  return {{"gram", int_mat_json(gh.gram)},
          {"diameter_sq", to_string(gh.diameter_sq)},
          {"translation_lattice", int_mat_json(gh.translation_lattice)}};
}

nlohmann::json to_json(const ComparisonResult& r) {
  nlohmann::json j = {{"matched", r.matched}};
  j["scale_sq"] = r.matched ? nlohmann::json(to_string(r.scale_sq)) : nlohmann::json(nullptr);
  j["P"] = r.matched ? int_mat_json(r.change_of_basis) : nlohmann::json(nullptr);
  j["witness"] = r.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.witness);
  return j;
}

}  // namespace iams
