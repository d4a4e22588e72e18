#include "iams/retraction.hpp"

#include <algorithm>
#include <set>

#include "iams/sampling.hpp"

namespace iams {

namespace {

Rat sample_extent(const RefinedDecomposition& refined) {
  Rat extent = 0;
  for (const auto& v : refined.complex.base().reference) extent = std::max(extent, norm1(v));
  return 3 * extent + 1;
}

std::vector<GammaElement> placements(const PeriodicComplex& c, QuotientGroup group, const Face& from,
                                     const Face& to) {
  auto gs = c.elements_mapping_face(from, to);
  if (group == QuotientGroup::L)
    gs.erase(std::remove_if(gs.begin(), gs.end(), [](const GammaElement& g) { return g.h != 1; }), gs.end());
  return gs;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(const IntVec& m, const Int& k, const Rat& coeff) {
  LaurentPolynomial p;
  p.add_term(m, k, coeff);
  return p;
}

void LaurentPolynomial::add_term(const IntVec& m, const Int& k, const Rat& coeff) {
  if (coeff == 0) return;
  const auto key = std::make_pair(m, k);
  const Rat sum = terms_[key] + coeff;
  if (sum == 0) {
    terms_.erase(key);
  } else {
    terms_[key] = sum;
  }
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(add(ka.first, kb.first), Int(ka.second + kb.second), ca * cb);
  return out;
}

std::optional<Rat> val(const MonomialPoint& x, const LaurentPolynomial& f) {
  std::optional<Rat> best;
  for (const auto& [key, c] : f.terms()) {
    (void)c;
    const Rat v = Rat(key.second) + dot(to_rat(key.first), x.n);
    if (!best || v < *best) best = v;
  }
  return best;
}

Face reduction_cone(const RefinedDecomposition& refined, const MonomialPoint& x) {
  return refined.complex.carrier(x.n);
}

Retraction berkovich_retract(const RefinedDecomposition& refined, const MonomialPoint& x) {
  Retraction r;
  r.cone = reduction_cone(refined, x);
  IntMat rows;
  for (const auto& v : r.cone) {
    if (!is_integral(v)) throw NotSmoothCone("cone over " + face_to_string(r.cone) + " has a non-integral ray");
    rows.push_back({v[0].get_num(), v[1].get_num(), Int(1)});
  }
  const IntMat basis = extend_to_basis(rows);
  if (basis.empty()) throw NotSmoothCone("rays of the cone over " + face_to_string(r.cone) + " are not part of a basis");
  // Dual basis: the rows of (basis^{-1})^T.
  const RatMat dual = transpose(inverse(to_rat(basis)));
  r.point.assign(2, Rat(0));
  for (std::size_t j = 0; j < r.cone.size(); ++j) {
    const IntVec mk = to_int(dual[j]);
    const Rat alpha = *val(x, LaurentPolynomial::monomial({mk[0], mk[1]}, mk[2]));
    r.weights.push_back(alpha);
    r.point = add(r.point, scale(alpha, r.cone[j]));
  }
  return r;
}

SampleReport check_tropicalization(const RefinedDecomposition& refined, std::size_t samples,
                                   std::uint64_t seed) {
  SampleReport rep;
  rep.seed = seed;
  Sampler sampler(seed);
  const Rat extent = sample_extent(refined);
  for (std::size_t i = 0; i < samples; ++i) {
    const RatVec n = sampler.point(-extent, extent);
    ++rep.samples;
    const Retraction r = berkovich_retract(refined, {n});
    ++rep.checks;
    if (r.point != n) {
      rep.pass = false;
      rep.failures.push_back("retraction of " + to_string(n) + " is " + to_string(r.point));
      continue;
    }
    if (berkovich_retract(refined, {r.point}).point != r.point) {
      rep.pass = false;
      rep.failures.push_back("retraction is not idempotent at " + to_string(n));
    }
  }
  return rep;
}

SampleReport check_equivariance(const RefinedDecomposition& refined, std::size_t samples,
                                std::uint64_t seed, std::vector<GammaElement> gammas) {
  const ValidatedData& data = refined.data();
  if (gammas.empty()) gammas = generators(data);
  SampleReport rep;
  rep.seed = seed;
  Sampler sampler(seed);
  const Rat extent = sample_extent(refined);
  for (std::size_t i = 0; i < samples; ++i) {
    const RatVec n = sampler.point(-extent, extent);
    ++rep.samples;
    const RatVec base = berkovich_retract(refined, {n}).point;
    for (const auto& g : gammas) {
      ++rep.checks;
      const RatVec lhs = berkovich_retract(refined, {act_height1(data, g, n)}).point;
      const RatVec rhs = act_height1(data, g, base);
      if (lhs != rhs) {
        rep.pass = false;
        rep.failures.push_back("retract(" + to_string(g) + " . " + to_string(n) + ") = " + to_string(lhs) +
                               " but S_gamma(retract) = " + to_string(rhs));
      }
    }
  }
  return rep;
}

SampleReport check_quotient_compatibility(const RefinedDecomposition& refined, QuotientGroup group,
                                          std::size_t samples, std::uint64_t seed) {
  const ValidatedData& data = refined.data();
  const PeriodicComplex& pc = refined.complex;
  const QuotientComplex q = quotient(dual_complex(refined), group);
  const bool with_involution = group == QuotientGroup::Gamma && data.has_involution();

  // Orbit of the carrier plus the coordinates of the point in the orbit's key,
  // taken modulo the stabilizer of the key.
  auto through_quotient = [&](const RatVec& n) {
    const Retraction r = berkovich_retract(refined, {n});
    const std::size_t orbit = q.orbit_of(r.cone);
    const Face& rep = q.orbit_faces[r.cone.size() >= 3 ? 2 : r.cone.size() - 1][orbit];
    std::set<RatVec> local;
    for (const auto& g : placements(pc, group, rep, r.cone)) local.insert(act_height1(data, inverse(g), r.point));
    return std::make_pair(orbit, local);
  };

  SampleReport rep;
  rep.seed = seed;
  Sampler sampler(seed);
  const Rat extent = sample_extent(refined);
  for (std::size_t i = 0; i < samples; ++i) {
    const RatVec n = sampler.point(-extent, extent);
    ++rep.samples;
    const auto first = through_quotient(n);

    RatVec moved = pc.reduce(n);
    if (with_involution) {
      const RatVec flipped = pc.reduce(act_height1(data, {IntVec(2, 0), -1}, n));
      if (flipped < moved) moved = flipped;
    }
    const auto second = through_quotient(moved);
    ++rep.checks;
    if (first.second.empty() || first != second) {
      rep.pass = false;
      rep.failures.push_back("orbit images of " + to_string(n) + " and " + to_string(moved) + " disagree");
    }
  }
  return rep;
}

nlohmann::json to_json(const Retraction& r) {
  nlohmann::json cone = nlohmann::json::array();
  for (const auto& v : r.cone) cone.push_back({to_string(v[0]), to_string(v[1])});
  nlohmann::json w = nlohmann::json::array();
  for (const auto& a : r.weights) w.push_back(to_string(a));
  return {{"cone", cone}, {"weights", w}, {"point", {to_string(r.point[0]), to_string(r.point[1])}}};
}

nlohmann::json to_json(const SampleReport& r) {
  nlohmann::json j = {{"pass", r.pass}, {"samples", r.samples}, {"checks", r.checks},
                      {"seed", r.seed}};
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

}  // namespace iams
