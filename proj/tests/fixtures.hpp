#pragma once

#include <map>
#include <string>

#include "iams/pipeline.hpp"
#include "iams/sampling.hpp"

namespace fixtures {

using namespace iams;

inline DegenerationData raw(IntMat b, HAction h = HAction::PlusMinusOne, IntVec lambda = {0, 0},
                            IntMat phi = {{1, 0}, {0, 1}}) {
  DegenerationData d;
  d.rank = 2;
  d.phi = std::move(phi);
  d.b = std::move(b);
  d.lambda = std::move(lambda);
  d.h_action = h;
  return d;
}

inline DegenerationData two_i(HAction h = HAction::PlusMinusOne) { return raw({{2, 0}, {0, 2}}, h); }
inline DegenerationData skew() { return raw({{4, 2}, {2, 6}}); }
inline DegenerationData hexagonal() { return raw({{4, 2}, {2, 4}}); }

inline RefinedDecomposition refined_of(const DegenerationData& d, RefineOptions opts = {}) {
  const IntegralizeResult ig = integralize(build_decomposition(validate(d)));
  return refine(ig.decomp, ig.nu, opts);
}

// Refinement is the slow step; the module tests share one per input.
inline const RefinedDecomposition& cached(const std::string& name) {
  static std::map<std::string, RefinedDecomposition> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  DegenerationData d;
  if (name == "2I") d = two_i();
  else if (name == "2I-trivial") d = two_i(HAction::Trivial);
  else if (name == "skew") d = skew();
  else if (name == "hex") d = hexagonal();
  else throw std::invalid_argument(name);
  return cache.emplace(name, refined_of(d)).first->second;
}

inline RatMat rat(const IntMat& m) { return to_rat(m); }

}  // namespace fixtures
