#pragma once

// Base change to integral vertices, equivariant unimodular triangulation of
// the reference cell, and the combinatorial conditions on the result.

#include <stdexcept>
#include <string>

#include "iams/periodic_complex.hpp"

namespace iams {

class NoIntegralizer : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RefinementDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegralizeResult {
  Int nu;
  ConeDecomposition decomp;
};

/// Smallest nu such that the base change by nu has integral cell vertices,
/// integral F~ points and an integral center -n0.
IntegralizeResult integralize(const ConeDecomposition& decomp, const Int& cap = 64);

struct RefinedDecomposition {
  PeriodicComplex complex;  ///< unimodular triangles tiling sigma_0
  Int nu = 1;               ///< accumulated base change relative to the input data
  std::vector<Face> triangles;  ///< Gamma-orbit representatives (gamma keys)
  std::vector<RatVec> sing_rays;  ///< F~ class representatives
  const ValidatedData& data() const { return complex.data(); }
};

struct RefineOptions {
  int rounds = 4;
  /// Base changes by 2 applied even when the conditions already hold.
  int forced_doublings = 0;
};

/// Triangulates sigma_0 of an integralized decomposition using every lattice
/// point, symmetric under the involution when H = {+-1}.
PeriodicComplex triangulate_reference(const ConeDecomposition& decomp);

/// Refines an integralized decomposition; `nu` is the base change already
/// applied. Doubles nu and retriangulates while (d), (e) or (g) fail.
RefinedDecomposition refine(const ConeDecomposition& decomp, const Int& nu,
                            const RefineOptions& options = {});
/// Returns the input unchanged when it already satisfies every condition.
RefinedDecomposition refine(const RefinedDecomposition& refined, const RefineOptions& options = {});

struct ConditionCheck {
  bool ok = true;
  std::string witness;
};

struct ConditionReport {
  ConditionCheck semistable;
  ConditionCheck smooth;
  ConditionCheck contains_sigma_T;
  ConditionCheck cond_d;
  ConditionCheck cond_e;
  ConditionCheck cond_f;
  ConditionCheck cond_g;
  bool all() const {
    return semistable.ok && smooth.ok && contains_sigma_T.ok && cond_d.ok && cond_e.ok &&
           cond_f.ok && cond_g.ok;
  }
};

ConditionReport verify_conditions(const PeriodicComplex& complex);
inline ConditionReport verify_conditions(const RefinedDecomposition& refined) {
  return verify_conditions(refined.complex);
}

/// Assembles a RefinedDecomposition record around an arbitrary complex.
RefinedDecomposition make_refined(PeriodicComplex complex, const Int& nu);

nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const RefinedDecomposition& refined);

}  // namespace iams
