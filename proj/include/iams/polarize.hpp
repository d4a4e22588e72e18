#pragma once

// kappa-twisted polarization functions on a periodic complex: values on
// Gamma-orbit representatives of vertices, extended by
//   phi(S_gamma x) = phi(x) - kappa chi(gamma, x)
// and linear interpolation on cells. Sign convention: the canonical function
// min_l chi(l, .) is accepted, so "bending" across a wall is
// (l_P1(w2) - phi(w2)) / lattice height of w2, with l_P1 the form of the
// cell on one side and w2 a vertex on the other side.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "iams/subdivision.hpp"

namespace iams {

class InconsistentStabilizer : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Infeasible : public std::runtime_error {
 public:
  Infeasible(std::string what, std::vector<std::string> iis)
      : std::runtime_error(std::move(what)), iis_(std::move(iis)) {}
  /// Labels of an irreducible infeasible subsystem.
  const std::vector<std::string>& iis() const { return iis_; }

 private:
  std::vector<std::string> iis_;
};

struct PolarizationFunction {
  PeriodicComplex complex;
  Rat kappa;
  std::vector<RatVec> reps;  ///< Gamma-orbit representatives of vertices
  std::vector<Rat> values;   ///< value at (rep, 1)
};

struct ConstructOptions {
  /// Walls (edges) forced to zero bending, e.g. to exhibit infeasibility.
  std::vector<Face> flat_walls;
};

PolarizationFunction construct(const RefinedDecomposition& refined,
                               const ConstructOptions& options = {});

/// kappa = 1 and the values of varphi_min: the canonical function on the
/// unrefined decomposition.
PolarizationFunction canonical_polarization(const ConeDecomposition& decomp);

/// Value at (w, 1) for a vertex w of the complex.
Rat vertex_value(const PolarizationFunction& pf, const RatVec& w);
/// Value at an arbitrary point of C.
Rat transport_value(const PolarizationFunction& pf, const NTildePoint& x);

struct WallBending {
  Face wall;
  Rat bending;
};
/// Bending across every Gamma-orbit of walls.
std::vector<WallBending> wall_bendings(const PolarizationFunction& pf);

struct PolarizationReport {
  bool pass = true;
  bool stabilizers = true;
  bool linear = true;
  bool integral = true;
  bool convex = true;
  bool twist = true;
  bool homogeneous = true;
  Rat min_bending;
  std::size_t twist_samples = 0;
  std::vector<std::string> failures;
};

PolarizationReport check(const PolarizationFunction& pf, std::size_t samples = 200,
                         std::uint64_t seed = 1);

nlohmann::json to_json(const PolarizationFunction& pf);
nlohmann::json to_json(const PolarizationReport& report);

}  // namespace iams
