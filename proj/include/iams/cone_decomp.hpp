#pragma once

// The canonical decomposition of the cone C = (N_R x R_>0) u {0} cut out by
// the function varphi(x) = min_l chi((l,1), x). Cells live at height 1.

#include <stdexcept>
#include <string>
#include <vector>

#include "iams/geometry2d.hpp"
#include "iams/lattice_core.hpp"

namespace iams {

class OriginQuery : public std::domain_error {
 public:
  OriginQuery() : std::domain_error("query at the apex (0,0) of C") {}
};

using MinimizerSet = std::vector<IntVec>;  // sorted, duplicate-free

struct VarphiResult {
  Rat value;
  MinimizerSet minimizers;
};

/// Exact minimum of chi((l,1), x) over l in L with the complete argmin.
/// The search box comes from the eigenvalue bound on B, so it is certified.
VarphiResult varphi_min(const ValidatedData& data, const NTildePoint& x);
VarphiResult varphi_min(const ValidatedData& data, const RatVec& n);

/// h(alpha) - l, sorted.
MinimizerSet transport(const MinimizerSet& alpha, const GammaElement& g);
/// Lexicographically smallest member of the Gamma-orbit of alpha among the
/// sets containing 0; used as the orbit name.
MinimizerSet canonical_minimizer_set(const ValidatedData& data, const MinimizerSet& alpha);

struct Cell {
  MinimizerSet minimizer_set;
  geo::Polygon vertices;  ///< height-1 slice, CCW for 2-cells
  int dim = 0;            ///< dimension of the cone
};

struct ConeDecomposition {
  ValidatedData data;
  /// sigma_{0} at height 1: {n : a(l) + <phi(l), n> >= 0 for all l}.
  geo::Polygon reference;
  std::vector<MinimizerSet> reference_vertex_minimizers;
  /// One cell per Gamma-orbit (plus no entry for sigma_T), named by
  /// canonical_minimizer_set; orbit id = index.
  std::vector<Cell> fundamental_cells;
  /// Whether sigma_T = {0} x R_>=0 is a cone, i.e. n = 0 is a vertex.
  bool includes_sigma_T = false;
};

ConeDecomposition build_decomposition(const ValidatedData& data);

/// The cell whose relative interior contains x.
Cell cell_of(const ConeDecomposition& decomp, const NTildePoint& x);
Cell cell_of(const ValidatedData& data, const NTildePoint& x);
/// sigma_alpha rebuilt from the reference cell; alpha must be a minimizer set
/// that occurs in the decomposition.
Cell cell_from_minimizers(const ConeDecomposition& decomp, const MinimizerSet& alpha);

/// Orbit id of a cell in decomp.fundamental_cells, or -1.
int orbit_of(const ConeDecomposition& decomp, const MinimizerSet& alpha);

struct AdmissibilityFailure {
  GammaElement gamma;
  std::size_t cell_index;
  std::string message;
};

struct AdmissibilityReport {
  bool pass = true;
  std::size_t orbit_count = 0;
  std::vector<AdmissibilityFailure> failures;
};

/// Checks S_gamma(sigma_alpha) = sigma_{h(alpha) - l} on every stored
/// representative and generator, recomputing the target from scratch.
AdmissibilityReport check_gamma_admissible(const ConeDecomposition& decomp);

/// Every cell meeting the closed box [xlo, xhi] x [ylo, yhi] at height 1.
std::vector<Cell> cells_in_window(const ConeDecomposition& decomp, const Rat& xlo, const Rat& ylo,
                                  const Rat& xhi, const Rat& yhi);

/// Half-open parallelepiped -n0 + b~([0,1)^2): the L-fundamental domain.
bool in_fundamental_domain(const ValidatedData& data, const RatVec& n);

nlohmann::json to_json(const Cell& cell);
nlohmann::json to_json(const ConeDecomposition& decomp);

}  // namespace iams
