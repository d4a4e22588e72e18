#pragma once

// The height-1 slice of a refined decomposition as a cell complex, and its
// quotients by L (a torus) and by Gamma (a sphere when H = {+-1}).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "iams/subdivision.hpp"

namespace iams {

class NotAdmissible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Faces of the patch covering sigma_0, with integer vertex indices. The full
/// complex is the union of the L-translates of this patch.
struct SimplicialComplex {
  PeriodicComplex periodic;
  std::vector<RatVec> vertices;
  /// faces[d]: sorted vertex-index lists of the d-dimensional faces.
  std::array<std::vector<std::vector<std::size_t>>, 3> faces;
  /// Vertices lying in F~ (the singular index set).
  std::vector<std::size_t> singular;

  Face coordinates(const std::vector<std::size_t>& face) const;
  bool closed_under_subsets() const;
};

SimplicialComplex dual_complex(const RefinedDecomposition& refined);

enum class QuotientGroup { L, Gamma };

struct QuotientComplex {
  SimplicialComplex base;
  QuotientGroup group = QuotientGroup::L;
  /// orbit_faces[d]: canonical names (keys) of the d-dimensional orbits.
  std::array<std::vector<Face>, 3> orbit_faces;
  /// orbit_map[d][i]: orbit of base.faces[d][i].
  std::array<std::vector<std::size_t>, 3> orbit_map;
  /// boundary[d][i]: orbits of the (d-1)-faces of orbit face i, with multiplicity.
  std::array<std::vector<std::vector<std::size_t>>, 3> boundary;
  /// Vertex orbits forming the singular set Z (Gamma quotient only).
  std::vector<std::size_t> singular_marks;

  std::size_t count(int dim) const { return orbit_faces[static_cast<std::size_t>(dim)].size(); }
  long euler_characteristic() const;
  /// Orbit index of a face anywhere in N_R.
  std::size_t orbit_of(const Face& face) const;
  Face key(const Face& face) const;
};

QuotientComplex quotient(const SimplicialComplex& complex, QuotientGroup group);

struct StarCollision {
  Face face;   ///< orbit representative
  Face image;  ///< a distinct translate sharing a cell with it
  GammaElement gamma;
};

struct Ramification {
  Face vertex;
  std::size_t index = 1;
};

struct CoveringReport {
  bool torus_evenly_covered = true;
  bool sphere_evenly_covered = true;
  bool orbit_counts_consistent = true;
  bool ramified_exactly_on_z = true;
  std::vector<StarCollision> torus_collisions;
  std::vector<StarCollision> sphere_collisions;
  std::vector<Ramification> ramification;  ///< vertices with index > 1
  bool pass() const {
    return torus_evenly_covered && sphere_evenly_covered && orbit_counts_consistent &&
           ramified_exactly_on_z;
  }
};

/// Works on any periodic complex, so unrefined decompositions report the
/// stars that fail to be evenly covered.
CoveringReport covering_report(const PeriodicComplex& complex);

nlohmann::json to_json(const SimplicialComplex& complex);
nlohmann::json to_json(const QuotientComplex& q);
nlohmann::json to_json(const CoveringReport& report);

}  // namespace iams
