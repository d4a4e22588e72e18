#pragma once

// An L-periodic polyhedral complex in N_R (height 1) given by a patch of
// 2-cells tiling the reference cell sigma_0; every cell of the plane is a
// patch cell translated by -b~(a) for some a in L.
//
// Faces are identified by their sorted vertex lists (one point for a vertex,
// two for an edge, three or more for a 2-cell).

#include <string>
#include <vector>

#include "iams/cone_decomp.hpp"

namespace iams {

using Face = std::vector<RatVec>;  // sorted

Face make_face(std::vector<RatVec> pts);
/// "[(x,y) (x,y) ...]"
std::string face_to_string(const Face& face);

class PeriodicComplex {
 public:
  PeriodicComplex() = default;
  PeriodicComplex(ConeDecomposition base, std::vector<geo::Polygon> patch);

  const ValidatedData& data() const { return base_.data; }
  const ConeDecomposition& base() const { return base_; }
  /// 2-cells covering sigma_0, CCW.
  const std::vector<geo::Polygon>& patch() const { return patch_; }
  const std::vector<RatVec>& patch_vertices() const { return vertices_; }
  const std::vector<Face>& patch_edges() const { return edges_; }
  /// Every face of every patch cell (vertices, edges, 2-cells), deduplicated.
  std::vector<Face> patch_faces() const;

  /// Closed 2-cells of the plane containing p, as CCW polygons.
  std::vector<geo::Polygon> cells_containing(const RatVec& p) const;
  /// The face whose relative interior contains p.
  Face carrier(const RatVec& p) const;
  /// 2-cells having `face` as a face.
  std::vector<geo::Polygon> star_cells(const Face& face) const;
  bool is_vertex(const RatVec& p) const;
  bool is_face(const Face& face) const;

  /// Translate of p into -n0 + b~([0,1)^r).
  RatVec reduce(const RatVec& p) const;
  /// Canonical name of the L-orbit (resp. Gamma-orbit) of a face: the
  /// lexicographically smallest translate whose chosen vertex lies in the
  /// fundamental parallelepiped.
  Face l_key(const Face& face) const;
  Face gamma_key(const Face& face) const;
  /// All gamma with S_gamma(from) = to as vertex sets.
  std::vector<GammaElement> elements_mapping_face(const Face& from, const Face& to) const;

  Face act(const GammaElement& g, const Face& face) const;

 private:
  ConeDecomposition base_;
  std::vector<geo::Polygon> patch_;
  std::vector<RatVec> vertices_;
  std::vector<Face> edges_;
};

/// The canonical decomposition seen as a periodic complex (patch = sigma_0).
PeriodicComplex canonical_complex(const ConeDecomposition& decomp);

/// Faces of a convex polygon: its vertices, its edges and itself.
std::vector<Face> faces_of(const geo::Polygon& poly);

}  // namespace iams
