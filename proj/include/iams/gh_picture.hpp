#pragma once

// The Gromov-Hausdorff side: the Gram matrix B(l_i, l_j), the squared
// diameter of the flat torus it defines, and the comparison of translation
// lattices up to a rational scale.

#include <stdexcept>
#include <string>
#include <vector>

#include "iams/affine_structures.hpp"

namespace iams {

class NotPrincipal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotSymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// b * phi; throws NotSymmetric when the product is not symmetric.
IntMat gram(const DegenerationData& data);

/// Squared circumradius of the Voronoi cell of Z^2 for the form `gram`.
Rat torus_diameter_sq(const IntMat& gram);
/// Vertices of that Voronoi cell (CCW).
geo::Polygon voronoi_cell(const IntMat& gram);

struct GHStructure {
  IntMat gram;
  Rat diameter_sq;
  IntMat translation_lattice;  ///< columns generate the deck translations
  IntMat phi;
};

/// Throws NotPrincipal unless |det phi| = 1.
GHStructure gh_structure(const DegenerationData& data);

struct ComparisonResult {
  bool matched = false;
  Rat scale_sq;
  IntMat change_of_basis;
  std::string witness;
};

/// Looks for rational s > 0 and P in GL_2(Z) with s * gh.translation_lattice = na_lattice * P.
ComparisonResult compare(const IntMat& na_lattice, const GHStructure& gh);

/// The torus holonomy lattice b~(L) carried into L via phi^T.
IntMat na_translation_lattice(const NAReport& report, const IntMat& phi);

/// compare() on the torus lattices plus the structure of the sphere quotient:
/// linear parts in {+-Id}, four order-two singular classes, half radiance and
/// the cocycle condition.
ComparisonResult kummer_compare(const NAReport& report, const GHStructure& gh);

nlohmann::json to_json(const GHStructure& gh);
nlohmann::json to_json(const ComparisonResult& r);

}  // namespace iams
