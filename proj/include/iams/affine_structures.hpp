#pragma once

// Integral affine atlases on the torus and sphere quotients, holonomy along
// chart loops, and the radiance obstructions.
//
// A chart is the open star of an orbit representative R_i, embedded in N_R by
// inclusion. Charts i and j overlap once for every gamma such that R_i and
// S_gamma(R_j) lie in a common cell; the transition from chart j to chart i on
// that overlap is S_gamma.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "iams/complexes_quotients.hpp"

namespace iams {

class AmbiguousDeck : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
class NotALoop : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NonOverlapping : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class IntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AffineTransform {
  IntMat linear;
  RatVec translation;

  RatVec apply(const RatVec& x) const;
  bool operator==(const AffineTransform& o) const {
    return linear == o.linear && translation == o.translation;
  }
};

AffineTransform identity_transform(std::size_t rank = 2);
/// a o b
AffineTransform compose(const AffineTransform& a, const AffineTransform& b);
AffineTransform inverse(const AffineTransform& t);
/// S_gamma at height 1: n -> h n + (h - 1) n0 + b~(l).
AffineTransform transform_of(const ValidatedData& data, const GammaElement& g);
std::string to_string(const AffineTransform& t);

struct Chart {
  Face rep;  ///< orbit key, embedded as itself
};

struct TransitionKey {
  std::size_t i = 0;
  std::size_t j = 0;
  GammaElement gamma;
  bool operator<(const TransitionKey& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return gamma < o.gamma;
  }
};

struct AffineAtlas {
  PeriodicComplex complex;
  QuotientGroup group = QuotientGroup::L;
  std::vector<Chart> charts;
  /// Transition from chart j to chart i on the overlap labelled gamma.
  std::map<TransitionKey, AffineTransform> transitions;
  /// Points of Z left out of the atlas.
  std::vector<RatVec> excluded;

  std::size_t chart_of(const Face& face) const;
  /// The unique gamma with S_gamma(rep of its chart) = face.
  GammaElement placement(const Face& face) const;

 private:
  friend AffineAtlas build_atlas(const QuotientComplex& q);
  std::map<Face, std::size_t> index_;
};

AffineAtlas build_atlas(const QuotientComplex& q);

struct CocycleReport {
  bool ok = true;
  std::size_t triples = 0;
  std::vector<std::string> failures;
};

/// T_ik = T_ij o T_jk on every nonempty triple overlap, read from the stored
/// transitions.
CocycleReport check_cocycle(const AffineAtlas& atlas);

struct LoopStep {
  std::size_t chart = 0;
  GammaElement gamma;  ///< overlap label from the previous chart; ignored for the first step
};
using ChartLoop = std::vector<LoopStep>;

AffineTransform holonomy(const AffineAtlas& atlas, const ChartLoop& loop);

/// Loop along a generic segment from p to p + b~(e_i).
ChartLoop generator_loop(const AffineAtlas& atlas, std::size_t i);
/// Loop halfway around the singular vertex c, closing up through the
/// involution fixing c.
ChartLoop singular_loop(const AffineAtlas& atlas, const RatVec& c);

/// Columns are the translation parts of the generator holonomies.
RatMat radiance_obstruction_torus(const AffineAtlas& torus);
/// Half of the torus obstruction; throws IntegralityViolation if it is not
/// integral.
RatMat radiance_obstruction_sphere(const AffineAtlas& sphere, const AffineAtlas& torus);

struct ZMonodromy {
  RatVec point;
  AffineTransform holonomy;
  RatVec fixed_point;
};

struct NAReport {
  std::vector<AffineTransform> generator_holonomies;
  RatMat radiance_torus;
  RatMat radiance_sphere;  ///< empty when H is trivial
  std::vector<ZMonodromy> monodromy_z;
  CocycleReport cocycle_torus;
  CocycleReport cocycle_sphere;
  bool torus_linear_identity = true;
  bool torus_radiance_is_b_tilde = true;
  bool translation_lattice_is_b_tilde = true;
  bool sphere_linear_pm_identity = true;
  bool z_monodromy_order_two = true;
  bool fixed_points_consistent = true;
  bool sphere_radiance_integral = true;
  std::vector<std::string> failures;
  bool pass() const;
};

NAReport na_report(const RefinedDecomposition& refined);

nlohmann::json to_json(const AffineTransform& t);
nlohmann::json to_json(const NAReport& report);

}  // namespace iams
