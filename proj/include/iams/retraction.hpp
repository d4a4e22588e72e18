#pragma once

// Tropicalization and the Berkovich retraction on monomial points. A monomial
// point x is given by n in N_Q, with -log|t^k X^m (x)| = k + <m, n>.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iams/complexes_quotients.hpp"

namespace iams {

class NotSmoothCone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonomialPoint {
  RatVec n;
};

/// Finite sum of c t^k X^m with c != 0.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(const IntVec& m, const Int& k, const Rat& coeff = 1);

  void add_term(const IntVec& m, const Int& k, const Rat& coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<IntVec, Int>, Rat>& terms() const { return terms_; }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  std::map<std::pair<IntVec, Int>, Rat> terms_;
};

/// min over terms of k + <m, n>; std::nullopt stands for +infinity (f = 0).
std::optional<Rat> val(const MonomialPoint& x, const LaurentPolynomial& f);

/// Vertices of the smallest cell whose relative interior contains n; the cone
/// over it has dimension equal to the number of vertices.
Face reduction_cone(const RefinedDecomposition& refined, const MonomialPoint& x);

struct Retraction {
  Face cone;        ///< height-1 vertices v_j of the reduction cone
  RatVec weights;   ///< barycentric coordinates alpha_j
  RatVec point;     ///< sum alpha_j v_j
};

Retraction berkovich_retract(const RefinedDecomposition& refined, const MonomialPoint& x);

struct SampleReport {
  bool pass = true;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
};

/// retract = tropicalization and idempotence on seeded random points.
SampleReport check_tropicalization(const RefinedDecomposition& refined, std::size_t samples,
                                   std::uint64_t seed);
/// retract(gamma x) = S_gamma(retract(x)); empty `gammas` means the generators
/// of Gamma (including the involution when H = {+-1}).
SampleReport check_equivariance(const RefinedDecomposition& refined, std::size_t samples,
                                std::uint64_t seed, std::vector<GammaElement> gammas = {});
/// The orbit of the retraction equals the orbit reached by first moving x
/// into the fundamental domain. Local coordinates are compared modulo the
/// stabilizer of the orbit representative, so fixed points need no special case.
SampleReport check_quotient_compatibility(const RefinedDecomposition& refined, QuotientGroup group,
                                          std::size_t samples, std::uint64_t seed);

nlohmann::json to_json(const Retraction& r);
nlohmann::json to_json(const SampleReport& r);

}  // namespace iams
