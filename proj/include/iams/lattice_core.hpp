#pragma once

// Degeneration data (M, L, phi, a, b), the group Gamma = L x| H acting on
// N~ = N (+) Z, and the twist function chi.
//
// Conventions: L and M carry fixed bases, N = M^dual uses the dual basis.
//   phi[i][j]  : i-th coordinate of phi(l_j)   (columns are phi(l_j))
//   b[i][j]    : b(l_i, m_j)
//   B = b * phi, B[i][j] = b(l_i, phi(l_j))
//   b~(l)      : the row vector b(l, -) read as an element of N, i.e. b^T l
//   a(l)       = B(l,l)/2 + lambda(l)

#include "json.hpp"

#include <string>
#include <vector>

#include "iams/numeric.hpp"

namespace iams {

enum class HAction { Trivial, PlusMinusOne };

struct DegenerationData {
  int rank = 2;
  IntMat phi;
  IntMat b;
  IntVec lambda;
  HAction h_action = HAction::Trivial;
};

enum class DataViolation {
  Malformed,
  NotInjective,
  NotSymmetric,
  NotPositiveDefinite,
  OddPairingWithInvolution,
  OddDiagonal,
};

std::string to_string(DataViolation v);

struct ValidationIssue {
  DataViolation kind;
  std::string detail;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// Degeneration data that passed every invariant, together with the derived
/// matrices the rest of the pipeline keeps asking for.
class ValidatedData {
 public:
  const DegenerationData& raw() const { return raw_; }
  int rank() const { return raw_.rank; }
  bool has_involution() const { return raw_.h_action == HAction::PlusMinusOne; }

  const IntMat& gram() const { return gram_; }
  /// Columns are b~(l_1), ..., b~(l_r); equals b^T.
  const IntMat& b_tilde_matrix() const { return b_tilde_; }
  const RatMat& b_tilde_inverse() const { return b_tilde_inv_; }
  const RatMat& gram_inverse() const { return gram_inv_; }
  /// n0 with <phi(l), n0> = lambda(l). The involution acts as the point
  /// reflection about -n0 at height 1, so a stays H-invariant.
  const RatVec& center_shift() const { return center_shift_; }
  /// Rational lower bound det(B)/tr(B)^(r-1) on the least eigenvalue of B.
  const Rat& eigen_lower_bound() const { return mu_; }

 private:
  friend ValidatedData validate(const DegenerationData& data);
  DegenerationData raw_;
  IntMat gram_;
  IntMat b_tilde_;
  RatMat b_tilde_inv_;
  RatMat gram_inv_;
  RatVec center_shift_;
  Rat mu_;
};

/// Lists every violated invariant; empty means valid.
std::vector<ValidationIssue> find_violations(const DegenerationData& data);
/// Throws ValidationError carrying find_violations() when nonempty.
ValidatedData validate(const DegenerationData& data);

/// Base change of ramification index nu: (a, b) -> (nu a, nu b).
ValidatedData base_change(const ValidatedData& data, const Int& nu);

struct GammaElement {
  IntVec l;
  int h = 1;  ///< +1 or -1

  friend bool operator==(const GammaElement& x, const GammaElement& y) {
    return x.h == y.h && x.l == y.l;
  }
  friend bool operator<(const GammaElement& x, const GammaElement& y) {
    if (x.h != y.h) return x.h < y.h;
    return x.l < y.l;
  }
};

GammaElement identity_element(int rank);
/// (l1,h1)(l2,h2) = (l1 + h1 l2, h1 h2).
GammaElement compose(const GammaElement& g1, const GammaElement& g2);
GammaElement inverse(const GammaElement& g);
bool is_identity(const GammaElement& g);
/// (e_i, +1) for each i, plus (0, -1) when H = {+-1}.
std::vector<GammaElement> generators(const ValidatedData& data);
std::string to_string(const GammaElement& g);

struct NTildePoint {
  RatVec n;
  Rat s;
};

bool in_cone(const NTildePoint& x);

Int a_value(const ValidatedData& data, const IntVec& l);
IntVec b_tilde(const ValidatedData& data, const IntVec& l);
/// <phi(l), n> : the M x N pairing after applying phi.
Rat phi_pairing(const ValidatedData& data, const IntVec& l, const RatVec& n);

/// chi((l,h),(n,s)) = s a(h^-1 l) + <phi(h^-1 l), n>.
Rat chi(const ValidatedData& data, const GammaElement& g, const NTildePoint& x);
/// S_(l,h)(n,s) = (h(n + s n0) - s n0 + s b~(l), s).
NTildePoint act(const ValidatedData& data, const GammaElement& g, const NTildePoint& x);
/// The action restricted to height 1.
RatVec act_height1(const ValidatedData& data, const GammaElement& g, const RatVec& n);

/// All gamma (at most |H| of them) with S_gamma(from) = to at height 1.
std::vector<GammaElement> elements_mapping(const ValidatedData& data, const RatVec& from,
                                           const RatVec& to);

/// Points of F~: fixed points of the involutions, -n0 + b~(L)/2. Returns the
/// 2^rank classes modulo L as representatives -n0 + b~(eps)/2, eps in {0,1}^r.
/// Empty when H is trivial.
std::vector<RatVec> fixed_point_classes(const ValidatedData& data);
bool is_fixed_point(const ValidatedData& data, const RatVec& n);

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON schema: {"rank": int, "phi": [[int]], "b": [[int]], "lambda": [int],
// "H": "trivial"|"pm1"}; matrices are lists of rows. "lambda" defaults to 0.
/// Throws InputError on schema violations (wrong types, missing fields).
DegenerationData data_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DegenerationData& d);

}  // namespace iams
