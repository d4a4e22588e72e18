#pragma once

// Exact integer / rational arithmetic shared by every module. Nothing in the
// pipeline touches floating point; GMP backs both scalar types.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iams {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;  // row-major
using RatMat = std::vector<RatVec>;  // row-major

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- scalars ---------------------------------------------------------------

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

/// Accepts "p", "p/q" and finite decimals such as "-0.25".
Rat parse_rational(std::string_view text);

Int floor_of(const Rat& v);
Int ceil_of(const Rat& v);
bool is_integral(const Rat& v);
Int abs_of(const Int& v);
Rat abs_of(const Rat& v);
Int gcd_of(const Int& a, const Int& b);
Int lcm_of(const Int& a, const Int& b);
/// floor(sqrt(v)) for v >= 0.
Int isqrt_floor(const Int& v);

// ---- vectors ---------------------------------------------------------------

RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // throws ArithmeticError if not integral
bool is_integral(const RatVec& v);
Int denominator_lcm(const RatVec& v);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& a);
IntVec negate(const IntVec& a);
RatVec negate(const RatVec& a);
Int dot(const IntVec& a, const IntVec& b);
Int norm1(const IntVec& a);
Rat norm1(const RatVec& a);
bool is_zero(const IntVec& a);

std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

// ---- matrices --------------------------------------------------------------

IntMat identity_int(std::size_t n);
IntMat transpose(const IntMat& a);
RatMat transpose(const RatMat& a);
IntMat multiply(const IntMat& a, const IntMat& b);
RatMat multiply(const RatMat& a, const RatMat& b);
IntVec multiply(const IntMat& a, const IntVec& v);
RatVec multiply(const RatMat& a, const RatVec& v);
IntMat scale(const Int& c, const IntMat& a);
RatMat scale(const Rat& c, const RatMat& a);
RatMat to_rat(const IntMat& a);
bool is_square(const IntMat& a, std::size_t n);
bool is_symmetric(const IntMat& a);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMat& a);
Rat determinant(const RatMat& a);
/// Gauss-Jordan inverse; throws ArithmeticError on a singular input.
RatMat inverse(const RatMat& a);
/// Solves a x = b for square nonsingular a.
RatVec solve(const RatMat& a, const RatVec& b);
/// Sylvester's criterion on leading principal minors.
bool is_positive_definite(const IntMat& a);

struct HermiteResult {
  IntMat hnf;        ///< lower triangular, positive diagonal, reduced rows
  IntMat transform;  ///< unimodular U with a * U = hnf
};

/// Column-style Hermite normal form of a square nonsingular integer matrix.
/// Two matrices have the same column lattice iff their HNFs agree.
HermiteResult hermite_normal_form(const IntMat& a);
/// HNF of the lattice spanned by the columns of an n x m matrix of rank n.
IntMat lattice_hnf(const IntMat& generators);

/// Given k linearly independent integer row vectors in Z^n, returns an n x n
/// unimodular matrix whose first k rows are exactly those vectors, or an empty
/// matrix when they do not extend to a Z-basis.
IntMat extend_to_basis(const IntMat& rows);

/// Returns true and fills `out` when the integer system a x = b (a square,
/// nonsingular) has an integral solution.
bool solve_integral(const IntMat& a, const RatVec& b, IntVec& out);

}  // namespace iams
