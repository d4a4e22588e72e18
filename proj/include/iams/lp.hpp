#pragma once

// Dense two-phase simplex over the rationals with Bland's rule.

#include <string>
#include <vector>

#include "iams/numeric.hpp"

namespace iams::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
  RatVec coeffs;
  Sense sense = Sense::GreaterEqual;
  Rat rhs;
  std::string label;
};

struct Problem {
  std::size_t num_vars = 0;
  /// Variables flagged free may take any sign; the rest are >= 0.
  std::vector<bool> free_var;
  RatVec objective;  ///< minimized; empty means pure feasibility
  std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  RatVec x;
  Rat objective;
};

Result solve(const Problem& problem);

/// Deletion filter: indices of a minimal subset of constraints that is still
/// infeasible. Requires solve(problem).status == Infeasible.
std::vector<std::size_t> irreducible_infeasible_subsystem(const Problem& problem);

}  // namespace iams::lp
