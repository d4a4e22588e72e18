#include "iams/lp.hpp"

#include <cstdint>
#include <stdexcept>

namespace iams::lp {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : a_(rows, RatVec(cols + 1)), basis_(rows) {}

  RatVec& row(std::size_t i) { return a_[i]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size() - 1; }
  std::vector<std::size_t>& basis() { return basis_; }
  const Rat& rhs(std::size_t i) const { return a_[i].back(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rat f = a_[i][c];
      for (std::size_t j = 0; j < a_[i].size(); ++j) a_[i][j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  /// Minimizes cost over the allowed columns. Returns false when unbounded.
  bool run(const RatVec& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!allowed[j]) continue;
        Rat reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) reduced -= cost[basis_[i]] * a_[i][j];
        if (reduced < 0) {
          enter = j;  // Bland: smallest improving index
          break;
        }
      }
      if (enter == cols()) return true;
      std::size_t leave = rows();
      Rat best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        const Rat ratio = a_[i].back() / a_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<RatVec> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result solve(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  // Column layout: x+ (n), x- (one per free variable), slack/surplus, artificial.
  std::vector<std::size_t> neg_col(n, SIZE_MAX);
  std::size_t col = n;
  for (std::size_t j = 0; j < n; ++j)
    if (j < problem.free_var.size() && problem.free_var[j]) neg_col[j] = col++;
  const std::size_t m = problem.constraints.size();
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (problem.constraints[i].sense != Sense::Equal) slack_col[i] = col++;
  const std::size_t first_art = col;
  const std::size_t total = first_art + m;

  Tableau t(m, total);
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = problem.constraints[i];
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint width mismatch");
    const bool flip = c.rhs < 0;
    const Rat sign = flip ? Rat(-1) : Rat(1);
    RatVec& r = t.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = sign * c.coeffs[j];
      if (neg_col[j] != SIZE_MAX) r[neg_col[j]] = -r[j];
    }
    if (c.sense == Sense::LessEqual) r[slack_col[i]] = sign;
    if (c.sense == Sense::GreaterEqual) r[slack_col[i]] = -sign;
    r[first_art + i] = 1;
    r.back() = sign * c.rhs;
    t.basis()[i] = first_art + i;
  }

  RatVec phase1(total);
  for (std::size_t i = 0; i < m; ++i) phase1[first_art + i] = 1;
  std::vector<bool> all(total, true);
  t.run(phase1, all);
  Rat infeas = 0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis()[i] >= first_art) infeas += t.rhs(i);
  Result res;
  if (infeas > 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive artificials out of the basis.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis()[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t c = first_art;
    for (std::size_t j = 0; j < first_art; ++j)
      if (t.row(i)[j] != 0) {
        c = j;
        break;
      }
    if (c == first_art) {
      t.drop_row(i);
    } else {
      t.pivot(i, c);
      ++i;
    }
  }

  RatVec phase2(total);
  for (std::size_t j = 0; j < n && j < problem.objective.size(); ++j) {
    phase2[j] = problem.objective[j];
    if (neg_col[j] != SIZE_MAX) phase2[neg_col[j]] = -problem.objective[j];
  }
  std::vector<bool> allowed(total, true);
  for (std::size_t j = first_art; j < total; ++j) allowed[j] = false;
  if (!t.run(phase2, allowed)) {
    res.status = Status::Unbounded;
    return res;
  }
  RatVec value(total);
  for (std::size_t i = 0; i < t.rows(); ++i) value[t.basis()[i]] = t.rhs(i);
  res.x.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    res.x[j] = value[j];
    if (neg_col[j] != SIZE_MAX) res.x[j] -= value[neg_col[j]];
  }
  res.objective = 0;
  for (std::size_t j = 0; j < n && j < problem.objective.size(); ++j)
    res.objective += problem.objective[j] * res.x[j];
  res.status = Status::Optimal;
  return res;
}

std::vector<std::size_t> irreducible_infeasible_subsystem(const Problem& problem) {
  Problem work = problem;
  work.objective.clear();
  std::vector<std::size_t> index(problem.constraints.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  if (solve(work).status != Status::Infeasible)
    throw std::invalid_argument("IIS requested for a feasible system");
  for (std::size_t k = 0; k < work.constraints.size();) {
    Problem trial = work;
    trial.constraints.erase(trial.constraints.begin() + static_cast<std::ptrdiff_t>(k));
    if (solve(trial).status == Status::Infeasible) {
      work = std::move(trial);
      index.erase(index.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return index;
}

}  // namespace iams::lp
