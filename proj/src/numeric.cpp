#include "iams/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace iams {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw ArithmeticError("empty rational literal");
  auto digits_only = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(t.begin());
    return Int(t);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_only(num, true) || !digits_only(den, false))
      throw ArithmeticError("malformed rational literal '" + s + "'");
    Int d = to_int(den);
    if (d == 0) throw ArithmeticError("zero denominator in '" + s + "'");
    Rat r(to_int(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(whole.begin());
    if (whole.empty()) whole = "0";
    if (!digits_only(whole, false) || (!frac.empty() && !digits_only(frac, false)))
      throw ArithmeticError("malformed decimal literal '" + s + "'");
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Int num = Int(whole) * den + (frac.empty() ? Int(0) : Int(frac));
    Rat r(negative ? Int(-num) : num, den);
    r.canonicalize();
    return r;
  }
  if (!digits_only(s, true)) throw ArithmeticError("malformed integer literal '" + s + "'");
  return Rat(to_int(s));
}

Int floor_of(const Rat& v) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

Int ceil_of(const Rat& v) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

bool is_integral(const Rat& v) { return v.get_den() == 1; }

Int abs_of(const Int& v) { return v < 0 ? Int(-v) : v; }
Rat abs_of(const Rat& v) { return v < 0 ? Rat(-v) : v; }

Int gcd_of(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm_of(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int isqrt_floor(const Int& v) {
  if (v < 0) throw ArithmeticError("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw ArithmeticError("vector " + to_string(v) + " is not integral");
    out.push_back(x.get_num());
  }
  return out;
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integral(x); });
}

Int denominator_lcm(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm_of(l, x.get_den());
  return l;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec scale(const Int& c, const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

IntVec negate(const IntVec& a) { return scale(Int(-1), a); }
RatVec negate(const RatVec& a) { return scale(Rat(-1), a); }

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int norm1(const IntVec& a) {
  Int s = 0;
  for (const auto& x : a) s += abs_of(x);
  return s;
}

Rat norm1(const RatVec& a) {
  Rat s = 0;
  for (const auto& x : a) s += abs_of(x);
  return s;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

std::string to_string(const IntVec& v) { return to_string(to_rat(v)); }

IntMat identity_int(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMat transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat multiply(const IntMat& a, const IntMat& b) {
  IntMat c(a.size(), IntVec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RatMat multiply(const RatMat& a, const RatMat& b) {
  RatMat c(a.size(), RatVec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntVec multiply(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
  return out;
}

RatVec multiply(const RatMat& a, const RatVec& v) {
  RatVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
  return out;
}

IntMat scale(const Int& c, const IntMat& a) {
  IntMat out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

RatMat scale(const Rat& c, const RatMat& a) {
  RatMat out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

RatMat to_rat(const IntMat& a) {
  RatMat out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(to_rat(row));
  return out;
}

bool is_square(const IntMat& a, std::size_t n) {
  if (a.size() != n) return false;
  return std::all_of(a.begin(), a.end(), [n](const IntVec& r) { return r.size() == n; });
}

bool is_symmetric(const IntMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

Int determinant(const IntMat& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMat m = input;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rat determinant(const RatMat& input) {
  const std::size_t n = input.size();
  RatMat m = input;
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

RatMat inverse(const RatMat& input) {
  const std::size_t n = input.size();
  RatMat m = input;
  RatMat inv(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) throw ArithmeticError("singular matrix");
    std::swap(m[pivot], m[k]);
    std::swap(inv[pivot], inv[k]);
    Rat p = m[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      m[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

RatVec solve(const RatMat& a, const RatVec& b) { return multiply(inverse(a), b); }

bool is_positive_definite(const IntMat& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    IntMat minor(k, IntVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

namespace {

// Column operation on columns i, j of `m` (and the transform `u`) that turns
// row r's entries (m[r][i], m[r][j]) into (gcd, 0).
void gcd_columns(IntMat& m, IntMat& u, std::size_t r, std::size_t i, std::size_t j) {
  const Int a = m[r][i], b = m[r][j];
  if (b == 0) return;
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Int p = a / g, q = b / g;
  auto apply = [&](IntMat& t) {
    for (auto& row : t) {
      const Int ci = row[i], cj = row[j];
      row[i] = x * ci + y * cj;
      row[j] = -q * ci + p * cj;
    }
  };
  apply(m);
  apply(u);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& a) {
  const std::size_t n = a.size();
  if (!is_square(a, n)) throw ArithmeticError("HNF expects a square matrix");
  if (determinant(a) == 0) throw ArithmeticError("HNF expects a nonsingular matrix");
  IntMat h = a;
  IntMat u = identity_int(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = r + 1; j < n; ++j) gcd_columns(h, u, r, r, j);
    if (h[r][r] < 0) {
      for (auto& row : h) row[r] = -row[r];
      for (auto& row : u) row[r] = -row[r];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < r; ++k) {
      Int f = floor_of(Rat(h[r][k], h[r][r]));
      if (f == 0) continue;
      for (auto& row : h) row[k] -= f * row[r];
      for (auto& row : u) row[k] -= f * row[r];
    }
  }
  return {h, u};
}

IntMat lattice_hnf(const IntMat& generators) {
  const std::size_t n = generators.size();
  if (n == 0) throw ArithmeticError("empty generator matrix");
  const std::size_t m = generators[0].size();
  if (m < n) throw ArithmeticError("too few generators for a full-rank lattice");
  IntMat h = generators;
  IntMat u = identity_int(m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = r + 1; j < m; ++j) gcd_columns(h, u, r, r, j);
  IntMat square(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) square[i][j] = h[i][j];
  return hermite_normal_form(square).hnf;
}

IntMat extend_to_basis(const IntMat& rows) {
  if (rows.empty()) return {};
  const std::size_t k = rows.size(), n = rows[0].size();
  if (k > n) return {};
  IntMat m = rows;
  IntMat v = identity_int(n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = r + 1; j < n; ++j) gcd_columns(m, v, r, r, j);
    if (m[r][r] == 0) {
      // pivot lives further right; bring it forward
      std::size_t j = r + 1;
      while (j < n && m[r][j] == 0) ++j;
      if (j == n) return {};
      for (auto& row : m) std::swap(row[r], row[j]);
      for (auto& row : v) std::swap(row[r], row[j]);
    }
    if (abs_of(m[r][r]) != 1) return {};
  }
  // rows = [H | 0] * W with W = V^{-1}; H unimodular lower triangular.
  RatMat w_rat = inverse(to_rat(v));
  IntMat w(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) w[i] = to_int(w_rat[i]);
  IntMat basis = rows;
  for (std::size_t i = k; i < n; ++i) basis.push_back(w[i]);
  if (abs_of(determinant(basis)) != 1) return {};
  return basis;
}

bool solve_integral(const IntMat& a, const RatVec& b, IntVec& out) {
  RatVec x = solve(to_rat(a), b);
  if (!is_integral(x)) return false;
  out = to_int(x);
  return true;
}

}  // namespace iams
