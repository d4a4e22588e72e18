#include "iams/lattice_core.hpp"

#include <sstream>

namespace iams {

std::string to_string(DataViolation v) {
  switch (v) {
    case DataViolation::Malformed: return "Malformed";
    case DataViolation::NotInjective: return "NotInjective";
    case DataViolation::NotSymmetric: return "NotSymmetric";
    case DataViolation::NotPositiveDefinite: return "NotPositiveDefinite";
    case DataViolation::OddPairingWithInvolution: return "OddPairingWithInvolution";
    case DataViolation::OddDiagonal: return "OddDiagonal";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<ValidationIssue>& issues) {
  std::ostringstream os;
  os << "invalid degeneration data:";
  for (const auto& i : issues) os << " " << to_string(i.kind) << " (" << i.detail << ")";
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

std::vector<ValidationIssue> find_violations(const DegenerationData& d) {
  std::vector<ValidationIssue> out;
  const auto r = static_cast<std::size_t>(d.rank);
  if (d.rank < 1 || !is_square(d.phi, r) || !is_square(d.b, r) || d.lambda.size() != r) {
    out.push_back({DataViolation::Malformed, "phi, b must be rank x rank and lambda of length rank"});
    return out;
  }
  if (determinant(d.phi) == 0) out.push_back({DataViolation::NotInjective, "det phi = 0"});
  const IntMat gram = multiply(d.b, d.phi);
  if (!is_symmetric(gram)) {
    out.push_back({DataViolation::NotSymmetric, "B = b*phi is not symmetric"});
  } else if (!is_positive_definite(gram)) {
    out.push_back({DataViolation::NotPositiveDefinite,
                   "B = b*phi has det " + to_string(determinant(gram))});
  }
  if (d.h_action == HAction::PlusMinusOne) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (mpz_odd_p(d.b[i][j].get_mpz_t())) {
          out.push_back({DataViolation::OddPairingWithInvolution,
                         "b(l_" + std::to_string(i + 1) + ", m_" + std::to_string(j + 1) +
                             ") = " + to_string(d.b[i][j]) + " is odd"});
          return out;
        }
  } else {
    for (std::size_t i = 0; i < r; ++i)
      if (mpz_odd_p(gram[i][i].get_mpz_t())) {
        out.push_back({DataViolation::OddDiagonal,
                       "B(l_" + std::to_string(i + 1) + ", l_" + std::to_string(i + 1) +
                           ") is odd, so a(l) = B(l,l)/2 + lambda(l) is not integral"});
        break;
      }
  }
  return out;
}

ValidatedData validate(const DegenerationData& d) {
  if (auto issues = find_violations(d); !issues.empty()) throw ValidationError(std::move(issues));
  ValidatedData v;
  v.raw_ = d;
  v.gram_ = multiply(d.b, d.phi);
  v.b_tilde_ = transpose(d.b);
  v.b_tilde_inv_ = inverse(to_rat(v.b_tilde_));
  v.gram_inv_ = inverse(to_rat(v.gram_));
  v.center_shift_ = solve(to_rat(transpose(d.phi)), to_rat(d.lambda));
  Int trace = 0;
  for (int i = 0; i < d.rank; ++i) trace += v.gram_[i][i];
  Int power = 1;
  for (int i = 1; i < d.rank; ++i) power *= trace;
  v.mu_ = Rat(determinant(v.gram_), power);
  v.mu_.canonicalize();
  return v;
}

ValidatedData base_change(const ValidatedData& data, const Int& nu) {
  DegenerationData d = data.raw();
  d.b = scale(nu, d.b);
  d.lambda = scale(nu, d.lambda);
  return validate(d);
}

GammaElement identity_element(int rank) { return {IntVec(static_cast<std::size_t>(rank), 0), 1}; }

GammaElement compose(const GammaElement& g1, const GammaElement& g2) {
  return {add(g1.l, scale(Int(g1.h), g2.l)), g1.h * g2.h};
}

GammaElement inverse(const GammaElement& g) { return {scale(Int(-g.h), g.l), g.h}; }

bool is_identity(const GammaElement& g) { return g.h == 1 && is_zero(g.l); }

std::vector<GammaElement> generators(const ValidatedData& data) {
  std::vector<GammaElement> out;
  for (int i = 0; i < data.rank(); ++i) {
    GammaElement g = identity_element(data.rank());
    g.l[static_cast<std::size_t>(i)] = 1;
    out.push_back(g);
  }
  if (data.has_involution()) out.push_back({IntVec(static_cast<std::size_t>(data.rank()), 0), -1});
  return out;
}

std::string to_string(const GammaElement& g) {
  return "(" + to_string(g.l) + "," + (g.h > 0 ? "+1" : "-1") + ")";
}

bool in_cone(const NTildePoint& x) {
  if (x.s > 0) return true;
  if (x.s < 0) return false;
  for (const auto& c : x.n)
    if (c != 0) return false;
  return true;
}

Int a_value(const ValidatedData& data, const IntVec& l) {
  const Int quad = dot(l, multiply(data.gram(), l));
  Int half;
  mpz_divexact_ui(half.get_mpz_t(), quad.get_mpz_t(), 2);
  return half + dot(data.raw().lambda, l);
}

IntVec b_tilde(const ValidatedData& data, const IntVec& l) {
  return multiply(data.b_tilde_matrix(), l);
}

Rat phi_pairing(const ValidatedData& data, const IntVec& l, const RatVec& n) {
  return dot(to_rat(multiply(data.raw().phi, l)), n);
}

Rat chi(const ValidatedData& data, const GammaElement& g, const NTildePoint& x) {
  const IntVec m = scale(Int(g.h), g.l);  // h^-1 l, since h = h^-1
  return x.s * Rat(a_value(data, m)) + phi_pairing(data, m, x.n);
}

NTildePoint act(const ValidatedData& data, const GammaElement& g, const NTildePoint& x) {
  const RatVec& n0 = data.center_shift();
  RatVec shifted = add(x.n, scale(x.s, n0));
  RatVec out = sub(scale(Rat(g.h), shifted), scale(x.s, n0));
  out = add(out, scale(x.s, to_rat(b_tilde(data, g.l))));
  return {std::move(out), x.s};
}

RatVec act_height1(const ValidatedData& data, const GammaElement& g, const RatVec& n) {
  return act(data, g, {n, Rat(1)}).n;
}

std::vector<GammaElement> elements_mapping(const ValidatedData& data, const RatVec& from,
                                           const RatVec& to) {
  std::vector<GammaElement> out;
  const RatVec& n0 = data.center_shift();
  for (int h : {1, -1}) {
    if (h == -1 && !data.has_involution()) continue;
    // to = h(from + n0) - n0 + b~(l)
    RatVec target = add(sub(to, scale(Rat(h), add(from, n0))), n0);
    RatVec l = multiply(data.b_tilde_inverse(), target);
    if (is_integral(l)) out.push_back({to_int(l), h});
  }
  return out;
}

std::vector<RatVec> fixed_point_classes(const ValidatedData& data) {
  std::vector<RatVec> out;
  if (!data.has_involution()) return out;
  const auto r = static_cast<std::size_t>(data.rank());
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    IntVec eps(r, 0);
    for (std::size_t i = 0; i < r; ++i) eps[i] = (mask >> i) & 1u;
    RatVec p = scale(Rat(1, 2), to_rat(b_tilde(data, eps)));
    out.push_back(sub(p, data.center_shift()));
  }
  return out;
}

bool is_fixed_point(const ValidatedData& data, const RatVec& n) {
  if (!data.has_involution()) return false;
  RatVec twice = scale(Rat(2), add(n, data.center_shift()));
  return is_integral(multiply(data.b_tilde_inverse(), twice));
}

namespace {

Int json_int(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      Rat r = parse_rational(j.get<std::string>());
      if (is_integral(r)) return r.get_num();
    } catch (const ArithmeticError&) {
    }
  }
  throw InputError(where + ": expected an integer");
}

IntMat json_matrix(const nlohmann::json& j, const std::string& name) {
  if (!j.is_array()) throw InputError("'" + name + "' must be a list of rows");
  IntMat m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw InputError("'" + name + "' row " + std::to_string(i) + " is not a list");
    IntVec row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(json_int(j[i][k], name + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

DegenerationData data_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("degeneration data must be a JSON object");
  DegenerationData d;
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw InputError("'rank' must be an integer");
  d.rank = j["rank"].get<int>();
  if (!j.contains("phi")) throw InputError("missing 'phi'");
  if (!j.contains("b")) throw InputError("missing 'b'");
  d.phi = json_matrix(j["phi"], "phi");
  d.b = json_matrix(j["b"], "b");
  if (j.contains("lambda")) {
    if (!j["lambda"].is_array()) throw InputError("'lambda' must be a list");
    for (std::size_t i = 0; i < j["lambda"].size(); ++i)
      d.lambda.push_back(json_int(j["lambda"][i], "lambda[" + std::to_string(i) + "]"));
  } else {
    d.lambda.assign(static_cast<std::size_t>(std::max(d.rank, 0)), 0);
  }
  const std::string h = j.value("H", std::string("trivial"));
  if (h == "trivial") {
    d.h_action = HAction::Trivial;
  } else if (h == "pm1") {
    d.h_action = HAction::PlusMinusOne;
  } else {
    throw InputError("'H' must be \"trivial\" or \"pm1\"");
  }
  return d;
}

nlohmann::json to_json(const DegenerationData& d) {
  auto mat = [](const IntMat& m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(x.get_si());
      out.push_back(r);
    }
    return out;
  };
  nlohmann::json lam = nlohmann::json::array();
  for (const auto& x : d.lambda) lam.push_back(x.get_si());
  return {{"rank", d.rank},
          {"phi", mat(d.phi)},
          {"b", mat(d.b)},
          {"lambda", lam},
          {"H", d.h_action == HAction::PlusMinusOne ? "pm1" : "trivial"}};
}

}  // namespace iams
