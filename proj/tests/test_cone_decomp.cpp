#include "doctest.h"

#include "fixtures.hpp"

using namespace iams;

namespace {

// Brute force over |l|_inf <= 5 using only the raw matrices.
VarphiResult varphi_oracle(const DegenerationData& d, const RatVec& n) {
  const IntMat B = multiply(d.b, d.phi);
  VarphiResult best;
  bool first = true;
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y) {
      const IntVec l{x, y};
      const Int q = l[0] * (B[0][0] * l[0] + B[0][1] * l[1]) + l[1] * (B[1][0] * l[0] + B[1][1] * l[1]);
      Rat a(q, 2);
      a.canonicalize();
      a += Rat(d.lambda[0] * x + d.lambda[1] * y);
      const IntVec m = multiply(d.phi, l);
      const Rat v = a + Rat(m[0]) * n[0] + Rat(m[1]) * n[1];
      if (first || v < best.value) {
        best.value = v;
        best.minimizers = {l};
        first = false;
      } else if (v == best.value) {
        best.minimizers.push_back(l);
      }
    }
  std::sort(best.minimizers.begin(), best.minimizers.end());
  return best;
}

}  // namespace

TEST_CASE("varphi_min agrees with brute force") {
  const std::vector<DegenerationData> inputs = {
      fixtures::two_i(), fixtures::skew(), fixtures::hexagonal(),
      fixtures::raw({{2, 1}, {1, 4}}, HAction::Trivial, {1, -1})};
  Sampler s(17);
  for (const auto& d : inputs) {
    const ValidatedData v = validate(d);
    for (int trial = 0; trial < 150; ++trial) {
      const RatVec n = s.point(-2, 2);
      const VarphiResult got = varphi_min(v, n);
      const VarphiResult want = varphi_oracle(d, n);
      CHECK(got.value == want.value);
      CHECK(got.minimizers == want.minimizers);
    }
    // vertices of the reference cell have at least three minimizers
    const ConeDecomposition dec = build_decomposition(v);
    for (const auto& w : dec.reference) CHECK(varphi_oracle(d, w).minimizers.size() >= 3);
  }
}

TEST_CASE("cell of 0 for B = 2I is the square [-1,1]^2") {
  const ConeDecomposition dec = build_decomposition(validate(fixtures::two_i()));
  CHECK(geo::same_vertex_set(dec.reference, geo::box(-1, -1, 1, 1)));
  CHECK(check_gamma_admissible(dec).pass);
}

TEST_CASE("the apex is rejected") {
  const ValidatedData v = validate(fixtures::two_i());
  CHECK_THROWS_AS(varphi_min(v, NTildePoint{{0, 0}, 0}), OriginQuery);
}

TEST_CASE("varphi is 1-twisted and its minimizer sets are transported") {
  for (const auto& d : {fixtures::two_i(), fixtures::skew(), fixtures::raw({{4, 2}, {2, 6}}, HAction::PlusMinusOne, {2, 0})}) {
    const ValidatedData v = validate(d);
    Sampler s(23);
    for (int trial = 0; trial < 100; ++trial) {
      const GammaElement g = s.gamma(v);
      const NTildePoint x{s.point(-2, 2), s.rational(Rat(1, 3), 2)};
      const NTildePoint y = act(v, g, x);
      const VarphiResult fx = varphi_min(v, x);
      const VarphiResult fy = varphi_min(v, y);
      CHECK(fx.value - fy.value == chi(v, g, x));
      CHECK(transport(fx.minimizers, g) == fy.minimizers);
    }
  }
}

TEST_CASE("decomposition is admissible and cells contain their points") {
  for (const auto& d : {fixtures::skew(), fixtures::hexagonal()}) {
    const ConeDecomposition dec = build_decomposition(validate(d));
    CHECK(check_gamma_admissible(dec).pass);
    Sampler s(3);
    for (int trial = 0; trial < 50; ++trial) {
      const RatVec n = s.point(-3, 3);
      const Cell c = cell_of(dec, NTildePoint{n, 1});
      CHECK(geo::contains(c.vertices, n));
      CHECK(orbit_of(dec, canonical_minimizer_set(dec.data, c.minimizer_set)) >= 0);
    }
    const auto cells = cells_in_window(dec, -1, -1, 1, 1);
    for (int trial = 0; trial < 50; ++trial) {
      const RatVec n = s.point(-1, 1);
      bool covered = false;
      for (const auto& c : cells) covered |= geo::contains(c.vertices, n);
      CHECK(covered);
    }
  }
}
