#include "doctest.h"

#include "fixtures.hpp"

using namespace iams;

namespace {

LaurentPolynomial random_polynomial(Sampler& s) {
  LaurentPolynomial f;
  const long terms = s.integer(1, 4);
  for (long k = 0; k < terms; ++k)
    f.add_term({s.integer(-3, 3), s.integer(-3, 3)}, s.integer(-2, 4), Rat(s.integer(1, 5)));
  return f;
}

}  // namespace

TEST_CASE("val of explicit polynomials") {
  const MonomialPoint x{{3, 0}};
  const LaurentPolynomial f = LaurentPolynomial::monomial({0, 0}, 1) + LaurentPolynomial::monomial({1, 0}, 0);
  CHECK(val(x, f) == Rat(1));
  CHECK(val(MonomialPoint{{Rat(1, 2), 0}}, f) == Rat(1, 2));
  CHECK_FALSE(val(x, LaurentPolynomial()).has_value());
  // cancellation removes the term
  const LaurentPolynomial g = LaurentPolynomial::monomial({1, 0}, 0) + LaurentPolynomial::monomial({1, 0}, 0, -1);
  CHECK(g.is_zero());
  CHECK_FALSE(val(x, g).has_value());
}

TEST_CASE("val is a valuation on positive polynomials") {
  Sampler s(12);
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialPoint x{s.point(-3, 3)};
    const LaurentPolynomial f = random_polynomial(s), g = random_polynomial(s);
    CHECK(*val(x, f * g) == *val(x, f) + *val(x, g));
    CHECK(*val(x, f + g) >= std::min(*val(x, f), *val(x, g)));
  }
}

TEST_CASE("retraction at explicit points of the B = 2I refinement") {
  const RefinedDecomposition& r = fixtures::cached("2I");

  const Retraction inside = berkovich_retract(r, {{Rat(2, 3), Rat(1, 3)}});
  REQUIRE(inside.cone.size() == 3);
  CHECK(inside.weights == RatVec{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  CHECK(inside.point == RatVec{Rat(2, 3), Rat(1, 3)});

  const Retraction vertex = berkovich_retract(r, {{1, 0}});
  CHECK(vertex.cone.size() == 1);
  CHECK(vertex.weights == RatVec{1});

  const Retraction edge = berkovich_retract(r, {{Rat(1, 2), -1}});
  CHECK(edge.cone.size() == 2);
  CHECK(edge.weights == RatVec{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("retraction weights are barycentric coordinates") {
  for (const char* name : {"2I", "skew", "hex"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    Sampler s(41);
    for (int trial = 0; trial < 200; ++trial) {
      const RatVec n = s.point(-4, 4);
      const Retraction ret = berkovich_retract(r, {n});
      CHECK(ret.point == n);
      Rat total = 0;
      RatVec combo{0, 0};
      for (std::size_t j = 0; j < ret.weights.size(); ++j) {
        CHECK(ret.weights[j] > 0);
        total += ret.weights[j];
        combo = add(combo, scale(ret.weights[j], ret.cone[j]));
      }
      CHECK(total == 1);
      CHECK(combo == n);
      CHECK(reduction_cone(r, {n}) == ret.cone);
    }
  }
}

TEST_CASE("sampled identities hold on refined inputs") {
  for (const char* name : {"2I", "skew", "2I-trivial"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    CHECK(check_tropicalization(r, 150, 3).pass);
    CHECK(check_equivariance(r, 150, 3).pass);
    CHECK(check_quotient_compatibility(r, QuotientGroup::L, 150, 3).pass);
    if (r.data().has_involution()) {
      const SampleReport q = check_quotient_compatibility(r, QuotientGroup::Gamma, 150, 3);
      CHECK(q.pass);
      CHECK(q.samples == 150);
    }
  }
}

TEST_CASE("equivariance for larger group elements") {
  const RefinedDecomposition& r = fixtures::cached("skew");
  Sampler s(14);
  std::vector<GammaElement> gammas;
  for (int k = 0; k < 6; ++k) gammas.push_back(s.gamma(r.data(), 4));
  CHECK(check_equivariance(r, 60, 14, gammas).pass);
}

TEST_CASE("reports are reproducible from the seed") {
  const RefinedDecomposition& r = fixtures::cached("skew");
  CHECK(to_json(check_equivariance(r, 40, 99)) == to_json(check_equivariance(r, 40, 99)));
}

TEST_CASE("a non-unimodular cone is rejected") {
  const ConeDecomposition dec = build_decomposition(validate(fixtures::two_i()));
  const RefinedDecomposition coarse = make_refined(canonical_complex(dec), 1);
  // the edge from (-1,-1) to (1,-1) has lattice length 2
  CHECK_THROWS_AS(berkovich_retract(coarse, {{Rat(1, 2), -1}}), NotSmoothCone);
}
