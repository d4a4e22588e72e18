#include "doctest.h"

#include "fixtures.hpp"

using namespace iams;

TEST_CASE("integralize") {
  const ConeDecomposition dec = build_decomposition(validate(fixtures::two_i()));
  CHECK(integralize(dec).nu == 1);
  // phi = diag(1,2): the cell of 0 has vertices (+-1, +-1/2)
  const ConeDecomposition half =
      build_decomposition(validate(fixtures::raw({{2, 0}, {0, 1}}, HAction::Trivial, {0, 0}, {{1, 0}, {0, 2}})));
  const IntegralizeResult ig = integralize(half);
  CHECK(ig.nu == 2);
  for (const auto& v : ig.decomp.reference) CHECK(is_integral(v));
  CHECK_THROWS_AS(integralize(half, 1), NoIntegralizer);
}

TEST_CASE("refined decompositions satisfy every condition") {
  for (const char* name : {"2I", "skew", "hex", "2I-trivial"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    const ConditionReport rep = verify_conditions(r);
    CHECK(rep.semistable.ok);
    CHECK(rep.smooth.ok);
    CHECK(rep.contains_sigma_T.ok);
    CHECK(rep.cond_d.ok);
    CHECK(rep.cond_e.ok);
    CHECK(rep.cond_f.ok);
    CHECK(rep.cond_g.ok);
    // triangles of area 1/2 tile sigma_0
    Rat area = 0;
    for (const auto& t : r.complex.patch()) area += geo::twice_area(t);
    CHECK(area == geo::twice_area(r.complex.base().reference));
    CHECK(refine(r).complex.patch() == r.complex.patch());
  }
}

TEST_CASE("the unrefined decomposition fails smoothness") {
  const ConeDecomposition dec = build_decomposition(validate(fixtures::two_i()));
  const ConditionReport rep = verify_conditions(canonical_complex(dec));
  CHECK_FALSE(rep.smooth.ok);
  CHECK_FALSE(rep.contains_sigma_T.ok);
  CHECK_FALSE(rep.all());
}

TEST_CASE("triangulation is symmetric under the involution") {
  const RefinedDecomposition& r = fixtures::cached("skew");
  const PeriodicComplex& c = r.complex;
  const GammaElement inv{{0, 0}, -1};
  for (const auto& t : c.patch()) CHECK(c.is_face(c.act(inv, make_face(t))));
}

TEST_CASE("forced doublings and divergence") {
  RefineOptions opts;
  opts.forced_doublings = 1;
  const RefinedDecomposition r = fixtures::refined_of(fixtures::two_i(HAction::Trivial), opts);
  CHECK(r.nu == 2);
  CHECK(verify_conditions(r).all());
  CHECK(r.data().gram() == IntMat{{4, 0}, {0, 4}});

  opts.rounds = 0;
  CHECK_THROWS_AS(fixtures::refined_of(fixtures::two_i(HAction::Trivial), opts), RefinementDiverged);
}
