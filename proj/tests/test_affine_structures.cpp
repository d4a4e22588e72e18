#include "doctest.h"

#include "fixtures.hpp"

using namespace iams;

namespace {

const IntMat kMinusId{{-1, 0}, {0, -1}};

}  // namespace

TEST_CASE("affine transforms form a group") {
  const ValidatedData v = validate(fixtures::skew());
  Sampler s(6);
  for (int trial = 0; trial < 100; ++trial) {
    const GammaElement g1 = s.gamma(v), g2 = s.gamma(v);
    const AffineTransform t = compose(transform_of(v, g1), transform_of(v, g2));
    CHECK(t == transform_of(v, compose(g1, g2)));
    CHECK(compose(t, inverse(t)) == identity_transform(2));
    const RatVec p = s.point(-2, 2);
    CHECK(transform_of(v, g1).apply(p) == act_height1(v, g1, p));
  }
}

TEST_CASE("torus atlas: cocycle, holonomy and radiance") {
  for (const char* name : {"2I", "skew", "2I-trivial"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    const AffineAtlas torus = build_atlas(quotient(dual_complex(r), QuotientGroup::L));
    const CocycleReport cc = check_cocycle(torus);
    CHECK(cc.ok);
    CHECK(cc.triples > 0);
    for (std::size_t i = 0; i < 2; ++i) {
      const AffineTransform h = holonomy(torus, generator_loop(torus, i));
      CHECK(h.linear == identity_int(2));
    }
    CHECK(radiance_obstruction_torus(torus) == to_rat(r.data().b_tilde_matrix()));
  }
}

TEST_CASE("sphere atlas: monodromy around Z and half radiance") {
  const RefinedDecomposition& r = fixtures::cached("2I");
  const SimplicialComplex sc = dual_complex(r);
  const AffineAtlas torus = build_atlas(quotient(sc, QuotientGroup::L));
  const AffineAtlas sphere = build_atlas(quotient(sc, QuotientGroup::Gamma));
  CHECK(sphere.excluded.size() == 4);
  CHECK(check_cocycle(sphere).ok);
  CHECK(radiance_obstruction_sphere(sphere, torus) == to_rat(identity_int(2)));
  for (const auto& c : fixed_point_classes(r.data())) {
    const AffineTransform h = holonomy(sphere, singular_loop(sphere, c));
    CHECK(h.linear == kMinusId);
    // -Id fixes translation/2, which must be a point of F~
    CHECK(is_fixed_point(r.data(), scale(Rat(1, 2), h.translation)));
  }
}

TEST_CASE("na_report on the standard inputs") {
  for (const char* name : {"2I", "skew", "hex"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    const NAReport na = na_report(r);
    CHECK(na.pass());
    const RatMat bt = to_rat(r.data().b_tilde_matrix());
    CHECK(na.radiance_torus == bt);
    CHECK(na.radiance_sphere == scale(Rat(1, 2), bt));
    REQUIRE(na.monodromy_z.size() == 4);
    for (const auto& z : na.monodromy_z) CHECK(z.holonomy.linear == kMinusId);
  }
  const NAReport trivial = na_report(fixtures::cached("2I-trivial"));
  CHECK(trivial.pass());
  CHECK(trivial.radiance_sphere.empty());
}

TEST_CASE("a corrupted transition breaks the cocycle condition") {
  const RefinedDecomposition& r = fixtures::cached("2I");
  AffineAtlas atlas = build_atlas(quotient(dual_complex(r), QuotientGroup::Gamma));
  REQUIRE(check_cocycle(atlas).ok);
  auto it = atlas.transitions.begin();
  while (it != atlas.transitions.end() && it->first.i == it->first.j) ++it;
  REQUIRE(it != atlas.transitions.end());
  it->second.linear = scale(Int(-1), it->second.linear);
  it->second.translation = negate(it->second.translation);
  const CocycleReport rep = check_cocycle(atlas);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("holonomy input errors") {
  const RefinedDecomposition& r = fixtures::cached("2I");
  const AffineAtlas atlas = build_atlas(quotient(dual_complex(r), QuotientGroup::L));
  CHECK_THROWS_AS(holonomy(atlas, {}), NotALoop);
  CHECK_THROWS_AS(holonomy(atlas, {{0, identity_element(2)}, {1, identity_element(2)}}), NotALoop);
  CHECK_THROWS_AS(holonomy(atlas, {{0, identity_element(2)}, {0, GammaElement{{50, 50}, 1}}}), NonOverlapping);
  CHECK_THROWS_AS(atlas.chart_of(Face{RatVec{Rat(1, 3), 0}}), NonOverlapping);
}

TEST_CASE("odd torus radiance has no integral half") {
  const RefinedDecomposition& r = fixtures::cached("2I");
  const AffineAtlas sphere = build_atlas(quotient(dual_complex(r), QuotientGroup::Gamma));
  // b = [[2,-1],[-1,2]] has an integral cell of 0, so b~ keeps its odd entries
  const RefinedDecomposition odd = fixtures::refined_of(fixtures::raw({{2, -1}, {-1, 2}}, HAction::Trivial));
  REQUIRE(odd.nu == 1);
  const AffineAtlas torus = build_atlas(quotient(dual_complex(odd), QuotientGroup::L));
  CHECK_THROWS_AS(radiance_obstruction_sphere(sphere, torus), IntegralityViolation);
}
