#include "doctest.h"

#include <set>

#include "fixtures.hpp"

using namespace iams;

TEST_CASE("face counts of the torus and sphere quotients") {
  for (const char* name : {"2I", "skew", "hex"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    const SimplicialComplex sc = dual_complex(r);
    CHECK(sc.closed_under_subsets());
    const QuotientComplex t = quotient(sc, QuotientGroup::L);
    const QuotientComplex s = quotient(sc, QuotientGroup::Gamma);

    // unimodular triangles have area 1/2 and the torus has area |det b~|
    const long f = 2 * abs_of(determinant(r.data().b_tilde_matrix())).get_si();
    CHECK(t.count(2) == static_cast<std::size_t>(f));
    CHECK(t.count(1) == static_cast<std::size_t>(3 * f / 2));
    CHECK(t.count(0) == static_cast<std::size_t>(f / 2));
    CHECK(t.euler_characteristic() == 0);

    // the involution acts freely on triangles and fixes exactly four vertices
    CHECK(s.count(2) == static_cast<std::size_t>(f / 2));
    CHECK(s.count(0) == static_cast<std::size_t>((f / 2 + 4) / 2));
    CHECK(s.euler_characteristic() == 2);
    CHECK(s.singular_marks.size() == 4);

    // the four L-classes of F~ appear among the vertices
    std::set<std::size_t> f_orbits;
    for (auto i : sc.singular) f_orbits.insert(t.orbit_map[0][i]);
    CHECK(f_orbits.size() == 4);
    CHECK(t.singular_marks.empty());
  }
}

TEST_CASE("orbits are consistent with the group action") {
  const RefinedDecomposition& r = fixtures::cached("skew");
  const QuotientComplex s = quotient(dual_complex(r), QuotientGroup::Gamma);
  Sampler smp(2);
  for (const auto& tri : r.complex.patch()) {
    const Face face = make_face(tri);
    const GammaElement g = smp.gamma(r.data());
    CHECK(s.orbit_of(r.complex.act(g, face)) == s.orbit_of(face));
    CHECK(s.key(r.complex.act(g, face)) == s.key(face));
  }
}

TEST_CASE("boundary multiplicities") {
  const QuotientComplex t = quotient(dual_complex(fixtures::cached("2I")), QuotientGroup::L);
  for (const auto& bd : t.boundary[2]) CHECK(bd.size() == 3);
  for (const auto& bd : t.boundary[1]) CHECK(bd.size() == 2);
  // every edge orbit bounds exactly two triangle sides on the torus
  std::vector<int> uses(t.count(1), 0);
  for (const auto& bd : t.boundary[2])
    for (auto e : bd) ++uses[e];
  for (int u : uses) CHECK(u == 2);
}

TEST_CASE("covering report") {
  const CoveringReport good = covering_report(fixtures::cached("skew").complex);
  CHECK(good.pass());
  CHECK(good.ramification.size() == 4);
  for (const auto& ram : good.ramification) CHECK(ram.index == 2);

  const ConeDecomposition dec = build_decomposition(validate(fixtures::two_i()));
  const CoveringReport bad = covering_report(canonical_complex(dec));
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.torus_collisions.empty());
}

TEST_CASE("an asymmetric triangulation is not Gamma-admissible") {
  const RefinedDecomposition& good = fixtures::cached("2I");
  const std::vector<geo::Polygon> patch = {
      {{0, 0}, {1, 0}, {1, 1}},     {{0, 0}, {1, 1}, {0, 1}},     {{-1, -1}, {0, -1}, {-1, 0}},
      {{0, -1}, {0, 0}, {-1, 0}},   {{0, -1}, {1, -1}, {1, 0}},   {{0, -1}, {1, 0}, {0, 0}},
      {{-1, 0}, {0, 0}, {0, 1}},    {{-1, 0}, {0, 1}, {-1, 1}},
  };
  const RefinedDecomposition bad = make_refined(PeriodicComplex(good.complex.base(), patch), 1);
  const SimplicialComplex sc = dual_complex(bad);
  CHECK_NOTHROW(quotient(sc, QuotientGroup::L));
  CHECK_THROWS_AS(quotient(sc, QuotientGroup::Gamma), NotAdmissible);
}
