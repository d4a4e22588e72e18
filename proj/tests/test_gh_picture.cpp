#include "doctest.h"

#include "fixtures.hpp"

using namespace iams;

namespace {

Rat form(const IntMat& g, const RatVec& u, const RatVec& v) {
  return multiply(to_rat(g), v)[0] * u[0] + multiply(to_rat(g), v)[1] * u[1];
}

// Largest squared distance from the lattice, found among circumcenters of
// lattice triangles through 0 that have no closer lattice point.
Rat covering_radius_sq_oracle(const IntMat& g) {
  Rat best = 0;
  std::vector<RatVec> pts;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) pts.push_back({x, y});
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          const RatVec u{a, b}, v{c, d};
          if (a * d - b * c == 0) continue;
          // G(c, u) = G(u, u)/2 and G(c, v) = G(v, v)/2
          const RatVec gu = multiply(to_rat(g), u), gv = multiply(to_rat(g), v);
          const RatMat m{{gu[0], gu[1]}, {gv[0], gv[1]}};
          const RatVec center = solve(m, {form(g, u, u) / 2, form(g, v, v) / 2});
          const Rat r2 = form(g, center, center);
          bool empty = true;
          for (const auto& p : pts) {
            const RatVec w = sub(center, p);
            if (form(g, w, w) < r2) {
              empty = false;
              break;
            }
          }
          if (empty && r2 > best) best = r2;
        }
  return best;
}

IntMat random_unimodular(Sampler& s) {
  IntMat u = identity_int(2);
  for (int k = 0; k < 5; ++k) {
    const long c = s.integer(-2, 2);
    u = multiply(u, s.integer(0, 1) ? IntMat{{1, c}, {0, 1}} : IntMat{{1, 0}, {c, 1}});
  }
  return u;
}

}  // namespace

TEST_CASE("torus diameters against the circumcenter oracle") {
  CHECK(torus_diameter_sq({{1, 0}, {0, 1}}) == Rat(1, 2));
  CHECK(torus_diameter_sq({{2, 0}, {0, 2}}) == 1);
  CHECK(torus_diameter_sq({{4, 2}, {2, 6}}) == Rat(9, 5));
  for (const IntMat& g : {IntMat{{4, 2}, {2, 6}}, IntMat{{2, 1}, {1, 2}}, IntMat{{3, 1}, {1, 5}}, IntMat{{6, -2}, {-2, 3}}})
    CHECK(torus_diameter_sq(g) == covering_radius_sq_oracle(g));
  CHECK(covering_radius_sq_oracle({{4, 2}, {2, 6}}) == Rat(9, 5));
}

TEST_CASE("diameter is homogeneous and the Voronoi cell is centrally symmetric") {
  const IntMat g{{4, 2}, {2, 6}};
  for (long c = 1; c <= 4; ++c) CHECK(torus_diameter_sq(scale(Int(c), g)) == c * torus_diameter_sq(g));
  const geo::Polygon cell = voronoi_cell(g);
  CHECK(cell.size() == 6);
  for (const auto& v : cell) {
    bool has_opposite = false;
    for (const auto& w : cell) has_opposite |= w == negate(v);
    CHECK(has_opposite);
  }
  // area of the Voronoi cell is the covolume 1
  CHECK(geo::twice_area(cell) == 2);
}

TEST_CASE("gram and gh_structure errors") {
  CHECK(gram(fixtures::skew()) == IntMat{{4, 2}, {2, 6}});
  CHECK_THROWS_AS(gram(fixtures::raw({{2, 0}, {0, 2}}, HAction::Trivial, {0, 0}, {{1, 1}, {0, 1}})), NotSymmetric);
  CHECK_THROWS_AS(gh_structure(fixtures::raw({{2, 0}, {0, 1}}, HAction::Trivial, {0, 0}, {{1, 0}, {0, 2}})),
                  NotPrincipal);
  const GHStructure gh = gh_structure(fixtures::two_i());
  CHECK(gh.diameter_sq == 1);
}

TEST_CASE("compare examples") {
  const GHStructure gh = gh_structure(fixtures::two_i());
  const ComparisonResult same = compare({{2, 0}, {0, 2}}, gh);
  CHECK(same.matched);
  CHECK(same.scale_sq == 1);
  CHECK(same.change_of_basis == identity_int(2));

  const ComparisonResult scaled = compare({{4, 0}, {0, 4}}, gh);
  CHECK(scaled.matched);
  CHECK(scaled.scale_sq == 4);

  GHStructure other = gh;
  other.translation_lattice = {{1, 0}, {0, 2}};
  const ComparisonResult mismatch = compare({{2, 0}, {0, 2}}, other);
  CHECK_FALSE(mismatch.matched);
  CHECK_FALSE(mismatch.witness.empty());
}

TEST_CASE("compare is invariant under change of basis and symmetric") {
  Sampler s(77);
  const GHStructure gh = gh_structure(fixtures::skew());
  for (int trial = 0; trial < 100; ++trial) {
    const long k = s.integer(1, 4);
    const IntMat na = multiply(scale(Int(k), gh.translation_lattice), random_unimodular(s));
    const ComparisonResult r = compare(na, gh);
    REQUIRE(r.matched);
    CHECK(r.scale_sq == k * k);
    CHECK(abs_of(determinant(r.change_of_basis)) == 1);
    CHECK(multiply(na, r.change_of_basis) == scale(Int(k), gh.translation_lattice));

    GHStructure flipped = gh;
    flipped.translation_lattice = na;
    const ComparisonResult back = compare(gh.translation_lattice, flipped);
    CHECK(back.matched);
    CHECK(back.scale_sq * r.scale_sq == 1);
  }
}

TEST_CASE("NA side against GH side on refined inputs") {
  for (const char* name : {"2I", "skew", "hex"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    const NAReport na = na_report(r);
    const GHStructure gh = gh_structure(r.data().raw());
    CHECK(compare(na_translation_lattice(na, gh.phi), gh).matched);
    const ComparisonResult k = kummer_compare(na, gh);
    CHECK(k.matched);
    CHECK(k.scale_sq == 1);
  }
  const NAReport trivial = na_report(fixtures::cached("2I-trivial"));
  const GHStructure gh = gh_structure(fixtures::two_i(HAction::Trivial));
  CHECK(compare(na_translation_lattice(trivial, gh.phi), gh).matched);
  CHECK_FALSE(kummer_compare(trivial, gh).matched);
}

TEST_CASE("a forced base change shows up as the scale") {
  RefineOptions opts;
  opts.forced_doublings = 1;
  const DegenerationData d = fixtures::two_i();
  const RefinedDecomposition r = fixtures::refined_of(d, opts);
  REQUIRE(r.nu == 2);
  const NAReport na = na_report(r);
  CHECK(na.radiance_torus == RatMat{{4, 0}, {0, 4}});
  const GHStructure gh = gh_structure(d);
  const ComparisonResult c = kummer_compare(na, gh);
  CHECK(c.matched);
  CHECK(c.scale_sq == 4);
}
