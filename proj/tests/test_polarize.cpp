#include "doctest.h"

#include "fixtures.hpp"

using namespace iams;

TEST_CASE("canonical function is a 1-twisted polarization") {
  const ConeDecomposition dec = build_decomposition(validate(fixtures::skew()));
  const PolarizationFunction pf = canonical_polarization(dec);
  CHECK(pf.kappa == 1);
  const PolarizationReport rep = check(pf, 200, 4);
  CHECK(rep.pass);
  CHECK(rep.min_bending >= 1);
  Sampler s(8);
  for (int trial = 0; trial < 100; ++trial) {
    const NTildePoint x{s.point(-3, 3), s.rational(Rat(1, 2), 2)};
    CHECK(transport_value(pf, x) == varphi_min(dec.data, x).value);
  }
}

TEST_CASE("constructed polarization on refined inputs") {
  for (const char* name : {"2I", "skew", "hex", "2I-trivial"}) {
    CAPTURE(name);
    const RefinedDecomposition& r = fixtures::cached(name);
    const PolarizationFunction pf = construct(r);
    CHECK(pf.kappa >= 1);
    CHECK(is_integral(pf.kappa));
    const PolarizationReport rep = check(pf, 200, 9);
    CHECK(rep.pass);
    CHECK(rep.min_bending >= 1);
    for (const auto& w : wall_bendings(pf)) CHECK(w.bending >= 1);

    // twist identity on random points and group elements
    Sampler s(31);
    for (int trial = 0; trial < 100; ++trial) {
      const GammaElement g = s.gamma(r.data());
      const NTildePoint x{s.point(-3, 3), s.rational(Rat(1, 2), 3)};
      CHECK(transport_value(pf, x) - transport_value(pf, act(r.data(), g, x)) == pf.kappa * chi(r.data(), g, x));
      // homogeneity of degree one
      CHECK(transport_value(pf, {scale(Rat(3), x.n), 3 * x.s}) == 3 * transport_value(pf, x));
    }
  }
}

TEST_CASE("minimal twist values") {
  // frozen from the LP; the check above is the independent validation
  CHECK(construct(fixtures::cached("2I")).kappa == 8);
  CHECK(construct(fixtures::cached("skew")).kappa == 48);
  CHECK(construct(fixtures::cached("hex")).kappa == 9);
}

TEST_CASE("forcing a wall flat is infeasible with a small certificate") {
  const RefinedDecomposition& r = fixtures::cached("2I");
  const PolarizationFunction pf = construct(r);
  ConstructOptions opts;
  opts.flat_walls = {wall_bendings(pf).front().wall};
  try {
    construct(r, opts);
    FAIL("expected Infeasible");
  } catch (const Infeasible& e) {
    CHECK_FALSE(e.iis().empty());
    bool mentions_flat = false;
    for (const auto& label : e.iis()) mentions_flat |= label.find("flat") != std::string::npos;
    CHECK(mentions_flat);
  }
}

TEST_CASE("check detects a broken function") {
  PolarizationFunction pf = construct(fixtures::cached("2I"));
  pf.values.front() += 1000;
  CHECK_FALSE(check(pf, 50, 1).pass);
}
