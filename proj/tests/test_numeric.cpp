#include "doctest.h"

#include "fixtures.hpp"
#include "iams/lp.hpp"

using namespace iams;

namespace {

IntMat random_unimodular(Sampler& s) {
  IntMat u = identity_int(2);
  for (int k = 0; k < 6; ++k) {
    const long c = s.integer(-2, 2);
    const IntMat e = s.integer(0, 1) ? IntMat{{1, c}, {0, 1}} : IntMat{{1, 0}, {c, 1}};
    u = multiply(u, e);
  }
  if (s.integer(0, 1)) u = multiply(u, IntMat{{0, 1}, {1, 0}});
  return u;
}

}  // namespace

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("-6/4") == Rat(-3, 2));
  CHECK(parse_rational("-0.25") == Rat(-1, 4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(to_string(Rat(-3, 2)) == "-3/2");
  CHECK(to_string(Rat(2)) == "2");
}

TEST_CASE("floor, ceil and isqrt") {
  CHECK(floor_of(Rat(-1, 2)) == -1);
  CHECK(ceil_of(Rat(-1, 2)) == 0);
  CHECK(floor_of(Rat(7, 2)) == 3);
  CHECK(isqrt_floor(Int(24)) == 4);
  CHECK(isqrt_floor(Int(25)) == 5);
}

TEST_CASE("determinant and inverse") {
  const IntMat a{{4, 2}, {2, 6}};
  CHECK(determinant(a) == 20);
  const RatMat inv = inverse(to_rat(a));
  CHECK(multiply(to_rat(a), inv) == to_rat(identity_int(2)));
  CHECK_THROWS_AS(inverse(RatMat{{1, 2}, {2, 4}}), ArithmeticError);
  CHECK(determinant(IntMat{{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}) == 1);
}

TEST_CASE("hermite normal form is a lattice invariant") {
  Sampler s(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat a{{s.integer(-9, 9), s.integer(-9, 9)}, {s.integer(-9, 9), s.integer(-9, 9)}};
    if (determinant(a) == 0) continue;
    const HermiteResult h = hermite_normal_form(a);
    CHECK(multiply(a, h.transform) == h.hnf);
    CHECK(abs_of(determinant(h.transform)) == 1);
    CHECK(h.hnf[0][1] == 0);
    CHECK(h.hnf[0][0] > 0);
    CHECK(h.hnf[1][1] > 0);
    CHECK(hermite_normal_form(multiply(a, random_unimodular(s))).hnf == h.hnf);
  }
}

TEST_CASE("lattice_hnf of redundant generators") {
  // columns (2,0), (0,2), (1,1) generate the checkerboard lattice
  const IntMat g{{2, 0, 1}, {0, 2, 1}};
  const IntMat h = lattice_hnf(g);
  CHECK(abs_of(determinant(h)) == 2);
  CHECK(h == hermite_normal_form(IntMat{{1, 1}, {1, -1}}).hnf);
}

TEST_CASE("extend_to_basis") {
  const IntMat u = extend_to_basis({{2, 3}});
  REQUIRE(u.size() == 2);
  CHECK(u[0] == IntVec{2, 3});
  CHECK(abs_of(determinant(u)) == 1);
  CHECK(extend_to_basis({{2, 4}}).empty());
  const IntMat v = extend_to_basis({{1, 1, 1}, {0, 1, 2}});
  REQUIRE(v.size() == 3);
  CHECK(abs_of(determinant(v)) == 1);
}

TEST_CASE("solve_integral") {
  IntVec x;
  CHECK(solve_integral({{2, 0}, {0, 2}}, {4, 6}, x));
  CHECK(x == IntVec{2, 3});
  CHECK_FALSE(solve_integral({{2, 0}, {0, 2}}, {1, 0}, x));
}

TEST_CASE("simplex: optimum, infeasibility and the deletion filter") {
  lp::Problem p;
  p.num_vars = 2;
  p.free_var = {false, false};
  p.objective = {1, 1};
  p.constraints = {{{1, 2}, lp::Sense::GreaterEqual, 4, "a"}, {{3, 1}, lp::Sense::GreaterEqual, 6, "b"}};
  const lp::Result r = lp::solve(p);
  REQUIRE(r.status == lp::Status::Optimal);
  // vertex of x + 2y = 4, 3x + y = 6
  CHECK(r.x == RatVec{Rat(8, 5), Rat(6, 5)});
  CHECK(r.objective == Rat(14, 5));

  p.constraints.push_back({{1, 0}, lp::Sense::LessEqual, 1, "c"});
  p.constraints.push_back({{0, 1}, lp::Sense::LessEqual, 1, "d"});
  p.constraints.push_back({{1, -1}, lp::Sense::Equal, 0, "e"});
  REQUIRE(lp::solve(p).status == lp::Status::Infeasible);
  const auto iis = lp::irreducible_infeasible_subsystem(p);
  CHECK_FALSE(iis.empty());
  lp::Problem sub = p;
  sub.constraints.clear();
  for (auto i : iis) sub.constraints.push_back(p.constraints[i]);
  CHECK(lp::solve(sub).status == lp::Status::Infeasible);
  for (std::size_t drop = 0; drop < iis.size(); ++drop) {
    lp::Problem smaller = sub;
    smaller.constraints.erase(smaller.constraints.begin() + static_cast<long>(drop));
    CHECK(lp::solve(smaller).status != lp::Status::Infeasible);
  }
}

TEST_CASE("simplex with free variables and unboundedness") {
  lp::Problem p;
  p.num_vars = 1;
  p.free_var = {true};
  p.objective = {1};
  p.constraints = {{{1}, lp::Sense::GreaterEqual, -5, "lower"}};
  const lp::Result r = lp::solve(p);
  REQUIRE(r.status == lp::Status::Optimal);
  CHECK(r.x[0] == -5);
  p.objective = {-1};
  CHECK(lp::solve(p).status == lp::Status::Unbounded);
}
