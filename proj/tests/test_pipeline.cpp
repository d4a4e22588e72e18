#include "doctest.h"

#include "fixtures.hpp"

using namespace iams;

TEST_CASE("decimal formatting") {
  CHECK(decimal(Rat(1, 3)) == "0.333");
  CHECK(decimal(Rat(-2, 3)) == "-0.667");
  CHECK(decimal(Rat(5)) == "5.000");
  CHECK(decimal(Rat(-1, 2000)) == "0.000");
  CHECK(decimal(Rat(7, 2), 0) == "4");
}

TEST_CASE("window parsing") {
  const Window w = parse_window("-1,-1/2,1,0.5");
  CHECK(w.xlo == -1);
  CHECK(w.ylo == Rat(-1, 2));
  CHECK(w.yhi == Rat(1, 2));
  CHECK_THROWS_AS(parse_window("0,0,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("a,0,1,1"), std::invalid_argument);
}

TEST_CASE("render highlights the nine F~ points of [-1,1]^2") {
  const RefinedDecomposition& r = fixtures::cached("2I");
  const Drawing d = render_complex(r.complex, parse_window("-1,-1,1,1"), "refined");
  CHECK(d.highlighted == 9);
  CHECK(d.cells >= r.complex.patch().size());
  CHECK(d.svg.find("class=\"ftilde\"") != std::string::npos);
  CHECK(render_complex(r.complex, parse_window("-1,-1,1,1"), "refined").svg == d.svg);
  const Drawing plain = render_complex(fixtures::cached("2I-trivial").complex, parse_window("-1,-1,1,1"), "t");
  CHECK(plain.highlighted == 0);
  CHECK_THROWS_AS(render_complex(r.complex, Window{0, 0, 0, 1}, "x"), std::invalid_argument);
}

TEST_CASE("pipeline end to end") {
  PipelineConfig cfg;
  cfg.samples = 40;
  for (const auto& d : {fixtures::two_i(), fixtures::skew()}) {
    const PipelineResult res = run_pipeline(d, cfg);
    CHECK(res.exit_code == 0);
    const auto& sum = res.report["summary"];
    CHECK(sum["matched"] == true);
    CHECK(sum["Z"] == 4);
    CHECK(sum["euler_sphere"] == 2);
    CHECK(sum["euler_torus"] == 0);
    CHECK(res.report["stages"].size() == 8);
    CHECK(res.svgs.empty());
  }
  const PipelineResult triv = run_pipeline(fixtures::two_i(HAction::Trivial), cfg);
  CHECK(triv.exit_code == 0);
  CHECK_FALSE(triv.report["summary"].contains("Z"));
  CHECK_FALSE(triv.report["stages"][7].contains("kummer"));
}

TEST_CASE("pipeline is deterministic and records timings only on request") {
  PipelineConfig cfg;
  cfg.samples = 30;
  cfg.svg = true;
  cfg.seed = 5;
  const PipelineResult a = run_pipeline(fixtures::two_i(), cfg);
  const PipelineResult b = run_pipeline(fixtures::two_i(), cfg);
  CHECK(a.report.dump() == b.report.dump());
  REQUIRE(a.svgs.size() == 2);
  CHECK(a.svgs == b.svgs);
  CHECK(a.report["config"]["seed"] == 5);
  CHECK_FALSE(a.report["stages"][0].contains("ms"));
  cfg.timings = true;
  CHECK(run_pipeline(fixtures::two_i(), cfg).report["stages"][0].contains("ms"));
}

TEST_CASE("pipeline failures truncate the report") {
  PipelineConfig cfg;
  cfg.nu_cap = 1;
  const PipelineResult res = run_pipeline(fixtures::raw({{2, 0}, {0, 1}}, HAction::Trivial, {0, 0}, {{1, 0}, {0, 2}}), cfg);
  CHECK(res.exit_code == static_cast<int>(Stage::Integralize));
  REQUIRE(res.report["stages"].size() == 2);
  CHECK(res.report["stages"][1]["status"] == "failed");
  CHECK(res.report["stages"][1].contains("error"));

  cfg.nu_cap = 64;
  cfg.refine_rounds = 0;
  CHECK_THROWS_AS(run_pipeline(fixtures::raw({{1, 0}, {0, 1}}), cfg), ValidationError);
}
