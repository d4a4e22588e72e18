#include "iams/pipeline.hpp"

#include <chrono>
#include <functional>

namespace iams {

namespace {

nlohmann::json rat_matrix_json(const RatMat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    j.push_back(r);
  }
  return j;
}

}  // namespace

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::Decompose: return "decompose";
    case Stage::Integralize: return "integralize";
    case Stage::Refine: return "refine";
    case Stage::Polarize: return "polarize";
    case Stage::Quotient: return "quotient";
    case Stage::Affine: return "affine";
    case Stage::RetractCheck: return "retract-check";
    case Stage::Compare: return "compare";
    case Stage::Render: return "render";
  }
  return "unknown";
}

PipelineResult run_pipeline(const DegenerationData& input, const PipelineConfig& cfg) {
  const ValidatedData data = validate(input);
  const bool inv = data.has_involution();

  PipelineResult result;
  nlohmann::json& report = result.report;
  report["input"] = to_json(input);
  report["config"] = {{"seed", cfg.seed},
                      {"samples", cfg.samples},
                      {"nu_cap", cfg.nu_cap.get_str()},
                      {"refine_rounds", cfg.refine_rounds},
                      {"svg", cfg.svg}};
  nlohmann::json stages = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();

  auto run = [&](Stage s, const std::function<bool(nlohmann::json&)>& body) {
    if (result.exit_code != 0) return false;
    const auto start = std::chrono::steady_clock::now();
    nlohmann::json entry = {{"name", stage_name(s)}};
    bool ok = false;
    try {
      ok = body(entry);
    } catch (const std::exception& e) {
      entry["error"] = e.what();
    }
    entry["status"] = ok ? "ok" : "failed";
    if (!ok) {
      entry["exit_code"] = static_cast<int>(s);
      result.exit_code = static_cast<int>(s);
    }
    if (cfg.timings)
      entry["ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    stages.push_back(std::move(entry));
    return ok;
  };

  ConeDecomposition dec;
  IntegralizeResult ig;
  RefinedDecomposition refined;
  NAReport na;

  run(Stage::Decompose, [&](nlohmann::json& e) {
    dec = build_decomposition(data);
    const AdmissibilityReport adm = check_gamma_admissible(dec);
    nlohmann::json ref = nlohmann::json::array();
    for (const auto& v : dec.reference) ref.push_back({to_string(v[0]), to_string(v[1])});
    e["reference_cell"] = ref;
    e["cell_orbits"] = dec.fundamental_cells.size();
    e["includes_sigma_T"] = dec.includes_sigma_T;
    e["admissible"] = adm.pass;
    return adm.pass;
  });

  run(Stage::Integralize, [&](nlohmann::json& e) {
    ig = integralize(dec, cfg.nu_cap);
    e["nu"] = ig.nu.get_str();
    return true;
  });

  run(Stage::Refine, [&](nlohmann::json& e) {
    RefineOptions opts;
    opts.rounds = cfg.refine_rounds;
    refined = refine(ig.decomp, ig.nu, opts);
    const ConditionReport cond = verify_conditions(refined);
    e["nu"] = refined.nu.get_str();
    e["triangles"] = refined.complex.patch().size();
    e["triangle_orbits"] = refined.triangles.size();
    e["conditions"] = to_json(cond);
    summary["nu"] = refined.nu.get_str();
    return cond.all();
  });

  run(Stage::Polarize, [&](nlohmann::json& e) {
    const PolarizationFunction pf = construct(refined);
    const PolarizationReport pr = check(pf, cfg.samples, cfg.seed);
    e["function"] = to_json(pf);
    e["check"] = to_json(pr);
    summary["kappa"] = to_string(pf.kappa);
    return pr.pass;
  });

  run(Stage::Quotient, [&](nlohmann::json& e) {
    const SimplicialComplex sc = dual_complex(refined);
    const QuotientComplex qt = quotient(sc, QuotientGroup::L);
    const CoveringReport cov = covering_report(refined.complex);
    e["torus"] = {{"counts", {qt.count(0), qt.count(1), qt.count(2)}},
                  {"euler_characteristic", qt.euler_characteristic()}};
    e["covering"] = to_json(cov);
    summary["euler_torus"] = qt.euler_characteristic();
    bool ok = sc.closed_under_subsets() && qt.euler_characteristic() == 0 && cov.pass();
    if (inv) {
      const QuotientComplex qs = quotient(sc, QuotientGroup::Gamma);
      e["sphere"] = to_json(qs);
      summary["euler_sphere"] = qs.euler_characteristic();
      summary["Z"] = qs.singular_marks.size();
      ok = ok && qs.euler_characteristic() == 2 && qs.singular_marks.size() == 4;
    }
    return ok;
  });

  run(Stage::Affine, [&](nlohmann::json& e) {
    na = na_report(refined);
    e["report"] = to_json(na);
    summary["radiance_torus"] = rat_matrix_json(na.radiance_torus);
    if (inv) summary["radiance_sphere"] = rat_matrix_json(na.radiance_sphere);
    return na.pass();
  });

  run(Stage::RetractCheck, [&](nlohmann::json& e) {
    const SampleReport trop = check_tropicalization(refined, cfg.samples, cfg.seed);
    const SampleReport eq = check_equivariance(refined, cfg.samples, cfg.seed);
    const SampleReport ql = check_quotient_compatibility(refined, QuotientGroup::L, cfg.samples, cfg.seed);
    e["tropicalization"] = to_json(trop);
    e["equivariance"] = to_json(eq);
    e["quotient_L"] = to_json(ql);
    bool ok = trop.pass && eq.pass && ql.pass;
    if (inv) {
      const SampleReport qg = check_quotient_compatibility(refined, QuotientGroup::Gamma, cfg.samples, cfg.seed);
      e["quotient_Gamma"] = to_json(qg);
      ok = ok && qg.pass;
    }
    return ok;
  });

  run(Stage::Compare, [&](nlohmann::json& e) {
    const GHStructure gh = gh_structure(input);
    const ComparisonResult torus = compare(na_translation_lattice(na, input.phi), gh);
    const Rat expected = Rat(refined.nu) * Rat(refined.nu);
    e["gh"] = to_json(gh);
    e["torus"] = to_json(torus);
    e["expected_scale_sq"] = to_string(expected);
    bool ok = torus.matched && torus.scale_sq == expected;
    ComparisonResult final_result = torus;
    if (inv) {
      const ComparisonResult kummer = kummer_compare(na, gh);
      e["kummer"] = to_json(kummer);
      ok = ok && kummer.matched && kummer.scale_sq == expected;
      final_result = kummer;
    }
    summary["comparison"] = to_json(final_result);
    summary["matched"] = ok;
    return ok;
  });

  if (cfg.svg) {
    run(Stage::Render, [&](nlohmann::json& e) {
      const Window w = cfg.window ? *cfg.window : reference_window(refined.complex);
      const Drawing fine = render_complex(refined.complex, w, "refined decomposition");
      const Drawing coarse = render_complex(canonical_complex(ig.decomp), w, "canonical decomposition");
      result.svgs.emplace_back("refined.svg", fine.svg);
      result.svgs.emplace_back("canonical.svg", coarse.svg);
      e["cells"] = fine.cells;
      e["highlighted_fixed_points"] = fine.highlighted;
      return true;
    });
  }

  report["stages"] = std::move(stages);
  report["summary"] = std::move(summary);
  report["exit_code"] = result.exit_code;
  return result;
}

}  // namespace iams
