// Command-line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 invalid degeneration
// data, 3 malformed input or unreadable file, 10-18 failing pipeline stage
// (render/IO failures, including missing artifacts, use 18).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "iams/pipeline.hpp"

namespace fs = std::filesystem;
using namespace iams;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalidData = 2;
constexpr int kMalformed = 3;
constexpr int kRenderIO = static_cast<int>(Stage::Render);

struct Options {
  std::string input;
  std::string out_dir;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string window;
  long nu_cap = 64;
  int refine_rounds = 4;
  bool svg = false;
  bool timings = false;
};

struct Failure {
  int code;
  std::string message;
};

DegenerationData load_input(const Options& o) {
  if (o.input.empty()) throw Failure{kMalformed, "--input is required"};
  std::ifstream in(o.input);
  if (!in) throw Failure{kMalformed, "cannot read " + o.input};
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Failure{kMalformed, std::string("parse error: ") + e.what()};
  }
  try {
    return data_from_json(j);
  } catch (const InputError& e) {
    throw Failure{kMalformed, e.what()};
  }
}

nlohmann::json issues_json(const ValidationError& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& i : e.issues()) arr.push_back({{"kind", to_string(i.kind)}, {"detail", i.detail}});
  return arr;
}

ValidatedData load_valid(const Options& o) {
  const DegenerationData d = load_input(o);
  try {
    return validate(d);
  } catch (const ValidationError& e) {
    std::cout << nlohmann::json{{"valid", false}, {"issues", issues_json(e)}}.dump(2) << "\n";
    throw Failure{kInvalidData, e.what()};
  }
}

void write_file(const Options& o, const std::string& name, const std::string& contents) {
  if (o.out_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  std::ofstream out(fs::path(o.out_dir) / name, std::ios::binary);
  if (!out || !(out << contents)) throw Failure{kRenderIO, "cannot write " + (fs::path(o.out_dir) / name).string()};
}

int emit(const Options& o, const std::string& name, const nlohmann::json& j, bool pass) {
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  write_file(o, name + ".json", text);
  return pass ? kOk : kCheckFailed;
}

Window window_for(const Options& o, const PeriodicComplex& c) {
  if (o.window.empty()) return reference_window(c);
  try {
    return parse_window(o.window);
  } catch (const std::invalid_argument& e) {
    throw Failure{kMalformed, e.what()};
  }
}

RefinedDecomposition refined_from(const ValidatedData& data, const Options& o) {
  const IntegralizeResult ig = integralize(build_decomposition(data), Int(o.nu_cap));
  RefineOptions opts;
  opts.rounds = o.refine_rounds;
  return refine(ig.decomp, ig.nu, opts);
}

int cmd_validate(const Options& o) {
  const DegenerationData d = load_input(o);
  try {
    validate(d);
  } catch (const ValidationError& e) {
    std::cout << nlohmann::json{{"valid", false}, {"issues", issues_json(e)}}.dump(2) << "\n";
    return kInvalidData;
  }
  std::cout << nlohmann::json{{"valid", true}, {"issues", nlohmann::json::array()}}.dump(2) << "\n";
  return kOk;
}

int cmd_decompose(const Options& o) {
  const ValidatedData data = load_valid(o);
  const ConeDecomposition dec = build_decomposition(data);
  const AdmissibilityReport adm = check_gamma_admissible(dec);
  nlohmann::json j = to_json(dec);
  j["admissible"] = adm.pass;
  if (o.svg) {
    const PeriodicComplex c = canonical_complex(dec);
    write_file(o, "canonical.svg", render_complex(c, window_for(o, c), "canonical decomposition").svg);
  }
  return emit(o, "decomposition", j, adm.pass);
}

int cmd_refine(const Options& o) {
  const RefinedDecomposition r = refined_from(load_valid(o), o);
  const ConditionReport cond = verify_conditions(r);
  nlohmann::json j = to_json(r);
  j["conditions"] = to_json(cond);
  if (o.svg) write_file(o, "refined.svg", render_complex(r.complex, window_for(o, r.complex), "refined decomposition").svg);
  return emit(o, "refined", j, cond.all());
}

int cmd_polarize(const Options& o) {
  const RefinedDecomposition r = refined_from(load_valid(o), o);
  try {
    const PolarizationFunction pf = construct(r);
    const PolarizationReport rep = check(pf, o.samples, o.seed);
    return emit(o, "polarization", {{"function", to_json(pf)}, {"check", to_json(rep)}}, rep.pass);
  } catch (const Infeasible& e) {
    return emit(o, "polarization", {{"error", e.what()}, {"iis", e.iis()}}, false);
  }
}

int cmd_quotient(const Options& o) {
  const RefinedDecomposition r = refined_from(load_valid(o), o);
  const SimplicialComplex sc = dual_complex(r);
  const QuotientComplex qt = quotient(sc, QuotientGroup::L);
  const QuotientComplex qs = quotient(sc, QuotientGroup::Gamma);
  const CoveringReport cov = covering_report(r.complex);
  return emit(o, "quotient", {{"complex", to_json(sc)}, {"torus", to_json(qt)}, {"sphere", to_json(qs)}, {"covering", to_json(cov)}},
              cov.pass());
}

int cmd_affine(const Options& o) {
  const NAReport na = na_report(refined_from(load_valid(o), o));
  return emit(o, "affine", to_json(na), na.pass());
}

int cmd_retract_check(const Options& o) {
  const ValidatedData data = load_valid(o);
  const RefinedDecomposition r = refined_from(data, o);
  const SampleReport trop = check_tropicalization(r, o.samples, o.seed);
  const SampleReport eq = check_equivariance(r, o.samples, o.seed);
  const SampleReport ql = check_quotient_compatibility(r, QuotientGroup::L, o.samples, o.seed);
  const SampleReport qg = check_quotient_compatibility(r, QuotientGroup::Gamma, o.samples, o.seed);
  nlohmann::json j = {{"tropicalization", to_json(trop)},
                      {"equivariance", to_json(eq)},
                      {"quotient_L", to_json(ql)},
                      {"quotient_Gamma", to_json(qg)}};
  return emit(o, "retract_check", j, trop.pass && eq.pass && ql.pass && qg.pass);
}

int cmd_compare(const Options& o) {
  const DegenerationData input = load_input(o);
  const ValidatedData data = load_valid(o);
  const RefinedDecomposition r = refined_from(data, o);
  const NAReport na = na_report(r);
  GHStructure gh;
  try {
    gh = gh_structure(input);
  } catch (const NotPrincipal& e) {
    return emit(o, "compare", {{"error", e.what()}}, false);
  }
  const ComparisonResult torus = compare(na_translation_lattice(na, input.phi), gh);
  nlohmann::json j = {{"gh", to_json(gh)}, {"torus", to_json(torus)}, {"nu", r.nu.get_str()}};
  bool ok = torus.matched;
  if (data.has_involution()) {
    const ComparisonResult kummer = kummer_compare(na, gh);
    j["kummer"] = to_json(kummer);
    ok = ok && kummer.matched;
  }
  return emit(o, "compare", j, ok);
}

PipelineConfig pipeline_config(const Options& o) {
  PipelineConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.nu_cap = o.nu_cap;
  cfg.refine_rounds = o.refine_rounds;
  cfg.svg = o.svg;
  cfg.timings = o.timings;
  if (!o.window.empty()) {
    try {
      cfg.window = parse_window(o.window);
    } catch (const std::invalid_argument& e) {
      throw Failure{kMalformed, e.what()};
    }
  }
  return cfg;
}

int cmd_pipeline(const Options& o) {
  const DegenerationData input = load_input(o);
  load_valid(o);
  const PipelineResult res = run_pipeline(input, pipeline_config(o));
  const std::string text = res.report.dump(2) + "\n";
  std::cout << text;
  write_file(o, "report.json", text);
  for (const auto& [name, svg] : res.svgs) write_file(o, name, svg);
  return res.exit_code;
}

int cmd_render(const Options& o) {
  if (o.out_dir.empty()) throw Failure{kRenderIO, "MissingArtifacts: --out-dir with a pipeline report is required"};
  const fs::path report_path = fs::path(o.out_dir) / "report.json";
  std::ifstream in(report_path);
  if (!in) throw Failure{kRenderIO, "MissingArtifacts: " + report_path.string() + " not found; run the pipeline first"};
  nlohmann::json report;
  try {
    in >> report;
  } catch (const nlohmann::json::parse_error& e) {
    throw Failure{kRenderIO, std::string("MissingArtifacts: unreadable report: ") + e.what()};
  }
  if (!report.contains("input")) throw Failure{kRenderIO, "MissingArtifacts: report has no input section"};
  const DegenerationData input = data_from_json(report["input"]);
  Options effective = o;
  if (report.contains("config")) {
    const auto& c = report["config"];
    if (c.contains("nu_cap")) effective.nu_cap = std::stol(c["nu_cap"].get<std::string>());
    if (c.contains("refine_rounds")) effective.refine_rounds = c["refine_rounds"].get<int>();
  }
  const RefinedDecomposition r = refined_from(validate(input), effective);
  const Window w = window_for(o, r.complex);
  const Drawing fine = render_complex(r.complex, w, "refined decomposition");
  const Drawing coarse = render_complex(canonical_complex(r.complex.base()), w, "canonical decomposition");
  write_file(o, "refined.svg", fine.svg);
  write_file(o, "canonical.svg", coarse.svg);
  std::cout << nlohmann::json{{"cells", fine.cells}, {"highlighted_fixed_points", fine.highlighted},
                              {"files", {"refined.svg", "canonical.svg"}}}
                   .dump(2)
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral affine structures from degeneration data"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", o.input, "degeneration data (JSON)");
    sub->add_option("--out-dir", o.out_dir, "directory for reports and SVG files");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--samples", o.samples, "number of random samples")->check(CLI::NonNegativeNumber);
    sub->add_option("--window", o.window, "render window xlo,ylo,xhi,yhi");
    sub->add_option("--nu-cap", o.nu_cap, "largest base change tried by integralize")->check(CLI::PositiveNumber);
    sub->add_option("--refine-rounds", o.refine_rounds, "doubling rounds allowed in refine")->check(CLI::NonNegativeNumber);
    sub->add_flag("--svg", o.svg, "also write SVG drawings");
    sub->add_flag("--timings", o.timings, "record stage timings (pipeline)");
    return sub;
  };
  const std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands = {
      {add("validate", "check the degeneration data"), cmd_validate},
      {add("decompose", "canonical Gamma-admissible decomposition"), cmd_decompose},
      {add("refine", "integralize and refine to a smooth semistable decomposition"), cmd_refine},
      {add("polarize", "construct and check a twisted polarization function"), cmd_polarize},
      {add("quotient", "torus and sphere quotient complexes"), cmd_quotient},
      {add("affine", "affine atlases, holonomy and radiance obstructions"), cmd_affine},
      {add("retract-check", "retraction identities on random monomial points"), cmd_retract_check},
      {add("compare", "compare with the Gram-matrix structure"), cmd_compare},
      {add("pipeline", "run every stage"), cmd_pipeline},
      {add("render", "SVG drawings from pipeline artifacts in --out-dir"), cmd_render},
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
