#pragma once

// End-to-end run: decompose, integralize, refine, polarize, quotient, affine
// atlas, retraction checks, comparison with the Gram-matrix picture and
// optional rendering. Each stage has its own nonzero exit code.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iams/gh_picture.hpp"
#include "iams/polarize.hpp"
#include "iams/render.hpp"
#include "iams/retraction.hpp"

namespace iams {

enum class Stage : int {
  Decompose = 10,
  Integralize = 11,
  Refine = 12,
  Polarize = 13,
  Quotient = 14,
  Affine = 15,
  RetractCheck = 16,
  Compare = 17,
  Render = 18,
};

std::string stage_name(Stage s);

struct PipelineConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  Int nu_cap = 64;
  int refine_rounds = 4;
  bool svg = false;
  std::optional<Window> window;  ///< defaults to the bounding box of sigma_0
  bool timings = false;
};

struct PipelineResult {
  int exit_code = 0;
  nlohmann::json report;
  /// (file name, contents)
  std::vector<std::pair<std::string, std::string>> svgs;
};

/// Throws ValidationError for invalid data; every later failure is reported
/// through the stage exit codes.
PipelineResult run_pipeline(const DegenerationData& input, const PipelineConfig& config);

}  // namespace iams
