#pragma once

// Deterministic SVG drawings of a periodic complex in a rational window.

#include <stdexcept>
#include <string>

#include "iams/periodic_complex.hpp"

namespace iams {

class MissingArtifacts : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Window {
  Rat xlo, ylo, xhi, yhi;
};

/// "xlo,ylo,xhi,yhi" with rational entries; throws std::invalid_argument on an
/// empty or malformed window.
Window parse_window(const std::string& text);
/// Bounding box of sigma_0.
Window reference_window(const PeriodicComplex& complex);

struct Drawing {
  std::string svg;
  std::size_t cells = 0;        ///< cells meeting the window
  std::size_t highlighted = 0;  ///< F~ points inside the window
};

/// Cells meeting the window, sigma_0 outlined with its boundary edges labelled
/// by L-orbit (equal labels are glued in the torus), and F~ points marked.
Drawing render_complex(const PeriodicComplex& complex, const Window& window, const std::string& title);

/// Fixed-precision decimal used for SVG coordinates.
std::string decimal(const Rat& v, int digits = 3);

}  // namespace iams
