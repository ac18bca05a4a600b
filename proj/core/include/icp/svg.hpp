#pragma once

#include <string>
#include <vector>

#include "icp/complex.hpp"
#include "icp/layout.hpp"

namespace icp {

struct SvgStyle {
  double margin = 0.5;          // extra space around the bounding box
  double stroke_width = 0.02;   // in layout units
  bool triangulation = false;   // draw the corner-triangle overlay
  bool disk_frame = true;       // draw the unit circle for disk layouts
  std::vector<double> heat;     // optional per-vertex fill values
};

// Deterministic SVG 1.1 document: same input gives byte-identical output.
// All coordinates are written with four decimals. An empty layout yields a
// document with a viewBox and nothing else. The complex is only needed for
// the triangulation overlay and may be null otherwise.
std::string render_svg(const PatternLayout& layout,
                       const CellComplex* cc = nullptr,
                       const SvgStyle& style = {});

// Log-log plot of a positive series against 1 + t, with decade grid lines.
std::string render_loglog_plot(const std::vector<double>& times,
                               const std::vector<double>& values,
                               const std::string& label = "");

}  // namespace icp
