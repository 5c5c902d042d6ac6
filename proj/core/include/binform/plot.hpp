#pragma once

#include <array>
#include <string>
#include <vector>

#include "binform/forms.hpp"

namespace binform {

struct PlotSpec {
  double level = 1.0;
  double window = 2.0;  // half-width of the square [-window, window]^2
  int samples = 400;    // grid nodes per axis
};

/// Throws InvalidArgument unless samples >= 16, window > 0 and level > 0.
void validate(const PlotSpec& spec);

struct Segment {
  double x0, y0, x1, y1;
};

struct Polyline {
  std::vector<std::array<double, 2>> points;
  bool closed = false;  // first point repeated at the end when closed
};

struct LevelSet {
  std::vector<Segment> segments;
  std::vector<Polyline> polylines;

  bool empty() const noexcept { return segments.empty(); }
  /// Nonempty and every polyline is a closed loop inside the window.
  bool all_closed() const;
};

/// Marching squares for |F(x,y)| = level on a samples x samples grid with
/// linear interpolation along cell edges. Saddle cells are split using the
/// value at the cell centre. Output order depends only on the spec.
LevelSet level_set(const BinaryForm& form, const PlotSpec& spec);

/// "x0,y0,x1,y1" header followed by one segment per line.
std::string to_csv(const LevelSet& set);
/// Standalone SVG with one <polyline> per joined curve.
std::string to_svg(const LevelSet& set, const PlotSpec& spec);

}  // namespace binform
