#pragma once

#include <iosfwd>
#include <optional>

#include "brw/brw_run.hpp"
#include "brw/geometry.hpp"

namespace brw {

/// Hyperbolic-disk drawing of a ball: radius by BFS depth (tanh-compressed),
/// angles by recursive slot subdivision following the planar rotation order.
/// Optional overlays: sector colours and a trace (visited vertices and edges).
struct SvgOptions {
  double size_px = 900.0;
  int max_depth = -1;  // -1: full ball
  const SectorPartition* sectors = nullptr;
  const Trace* trace = nullptr;
};

void write_ball_svg(std::ostream& os, const CayleyBall& ball, const SvgOptions& options = {});

}  // namespace brw
