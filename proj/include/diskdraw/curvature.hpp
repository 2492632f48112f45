#pragma once

#include <vector>

#include "diskdraw/path.hpp"

namespace diskdraw {

struct RollingFailure {
  double s = 0.0;   // arc length of the sample
  int side = 0;     // +1 left of the direction of travel, -1 right
  Point offending;  // closest path point inside the disk
};

struct CurvatureReport {
  double max_unsigned_curvature = 0.0;
  std::vector<std::pair<std::size_t, double>> per_piece;
  std::vector<std::size_t> corners;  // junctions with a tangent jump
  bool rolling_disk_ok = true;
  std::vector<RollingFailure> failures;
  std::size_t samples = 0;
  double min_clearance = 0.0;  // smallest disk-to-curve distance seen
};

/// Analytic curvature per piece: 0 for segments, 1/R for arcs. Corners are
/// listed but never contribute to the maximum.
CurvatureReport path_max_curvature(const PiecewisePath& path);

/// At samples spaced at most `step` apart (plus both one-sided normals at every
/// junction), the open unit disks centred at gamma(s0) +- n(s0) must contain no
/// curve point gamma(s) with 0 < |s - s0| < eps.
CurvatureReport rolling_disk_check(const PiecewisePath& path, double step = 0.05,
                                   double eps = 0.5);

}  // namespace diskdraw
