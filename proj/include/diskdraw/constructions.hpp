#pragma once

#include <map>
#include <string>
#include <vector>

#include "diskdraw/obstruction.hpp"
#include "diskdraw/path.hpp"

namespace diskdraw {

/// Black on [-c,0]^2 and [0,c]^2, Boundary within tau of their edges.
Coloring chessboard_coloring(double c, Tolerance tol = {});

/// The two unit squares with the shared corner filleted: the square
/// [-rho,rho]^2 is cut out and the disks of radius rho centred at (rho, rho)
/// and (-rho, -rho) are put back.
Coloring rounded_chessboard_coloring(double rho, Tolerance tol = {});

struct SnakeGeometry {
  double r = 1.001;
  std::map<std::string, Point> points;  // A B C D E F M N O E' F' S T
  std::vector<double> ray_angles;       // l1..l12, clockwise from l1
  std::map<std::string, Arc> arcs;      // a1..a8
  PiecewisePath boundary;               // counter-clockwise

  Point point(const std::string& name) const { return points.at(name); }
};

/// Builds the curve from the kite ABDC, its three r-circles and the arcs tangent
/// to consecutive rays, then closes it with its 180 degree rotation about O.
SnakeGeometry build_snake(double r = 1.001);

/// Even-odd membership in the region bounded by the snake curve.
Coloring snake_coloring(const SnakeGeometry& geom, Tolerance tol = {});

/// Total 12-dissection at (2.964, 3.735) with thickness 0.793 about O.
DissectionSpec snake_dissection_spec(const SnakeGeometry& geom);

/// One pencil stroke: in every black wedge, the centre of the unit disk tangent
/// to both rays slides outward along each ray for `reach`.
DrawingScript sharp_ndissected_script(int n, double reach = 21.0);

/// Spec matching sharp_ndissected_script: rays at angle 0 + k*2pi/n with the
/// first ray's black side counter-clockwise.
DissectionSpec sharp_dissection_spec(int n, double a, double b, double d);

/// Colouring of a script through eval_script.
Coloring script_coloring(const DrawingScript& script, Tolerance tol = {});

}  // namespace diskdraw
