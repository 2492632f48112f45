#include "diskdraw/constructions.hpp"

#include <algorithm>

namespace diskdraw {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// Signed distance to the axis-aligned box [lo, hi]; negative inside.
double box_sd(Point p, Point lo, Point hi) {
  const Point c = (lo + hi) * 0.5;
  const Point h = (hi - lo) * 0.5;
  const double qx = std::abs(p.x - c.x) - h.x;
  const double qy = std::abs(p.y - c.y) - h.y;
  return std::hypot(std::max(qx, 0.0), std::max(qy, 0.0)) + std::min(std::max(qx, qy), 0.0);
}

Shade shade_of(double sd, Tolerance tol) {
  if (std::abs(sd) <= tol.value()) return Shade::Boundary;
  return sd < 0.0 ? Shade::Black : Shade::White;
}

}  // namespace

Coloring chessboard_coloring(double c, Tolerance tol) {
  if (!(c > 0.0)) throw Error(ErrorCode::InvalidParameters, "side must be positive");
  return {[c, tol](Point p) {
            const double sd = std::min(box_sd(p, {0.0, 0.0}, {c, c}), box_sd(p, {-c, -c}, {0.0, 0.0}));
            return shade_of(sd, tol);
          },
          "chessboard c=" + std::to_string(c)};
}

Coloring rounded_chessboard_coloring(double rho, Tolerance tol) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::InvalidParameters, "need 0 < rho < 1");
  return {[rho, tol](Point p) {
            const double squares =
                std::min(box_sd(p, {0.0, 0.0}, {1.0, 1.0}), box_sd(p, {-1.0, -1.0}, {0.0, 0.0}));
            const double cut = std::max(squares, -box_sd(p, {-rho, -rho}, {rho, rho}));
            const double d1 = distance(p, {rho, rho}) - rho;
            const double d3 = distance(p, {-rho, -rho}) - rho;
            return shade_of(std::min({cut, d1, d3}), tol);
          },
          "rounded chessboard rho=" + std::to_string(rho)};
}

namespace {

// Minor or major arc of the circle (center, radius) from p to q.
Arc arc_between(Point center, double radius, Point p, Point q, bool major) {
  const double a0 = std::atan2(p.y - center.y, p.x - center.x);
  const double a1 = std::atan2(q.y - center.y, q.x - center.x);
  const bool ccw_is_minor = wrap_angle(a1 - a0) <= std::numbers::pi;
  return Arc{center, radius, a0, a1, major != ccw_is_minor};
}

struct RayTangent {
  Point center;
  Point on_first;
  Point on_second;
};

// Circle of radius R tangent to the rays at angles a and b (wedge < pi).
RayTangent tangent_to_rays(double a, double b, double R) {
  const Point bis = unit(a) + unit(b);
  const Point dir = bis / norm(bis);
  const double half = 0.5 * std::acos(std::clamp(dot(unit(a), unit(b)), -1.0, 1.0));
  const double along = R / std::tan(half);
  return {dir * (R / std::sin(half)), unit(a) * along, unit(b) * along};
}

}  // namespace

SnakeGeometry build_snake(double r) {
  if (!(r > 1.0 && r <= 1.1)) throw Error(ErrorCode::InvalidParameters, "need 1 < r <= 1.1");
  const double sqrt3 = std::sqrt(3.0);

  // Kite ABDC symmetric about the +y axis through O.
  const double AB = sqrt3 * r / std::cos(15 * kDeg);
  const double AE = AB - r;
  const double OA = AE / std::cos(75 * kDeg);
  const double OE = AE / std::tan(15 * kDeg);
  const Point A{0.0, OA};
  const Point E = unit(105 * kDeg) * OE;
  const Point B = A + unit(195 * kDeg) * AB;
  const Point C{-B.x, B.y};
  const Point D{0.0, B.y - r};
  const Point M = (B + D) * 0.5;
  const Point N = (C + D) * 0.5;
  const Point F{-E.x, E.y};

  std::vector<double> rays;
  for (int k = 1; k <= 12; ++k) rays.push_back((105.0 - 30.0 * (k - 1)) * kDeg);
  auto ray = [&](int k) { return rays[k - 1]; };

  const double far = r / std::tan(15 * kDeg);
  const Point Ep = unit(ray(1)) * far;
  const Point Fp = unit(ray(2)) * far;
  const Point S = unit(ray(11)) * far;
  const Point T = unit(ray(5)) * far;

  const RayTangent t4 = tangent_to_rays(ray(3), ray(12), r);
  const RayTangent t5 = tangent_to_rays(ray(11), ray(4), r);
  const RayTangent t6 = tangent_to_rays(ray(12), ray(1), r);
  const RayTangent t7 = tangent_to_rays(ray(3), ray(4), r);
  const RayTangent t8 = tangent_to_rays(ray(2), ray(5), far);

  std::map<std::string, Arc> arcs;
  arcs["a1"] = arc_between(B, r, E, M, false);
  arcs["a2"] = arc_between(D, r, M, N, true);
  arcs["a3"] = arc_between(C, r, N, F, false);
  arcs["a4"] = arc_between(t4.center, r, t4.on_first, t4.on_second, false);
  arcs["a5"] = arc_between(t5.center, r, t5.on_first, t5.on_second, false);
  arcs["a6"] = arc_between(t6.center, r, t6.on_first, t6.on_second, true);
  arcs["a7"] = arc_between(t7.center, r, t7.on_second, t7.on_first, true);
  arcs["a8"] = arc_between(t8.center, far, t8.on_first, t8.on_second, true);

  auto check = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::ConstructionInconsistent, what);
  };
  check(distance(t6.on_second, Ep) < 1e-9, "a6 does not touch l1 at E'");
  check(distance(t8.on_first, Fp) < 1e-9, "a8 does not touch l2 at F'");
  check(distance(t8.on_second, T) < 1e-9, "a8 does not touch l5 at T");
  check(std::abs(B.x + sqrt3 * r) < 1e-9, "|BC| differs from 2*sqrt(3)*r");
  check(std::abs(distance(B, E) - r) < 1e-9, "E is not on the circle about B");

  // S -> a5 -> a7 -> a4 -> a6 -> a1 a2 a3 -> a8 -> T, joined by ray segments.
  std::vector<PathPiece> half{
      Segment{S, t5.on_first},          arcs["a5"], Segment{t5.on_second, t7.on_second},
      arcs["a7"],                       Segment{t7.on_first, t4.on_first},
      arcs["a4"],                       Segment{t4.on_second, t6.on_first},
      arcs["a6"],                       Segment{Ep, E},
      arcs["a1"],                       arcs["a2"],
      arcs["a3"],                       Segment{F, Fp},
      arcs["a8"]};
  std::vector<PathPiece> pieces = half;
  for (const auto& p : half) pieces.push_back(transformed(p, std::numbers::pi, {0.0, 0.0}));
  PiecewisePath path = PiecewisePath(std::move(pieces)).ccw();
  check(path.corners(1e-7).empty(), "snake curve has a corner");

  std::map<std::string, Point> pts{{"A", A},  {"B", B},   {"C", C},   {"D", D},  {"E", E},
                                   {"F", F},  {"M", M},   {"N", N},   {"O", {}}, {"E'", Ep},
                                   {"F'", Fp}, {"S", S}, {"T", T}};
  return SnakeGeometry{r, std::move(pts), std::move(rays), std::move(arcs), std::move(path)};
}

Coloring snake_coloring(const SnakeGeometry& geom, Tolerance tol) {
  const PiecewisePath path = geom.boundary;
  return {[path, tol](Point p) {
            if (path.distance(p) <= tol.value()) return Shade::Boundary;
            return path.encloses(p) ? Shade::Black : Shade::White;
          },
          "snake r=" + std::to_string(geom.r)};
}

DissectionSpec snake_dissection_spec(const SnakeGeometry& geom) {
  return DissectionSpec{geom.point("O"), 12, 2.964, 3.735, 0.793, geom.ray_angles.front(), true};
}

DrawingScript sharp_ndissected_script(int n, double reach) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::InvalidN, "n must be even and >= 4");
  if (!(reach > 0.0)) throw Error(ErrorCode::InvalidParameters, "reach must be positive");
  const double step = 2.0 * std::numbers::pi / n;
  std::vector<Primitive> centers;
  for (int j = 0; j < n; j += 2) {
    const double a = j * step;
    const double b = a + step;
    const Point c = unit(a + 0.5 * step) / std::sin(0.5 * step);
    centers.emplace_back(Segment{c, c + unit(a) * reach});
    centers.emplace_back(Segment{c, c + unit(b) * reach});
  }
  std::vector<Stroke> strokes;
  strokes.push_back({Tool::Pencil, CenterSet(std::move(centers))});
  return DrawingScript(DiskModel::Open, std::move(strokes));
}

DissectionSpec sharp_dissection_spec(int n, double a, double b, double d) {
  return DissectionSpec{{0.0, 0.0}, n, a, b, d, 0.0, true};
}

Coloring script_coloring(const DrawingScript& script, Tolerance tol) {
  return {[script, tol](Point p) { return eval_script(p, script, tol); }, "script"};
}

}  // namespace diskdraw
