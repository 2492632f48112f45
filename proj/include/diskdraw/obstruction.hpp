#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diskdraw/canvas.hpp"

namespace diskdraw {

enum class Verdict { Yes, No, Boundary };
const char* to_string(Verdict v);

/// Black/white membership oracle for a target set.
struct Coloring {
  std::function<Shade(Point)> classify;
  std::string description;
};

struct StageFamily {
  std::vector<Point> blacks;
  std::vector<Point> whites;
  int stage_index = 0;
};

/// Every open unit disk touching T also touches S. Yes/No need a margin of tau
/// on both sides; anything in between is Boundary.
Verdict encircles(std::span<const Point> S, std::span<const Point> T, Tolerance tol = {});

/// Largest radius of an open disk that contains t and misses S (infinity when
/// t is outside the convex hull of S). S encircles {t} iff this is below 1.
double critical_radius(std::span<const Point> S, Point t);

/// Radius of the largest open disk missing S whose boundary passes through t
/// (infinity when t is not strictly inside the convex hull of S). Always
/// between critical_radius / 2 and critical_radius.
double touching_radius(std::span<const Point> S, Point t);

/// Max touching radius over T.
double encirclement_clearance(std::span<const Point> S, std::span<const Point> T);

enum class FailureKind { MisclassifiedPoint, BoundaryPoint, EncirclementFailed };
const char* to_string(FailureKind k);

struct StageCheck {
  int stage = 0;
  std::string kind;  // "colors" or "enc"
  Verdict verdict = Verdict::Boundary;
  double clearance = 0.0;  // max touching radius
  double critical = 0.0;   // max critical radius
};

struct DescentFailure {
  FailureKind kind;
  int stage = 0;
  std::string detail;
};

struct DescentCertificate {
  std::vector<StageFamily> stages;
  std::vector<StageCheck> checks;
  std::optional<DescentFailure> failure;
  bool valid() const { return !failure.has_value(); }
};

/// For each consecutive pair of stages: blacks of stage i encircle whites of
/// stage i+1 and whites of stage i encircle blacks of stage i+1.
std::vector<StageCheck> encirclement_checks(const std::vector<StageFamily>& stages,
                                            Tolerance tol = {});

/// Checks every stage's colours, then for each consecutive pair that blacks of
/// stage i encircle whites of stage i+1 and whites of stage i encircle blacks of
/// stage i+1. Failures are reported in the certificate, not thrown.
DescentCertificate descent_verify(const Coloring& coloring, std::vector<StageFamily> stages,
                                  Tolerance tol = {});

/// Stage i (1-based) is the eight chessboard points at scale r / 2^(i-1).
std::vector<StageFamily> chessboard_stages(double r, double theta, int depth);

struct StageParams {
  int n = 12;
  double L = 3.0;
  double s = 1e-3;
  double t = std::pow(1e-3, 1.5);
};

struct FiveCircleRadii {
  double R_a = 0.0;  // also R_b
  double R_c = 0.0;
  double R_d = 0.0;
  double R_e = 0.0;
  double max() const;
};

/// Circumradii of the circles through the stage-0 white points and the ray
/// points O1, O2 at distance L. R_d and R_e use the exact trapezoid bases.
FiveCircleRadii five_circle_radii(const StageParams& p);

/// Four points per ray and stage: at L -/+ s_i along the ray and t_i to either
/// side, with s_i = s / 2^i and t_i = t * (s_i / s)^1.5. Ray j sits at
/// phase + (j-1)*2pi/n; the black side of ray 1 is counter-clockwise when
/// `first_ccw` is set and sides alternate from ray to ray.
std::vector<StageFamily> dissection_stages(const StageParams& p, Point apex, double phase,
                                           int depth, bool first_ccw = true,
                                           Tolerance tol = {});

struct DissectionSpec {
  Point apex;
  int n = 4;
  double a = 0.0;
  double b = 1.0;
  double d = 1.0;
  double phase = 0.0;
  bool first_ccw = true;
};

/// Midpoint of (a, min(b, cot(pi/n))).
double default_stage_L(const DissectionSpec& spec);

struct DissectionCheck {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

/// Samples the interior of both rectangles of every ray on a jittered grid
/// (shrunk by tau) and checks one is all black, the other all white.
DissectionCheck dissection_sample_check(const Coloring& coloring, const DissectionSpec& spec,
                                        int samples_per_rect, Tolerance tol = {});

/// cot(pi/n); a total n-dissection starting below it obstructs drawability.
double undrawability_bound(int n);

}  // namespace diskdraw
