#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace diskdraw {

enum class ErrorCode {
  CollinearPoints,
  InvalidTrapezoid,
  EmptyObstacleSet,
  InvalidPrimitive,
  NonUnitNormal,
  NonConvexInput,
  BoundaryPoint,
  InvalidParameters,
  RadiiTooLarge,
  InvalidN,
  ConstructionInconsistent,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr Point operator*(double k) const { return {x * k, y * k}; }
  constexpr Point operator/(double k) const { return {x / k, y / k}; }
  constexpr bool operator==(const Point&) const = default;
};

inline constexpr Point operator*(double k, Point p) { return p * k; }
inline constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point rotate(Point p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}
inline Point rotate_about(Point p, Point pivot, double angle) {
  return pivot + rotate(p - pivot, angle);
}
/// Left (counter-clockwise) perpendicular.
inline constexpr Point perp(Point p) { return {-p.y, p.x}; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Wraps an angle into [0, 2pi).
double wrap_angle(double a);

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Geometric comparison margin. Kept strictly inside (0, 1e-3).
class Tolerance {
 public:
  constexpr Tolerance() = default;
  explicit Tolerance(double value);
  constexpr double value() const { return value_; }

 private:
  double value_ = 1e-9;
};

// Center-set primitives.

struct SinglePoint {
  Point p;
};

struct Segment {
  Point a;
  Point b;
};

/// Circular arc from `start` to `end` (radians), swept counter-clockwise when
/// `ccw` is set and clockwise otherwise. Equal start and end angles denote the
/// full circle.
struct Arc {
  Point center;
  double radius = 1.0;
  double start = 0.0;
  double end = 0.0;
  bool ccw = true;

  /// Signed sweep, positive for counter-clockwise arcs.
  double sweep() const;
  double length() const { return std::abs(sweep()) * radius; }
  Point point_at_angle(double a) const { return center + radius * unit(a); }
  Point start_point() const { return point_at_angle(start); }
  Point end_point() const { return point_at_angle(end); }
  /// True when direction `a` lies on the arc's angular range.
  bool covers_angle(double a) const;
};

/// The set {z + lambda*normal : <z, normal> = offset, lambda >= margin}, i.e. the
/// closed half-plane <p, normal> >= offset + margin. `strict` records the
/// variant with lambda > margin; its infimum distance is identical.
struct OffsetHalfPlane {
  Point normal{0.0, 1.0};
  double offset = 0.0;
  double margin = 1.0;
  bool strict = false;
};

struct WholePlane {};

using Primitive = std::variant<SinglePoint, Segment, Arc, OffsetHalfPlane, WholePlane>;

/// Throws InvalidPrimitive / NonUnitNormal when a primitive breaks its invariants.
void validate(const Primitive& prim);

/// Exact distance from `x` to the closest point of `prim`.
double dist_to_primitive(Point x, const Primitive& prim);

double dist_to_segment(Point x, Point a, Point b);

/// Circle through three points. Throws CollinearPoints when the triangle is
/// degenerate relative to its size.
Circle circumcircle3(Point p, Point q, Point r, Tolerance tol = {});

/// Circumradius of an isosceles trapezoid with parallel sides `a` < `b` and
/// height `h`. `a == 0` gives the isosceles triangle.
double trapezoid_circumradius(double a, double b, double h);

struct EmptyCircle {
  Point center;
  double clearance = 0.0;
};

/// min over s in S of |x - s|.
double clearance_at(Point x, std::span<const Point> obstacles);

/// Maximises the distance to the nearest obstacle over the closed disk
/// |x - anchor| <= radius. Candidates are exhaustive (Voronoi vertices inside the
/// disk, bisector/circle intersections, antipodal escapes, the anchor), followed
/// by a coordinate-wise golden-section polish.
EmptyCircle constrained_largest_empty_circle(std::span<const Point> obstacles, Point anchor,
                                             double radius);

}  // namespace diskdraw
