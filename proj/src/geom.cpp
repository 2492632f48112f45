#include "diskdraw/geom.hpp"

#include <algorithm>
#include <limits>

namespace diskdraw {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::InvalidTrapezoid: return "InvalidTrapezoid";
    case ErrorCode::EmptyObstacleSet: return "EmptyObstacleSet";
    case ErrorCode::InvalidPrimitive: return "InvalidPrimitive";
    case ErrorCode::NonUnitNormal: return "NonUnitNormal";
    case ErrorCode::NonConvexInput: return "NonConvexInput";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::RadiiTooLarge: return "RadiiTooLarge";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::ConstructionInconsistent: return "ConstructionInconsistent";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(a, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

Tolerance::Tolerance(double value) : value_(value) {
  if (!(value > 0.0 && value < 1e-3))
    throw Error(ErrorCode::InvalidParameters, "tolerance must lie in (0, 1e-3)");
}

double Arc::sweep() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (ccw) {
    const double d = wrap_angle(end - start);
    return d == 0.0 ? two_pi : d;
  }
  const double d = wrap_angle(start - end);
  return d == 0.0 ? -two_pi : -d;
}

bool Arc::covers_angle(double a) const {
  const double span = std::abs(sweep());
  const double off = ccw ? wrap_angle(a - start) : wrap_angle(start - a);
  return off <= span + 1e-15;
}

void validate(const Primitive& prim) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SinglePoint>) {
          if (!is_finite(p.p)) throw Error(ErrorCode::InvalidPrimitive, "non-finite point");
        } else if constexpr (std::is_same_v<T, Segment>) {
          if (!is_finite(p.a) || !is_finite(p.b))
            throw Error(ErrorCode::InvalidPrimitive, "non-finite segment");
          if (p.a == p.b) throw Error(ErrorCode::InvalidPrimitive, "segment endpoints coincide");
        } else if constexpr (std::is_same_v<T, Arc>) {
          if (!is_finite(p.center) || !std::isfinite(p.start) || !std::isfinite(p.end))
            throw Error(ErrorCode::InvalidPrimitive, "non-finite arc");
          if (!(p.radius > 0.0) || !std::isfinite(p.radius))
            throw Error(ErrorCode::InvalidPrimitive, "arc radius must be positive");
        } else if constexpr (std::is_same_v<T, OffsetHalfPlane>) {
          if (std::abs(norm(p.normal) - 1.0) > 1e-12)
            throw Error(ErrorCode::NonUnitNormal, "half-plane normal must have unit length");
          if (!std::isfinite(p.offset) || !std::isfinite(p.margin))
            throw Error(ErrorCode::InvalidPrimitive, "non-finite half-plane");
          if (p.margin < 1.0)
            throw Error(ErrorCode::InvalidPrimitive, "half-plane margin must be at least 1");
        }
      },
      prim);
}

double dist_to_segment(Point x, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(x, a);
  const double t = std::clamp(dot(x - a, d) / len2, 0.0, 1.0);
  return distance(x, a + t * d);
}

namespace {

double dist_to_arc(Point x, const Arc& arc) {
  const Point rel = x - arc.center;
  const double r = norm(rel);
  if (r == 0.0) return arc.radius;
  if (arc.covers_angle(std::atan2(rel.y, rel.x))) return std::abs(r - arc.radius);
  return std::min(distance(x, arc.start_point()), distance(x, arc.end_point()));
}

}  // namespace

double dist_to_primitive(Point x, const Primitive& prim) {
  return std::visit(
      [x](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SinglePoint>) {
          return distance(x, p.p);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return dist_to_segment(x, p.a, p.b);
        } else if constexpr (std::is_same_v<T, Arc>) {
          return dist_to_arc(x, p);
        } else if constexpr (std::is_same_v<T, OffsetHalfPlane>) {
          return std::max(0.0, p.offset + p.margin - dot(x, p.normal));
        } else {
          return 0.0;
        }
      },
      prim);
}

Circle circumcircle3(Point p, Point q, Point r, Tolerance tol) {
  const double scale =
      std::max({distance(p, q), distance(q, r), distance(r, p)});
  const Point u = q - p;
  const Point v = r - p;
  const double area2 = cross(u, v);
  if (scale == 0.0 || std::abs(area2) * 0.5 < tol.value() * scale * scale)
    throw Error(ErrorCode::CollinearPoints, "points are (nearly) collinear");
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const Point rel{(v.y * uu - u.y * vv) / (2.0 * area2), (u.x * vv - v.x * uu) / (2.0 * area2)};
  return {p + rel, norm(rel)};
}

double trapezoid_circumradius(double a, double b, double h) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(h)) || a < 0.0 || !(a < b) ||
      !(h > 0.0))
    throw Error(ErrorCode::InvalidTrapezoid, "require 0 <= a < b and h > 0");
  const double half = 0.5 * (b - a);
  const double c2 = half * half + h * h;
  return std::sqrt(c2) * std::sqrt(a * b + c2) / (2.0 * h);
}

double clearance_at(Point x, std::span<const Point> obstacles) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& s : obstacles) best = std::min(best, distance(x, s));
  return best;
}

namespace {

constexpr double kInvPhi = 0.6180339887498949;

// Golden-section maximisation of g on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(F&& g, double lo, double hi, int iterations) {
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double gc = g(c), gd = g(d);
  for (int i = 0; i < iterations; ++i) {
    if (gc >= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - kInvPhi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + kInvPhi * (hi - lo);
      gd = g(d);
    }
  }
  return gc >= gd ? std::pair{c, gc} : std::pair{d, gd};
}

}  // namespace

EmptyCircle constrained_largest_empty_circle(std::span<const Point> obstacles, Point anchor,
                                             double radius) {
  if (obstacles.empty()) throw Error(ErrorCode::EmptyObstacleSet, "no obstacles");
  if (!(radius >= 0.0) || !std::isfinite(radius))
    throw Error(ErrorCode::InvalidParameters, "constraint radius must be finite and >= 0");

  const double inside_slack = radius * (1.0 + 1e-12);
  const double f0 = clearance_at(anchor, obstacles);

  // Obstacles farther than f0 + 2*radius from the anchor are never nearest.
  std::vector<Point> near;
  const double reach = (f0 + 2.0 * radius) * (1.0 + 1e-9);
  for (const Point& s : obstacles)
    if (distance(s, anchor) <= reach) near.push_back(s);
  obstacles = near;

  EmptyCircle best{anchor, f0};
  auto consider = [&](Point x) {
    if (!is_finite(x) || distance(x, anchor) > inside_slack) return;
    const double f = clearance_at(x, obstacles);
    if (f > best.clearance) best = {x, f};
  };

  const std::size_t n = obstacles.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point away = anchor - obstacles[i];
    const double len = norm(away);
    consider(len > 0.0 ? anchor + away * (radius / len) : anchor + Point{radius, 0.0});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point d = obstacles[j] - obstacles[i];
      const double len = norm(d);
      if (len == 0.0) continue;
      const Point mid = (obstacles[i] + obstacles[j]) * 0.5;
      const Point dir = perp(d) / len;
      const Point w = mid - anchor;
      const double bq = dot(dir, w);
      const double disc = bq * bq - (dot(w, w) - radius * radius);
      if (disc < 0.0) continue;
      const double root = std::sqrt(disc);
      consider(mid + dir * (-bq + root));
      consider(mid + dir * (-bq - root));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        try {
          consider(circumcircle3(obstacles[i], obstacles[j], obstacles[k]).center);
        } catch (const Error&) {
          // collinear or coincident triple: no finite Voronoi vertex
        }
      }

  // Polish along each axis inside a shrinking window; only strict gains count.
  double window = 0.05 * radius;
  for (int round = 0; round < 4 && window > 0.0; ++round, window *= 0.5) {
    for (int axis = 0; axis < 2; ++axis) {
      const Point dir = axis == 0 ? Point{1.0, 0.0} : Point{0.0, 1.0};
      const Point w = best.center - anchor;
      const double bq = dot(dir, w);
      const double disc = bq * bq - (dot(w, w) - radius * radius);
      if (disc < 0.0) continue;
      const double root = std::sqrt(disc);
      const double lo = std::max(-bq - root, -window);
      const double hi = std::min(-bq + root, window);
      if (!(hi > lo)) continue;
      const Point base = best.center;
      auto g = [&](double lambda) { return clearance_at(base + dir * lambda, obstacles); };
      const auto [lambda, value] = golden_max(g, lo, hi, 60);
      if (value > best.clearance * (1.0 + 1e-12) + 1e-300) best = {base + dir * lambda, value};
    }
  }
  return best;
}

}  // namespace diskdraw
