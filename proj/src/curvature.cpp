#include "diskdraw/curvature.hpp"

#include <algorithm>
#include <limits>

namespace diskdraw {

CurvatureReport path_max_curvature(const PiecewisePath& path) {
  CurvatureReport rep;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const double k = std::abs(piece_signed_curvature(path.pieces()[i]));
    rep.per_piece.emplace_back(i, k);
    rep.max_unsigned_curvature = std::max(rep.max_unsigned_curvature, k);
  }
  rep.corners = path.corners();
  return rep;
}

namespace {

Point closest_on(const PathPiece& piece, Point x) {
  if (const auto* s = std::get_if<Segment>(&piece)) {
    const Point d = s->b - s->a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return s->a;
    return s->a + d * std::clamp(dot(x - s->a, d) / len2, 0.0, 1.0);
  }
  const auto& a = std::get<Arc>(piece);
  const Point rel = x - a.center;
  if (norm(rel) > 0.0) {
    const double ang = std::atan2(rel.y, rel.x);
    if (a.covers_angle(ang)) return a.point_at_angle(ang);
  }
  const Point p0 = a.start_point(), p1 = a.end_point();
  return distance(x, p0) <= distance(x, p1) ? p0 : p1;
}

}  // namespace

CurvatureReport rolling_disk_check(const PiecewisePath& path, double step, double eps) {
  if (!(step > 0.0) || !(eps > 0.0))
    throw Error(ErrorCode::InvalidParameters, "step and eps must be positive");
  CurvatureReport rep = path_max_curvature(path);
  const double L = path.length();
  const auto& pieces = path.pieces();
  rep.min_clearance = std::numeric_limits<double>::infinity();

  auto check_disk = [&](double s0, Point center, int side) {
    double best = std::numeric_limits<double>::infinity();
    Point where;
    const double lo = s0 - eps, hi = s0 + eps;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      for (double shift : {-L, 0.0, L}) {
        const double a = path.offset(j) + shift;
        const double b = path.offset(j + 1) + shift;
        const double w0 = std::max(a, lo), w1 = std::min(b, hi);
        if (!(w1 > w0)) continue;
        const PathPiece part = sub_piece(pieces[j], w0 - a, w1 - a);
        const double d = piece_distance(center, part);
        if (d < best) {
          best = d;
          where = closest_on(part, center);
        }
      }
    }
    rep.min_clearance = std::min(rep.min_clearance, best);
    if (best < 1.0 - 1e-9) rep.failures.push_back({s0, side, where});
  };

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double len = piece_length(pieces[i]);
    const int m = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int k = 0; k <= m; ++k) {
      const double s = len * k / m;
      const Point p = piece_point(pieces[i], s);
      const Point n = perp(piece_tangent(pieces[i], s));
      const double s0 = path.offset(i) + s;
      check_disk(s0, p + n, +1);
      check_disk(s0, p - n, -1);
      ++rep.samples;
    }
  }
  rep.rolling_disk_ok = rep.failures.empty();
  return rep;
}

}  // namespace diskdraw
