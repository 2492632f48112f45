#include "diskdraw/path.hpp"

#include <algorithm>
#include <limits>

namespace diskdraw {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Offset of direction `angle` from the arc start, measured along the sweep.
double arc_offset(const Arc& arc, double angle) {
  return arc.ccw ? wrap_angle(angle - arc.start) : wrap_angle(arc.start - angle);
}

double angle_of(Point v) { return std::atan2(v.y, v.x); }

}  // namespace

double piece_length(const PathPiece& piece) {
  return std::visit(overloaded{[](const Segment& s) { return distance(s.a, s.b); },
                               [](const Arc& a) { return a.length(); }},
                    piece);
}

Point piece_start(const PathPiece& piece) {
  return std::visit(overloaded{[](const Segment& s) { return s.a; },
                               [](const Arc& a) { return a.start_point(); }},
                    piece);
}

Point piece_end(const PathPiece& piece) {
  return std::visit(overloaded{[](const Segment& s) { return s.b; },
                               [](const Arc& a) { return a.end_point(); }},
                    piece);
}

Point piece_point(const PathPiece& piece, double s) {
  return std::visit(overloaded{[s](const Segment& seg) {
                                 const double len = distance(seg.a, seg.b);
                                 return len == 0.0 ? seg.a : seg.a + (seg.b - seg.a) * (s / len);
                               },
                               [s](const Arc& a) {
                                 const double sign = a.ccw ? 1.0 : -1.0;
                                 return a.point_at_angle(a.start + sign * s / a.radius);
                               }},
                    piece);
}

Point piece_tangent(const PathPiece& piece, double s) {
  return std::visit(overloaded{[](const Segment& seg) { return (seg.b - seg.a) / norm(seg.b - seg.a); },
                               [s](const Arc& a) {
                                 const double sign = a.ccw ? 1.0 : -1.0;
                                 return perp(unit(a.start + sign * s / a.radius)) * sign;
                               }},
                    piece);
}

double piece_signed_curvature(const PathPiece& piece) {
  return std::visit(overloaded{[](const Segment&) { return 0.0; },
                               [](const Arc& a) { return (a.ccw ? 1.0 : -1.0) / a.radius; }},
                    piece);
}

PathPiece sub_piece(const PathPiece& piece, double s0, double s1) {
  if (s1 - s0 <= 1e-14 * std::max(1.0, piece_length(piece))) {
    const Point p = piece_point(piece, s0);
    return Segment{p, p};
  }
  return std::visit(overloaded{[&](const Segment& seg) -> PathPiece {
                                 return Segment{piece_point(seg, s0), piece_point(seg, s1)};
                               },
                               [&](const Arc& a) -> PathPiece {
                                 const double sign = a.ccw ? 1.0 : -1.0;
                                 return Arc{a.center, a.radius, a.start + sign * s0 / a.radius,
                                            a.start + sign * s1 / a.radius, a.ccw};
                               }},
                    piece);
}

PathPiece reversed(const PathPiece& piece) {
  return std::visit(overloaded{[](const Segment& s) -> PathPiece { return Segment{s.b, s.a}; },
                               [](const Arc& a) -> PathPiece {
                                 return Arc{a.center, a.radius, a.end, a.start, !a.ccw};
                               }},
                    piece);
}

PathPiece transformed(const PathPiece& piece, double angle, Point shift) {
  return std::visit(
      overloaded{[&](const Segment& s) -> PathPiece {
                   return Segment{rotate(s.a, angle) + shift, rotate(s.b, angle) + shift};
                 },
                 [&](const Arc& a) -> PathPiece {
                   return Arc{rotate(a.center, angle) + shift, a.radius, a.start + angle,
                              a.end + angle, a.ccw};
                 }},
      piece);
}

double piece_distance(Point x, const PathPiece& piece) {
  return std::visit(overloaded{[x](const Segment& s) { return dist_to_segment(x, s.a, s.b); },
                               [x](const Arc& a) { return dist_to_primitive(x, Primitive{a}); }},
                    piece);
}

namespace {

constexpr double kEps = 1e-12;

bool on_arc(const Arc& arc, Point p) {
  return arc_offset(arc, angle_of(p - arc.center)) <= std::abs(arc.sweep()) + 1e-12 ||
         distance(p, arc.start_point()) < 1e-9 || distance(p, arc.end_point()) < 1e-9;
}

std::vector<Point> intersect_ss(const Segment& s, const Segment& t) {
  const Point d1 = s.b - s.a, d2 = t.b - t.a;
  const double l1 = norm(d1), l2 = norm(d2);
  const double den = cross(d1, d2);
  if (std::abs(den) <= kEps * l1 * l2) {
    if (std::abs(cross(t.a - s.a, d1)) > 1e-9 * l1) return {};
    const double u0 = dot(t.a - s.a, d1) / (l1 * l1);
    const double u1 = dot(t.b - s.a, d1) / (l1 * l1);
    const double lo = std::max(0.0, std::min(u0, u1));
    const double hi = std::min(1.0, std::max(u0, u1));
    if (lo > hi + 1e-12) return {};
    return {s.a + d1 * lo, s.a + d1 * hi};
  }
  const double lambda = cross(t.a - s.a, d2) / den;
  const double mu = cross(t.a - s.a, d1) / den;
  if (lambda < -1e-12 || lambda > 1.0 + 1e-12 || mu < -1e-12 || mu > 1.0 + 1e-12) return {};
  return {s.a + d1 * lambda};
}

std::vector<Point> intersect_sa(const Segment& s, const Arc& arc) {
  const Point d = s.b - s.a;
  const Point w = s.a - arc.center;
  const double A = dot(d, d);
  const double B = dot(d, w);
  const double C = dot(w, w) - arc.radius * arc.radius;
  double disc = B * B - A * C;
  if (disc < -1e-12 * A * arc.radius * arc.radius) return {};
  disc = std::max(0.0, disc);
  std::vector<Point> out;
  const double root = std::sqrt(disc);
  for (double lambda : {(-B - root) / A, (-B + root) / A}) {
    if (lambda < -1e-12 || lambda > 1.0 + 1e-12) continue;
    const Point p = s.a + d * lambda;
    if (on_arc(arc, p)) out.push_back(p);
  }
  return out;
}

std::vector<Point> intersect_aa(const Arc& a, const Arc& b) {
  const Point delta = b.center - a.center;
  const double dd = norm(delta);
  if (dd < 1e-12) {
    if (std::abs(a.radius - b.radius) > 1e-12) return {};
    std::vector<Point> out;
    for (Point p : {b.start_point(), b.end_point()})
      if (on_arc(a, p)) out.push_back(p);
    for (Point p : {a.start_point(), a.end_point()})
      if (on_arc(b, p)) out.push_back(p);
    return out;
  }
  if (dd > a.radius + b.radius + 1e-12 || dd < std::abs(a.radius - b.radius) - 1e-12) return {};
  const double along = (dd * dd + a.radius * a.radius - b.radius * b.radius) / (2.0 * dd);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
  const Point e = delta / dd;
  std::vector<Point> out;
  for (double sign : {1.0, -1.0}) {
    const Point p = a.center + e * along + perp(e) * (sign * h);
    if (on_arc(a, p) && on_arc(b, p)) out.push_back(p);
    if (h == 0.0) break;
  }
  return out;
}

}  // namespace

std::vector<Point> intersect(const PathPiece& a, const PathPiece& b) {
  return std::visit(overloaded{[](const Segment& s, const Segment& t) { return intersect_ss(s, t); },
                               [](const Segment& s, const Arc& t) { return intersect_sa(s, t); },
                               [](const Arc& s, const Segment& t) { return intersect_sa(t, s); },
                               [](const Arc& s, const Arc& t) { return intersect_aa(s, t); }},
                    a, b);
}

PiecewisePath::PiecewisePath(std::vector<PathPiece> pieces, double join_tol) {
  for (auto& p : pieces) {
    if (auto* seg = std::get_if<Segment>(&p);
        seg && diskdraw::distance(seg->a, seg->b) <= join_tol)
      continue;
    pieces_.push_back(std::move(p));
  }
  if (pieces_.empty()) throw Error(ErrorCode::ConstructionInconsistent, "path has no pieces");
  const std::size_t n = pieces_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = diskdraw::distance(piece_end(pieces_[i]), piece_start(pieces_[(i + 1) % n]));
    if (gap > join_tol)
      throw Error(ErrorCode::ConstructionInconsistent,
                  "piece " + std::to_string(i) + " does not meet its successor (gap " +
                      std::to_string(gap) + ")");
  }
  offsets_.resize(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + piece_length(pieces_[i]);
  if (auto hit = find_self_intersection())
    throw Error(ErrorCode::ConstructionInconsistent,
                "pieces " + std::to_string(hit->first) + " and " + std::to_string(hit->second) +
                    " intersect");
}

double PiecewisePath::signed_area() const {
  double twice = 0.0;
  for (const auto& piece : pieces_) {
    std::visit(overloaded{[&](const Segment& s) { twice += cross(s.a, s.b); },
                          [&](const Arc& a) {
                            twice += cross(a.center, a.end_point() - a.start_point()) +
                                     a.radius * a.radius * a.sweep();
                          }},
               piece);
  }
  return 0.5 * twice;
}

PiecewisePath PiecewisePath::reversed() const {
  std::vector<PathPiece> out;
  out.reserve(pieces_.size());
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) out.push_back(diskdraw::reversed(*it));
  return PiecewisePath(std::move(out));
}

PiecewisePath PiecewisePath::transformed(double angle, Point shift) const {
  std::vector<PathPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(diskdraw::transformed(p, angle, shift));
  return PiecewisePath(std::move(out));
}

double PiecewisePath::distance(Point x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pieces_) best = std::min(best, piece_distance(x, p));
  return best;
}

std::optional<int> PiecewisePath::crossings(Point x, double direction) const {
  const Point d = unit(direction);
  int count = 0;
  for (const auto& piece : pieces_) {
    bool degenerate = false;
    std::visit(overloaded{[&](const Segment& s) {
                            const Point e = s.b - s.a;
                            const double len = norm(e);
                            const double den = cross(d, e);
                            if (std::abs(den) <= 1e-12 * len) {
                              if (std::abs(cross(s.a - x, d)) <= 1e-12 * len) degenerate = true;
                              return;
                            }
                            const double lambda = cross(s.a - x, e) / den;
                            const double mu = cross(s.a - x, d) / den;
                            if (lambda <= 0.0 || mu < -1e-9 || mu > 1.0 + 1e-9) return;
                            if (mu < 1e-9 || mu > 1.0 - 1e-9) {
                              degenerate = true;
                              return;
                            }
                            ++count;
                          },
                          [&](const Arc& a) {
                            const Point w = x - a.center;
                            const double B = dot(d, w);
                            const double C = dot(w, w) - a.radius * a.radius;
                            const double disc = B * B - C;
                            const double r2 = a.radius * a.radius;
                            if (disc < -1e-10 * r2) return;
                            if (disc < 1e-10 * r2) {
                              if (-B > 0.0 && on_arc(a, x + d * (-B))) degenerate = true;
                              return;
                            }
                            const double root = std::sqrt(disc);
                            const double span = std::abs(a.sweep());
                            for (double lambda : {-B - root, -B + root}) {
                              if (lambda <= 0.0) continue;
                              const Point p = x + d * lambda;
                              const double off = arc_offset(a, angle_of(p - a.center));
                              const double tol = 1e-9 / a.radius;
                              if (off < tol || std::abs(off - span) < tol ||
                                  off > 2.0 * std::numbers::pi - tol) {
                                degenerate = true;
                                return;
                              }
                              if (off <= span) ++count;
                            }
                          }},
               piece);
    if (degenerate) return std::nullopt;
  }
  return count;
}

bool PiecewisePath::encloses(Point x) const {
  constexpr double golden = 2.399963229728653;
  for (int k = 0; k < 64; ++k) {
    if (auto c = crossings(x, 0.1234567 + golden * k)) return *c % 2 == 1;
  }
  throw Error(ErrorCode::ConstructionInconsistent, "no usable ray direction for point");
}

std::vector<std::size_t> PiecewisePath::corners(double angle_tol) const {
  std::vector<std::size_t> out;
  const std::size_t n = pieces_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point t0 = piece_tangent(pieces_[i], piece_length(pieces_[i]));
    const Point t1 = piece_tangent(pieces_[(i + 1) % n], 0.0);
    if (std::abs(std::atan2(cross(t0, t1), dot(t0, t1))) > angle_tol) out.push_back(i);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> PiecewisePath::find_self_intersection() const {
  const std::size_t n = pieces_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool next = j == i + 1;
      const bool wrap = i == 0 && j == n - 1;
      const auto hits = intersect(pieces_[i], pieces_[j]);
      for (const Point& p : hits) {
        if (next && diskdraw::distance(p, piece_end(pieces_[i])) < 1e-7) continue;
        if (wrap && diskdraw::distance(p, piece_start(pieces_[i])) < 1e-7) continue;
        return std::pair{i, j};
      }
    }
  }
  return std::nullopt;
}

}  // namespace diskdraw
