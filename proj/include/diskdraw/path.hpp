#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "diskdraw/geom.hpp"

namespace diskdraw {

using PathPiece = std::variant<Segment, Arc>;

double piece_length(const PathPiece& piece);
Point piece_start(const PathPiece& piece);
Point piece_end(const PathPiece& piece);
/// Point at arc length `s` from the piece's start.
Point piece_point(const PathPiece& piece, double s);
/// Unit tangent in the direction of travel.
Point piece_tangent(const PathPiece& piece, double s);
/// +1/R for counter-clockwise arcs, -1/R for clockwise arcs, 0 for segments.
double piece_signed_curvature(const PathPiece& piece);
/// The part of the piece between arc lengths s0 <= s1.
PathPiece sub_piece(const PathPiece& piece, double s0, double s1);
PathPiece reversed(const PathPiece& piece);
PathPiece transformed(const PathPiece& piece, double angle, Point shift);
double piece_distance(Point x, const PathPiece& piece);

/// Intersection points of two pieces (overlapping collinear or co-circular
/// pieces report the overlap's end points).
std::vector<Point> intersect(const PathPiece& a, const PathPiece& b);

/// Closed curve made of segments and circular arcs, joined end to start.
class PiecewisePath {
 public:
  /// Zero-length segments are dropped. Throws ConstructionInconsistent when
  /// consecutive pieces do not meet within `join_tol` or the curve is not
  /// simple.
  explicit PiecewisePath(std::vector<PathPiece> pieces, double join_tol = 1e-9);

  const std::vector<PathPiece>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  double length() const { return offsets_.back(); }
  /// Arc length at which piece i starts.
  double offset(std::size_t i) const { return offsets_[i]; }

  /// Shoelace area; positive for counter-clockwise curves.
  double signed_area() const;
  bool is_ccw() const { return signed_area() > 0.0; }
  PiecewisePath reversed() const;
  PiecewisePath transformed(double angle, Point shift) const;
  /// Same curve traversed counter-clockwise.
  PiecewisePath ccw() const { return is_ccw() ? *this : reversed(); }

  double distance(Point x) const;
  /// Even-odd membership by ray casting. Directions that graze an endpoint or
  /// touch a piece tangentially are discarded in favour of the next one.
  bool encloses(Point x) const;
  /// Crossing count along a fixed direction, or nullopt when the ray is
  /// degenerate for this point.
  std::optional<int> crossings(Point x, double direction) const;

  /// Indices of junctions (piece i ends, piece i+1 starts) where the tangent
  /// jumps by more than `angle_tol` radians.
  std::vector<std::size_t> corners(double angle_tol = 1e-6) const;

  /// First pair of non-adjacent pieces that meet, if any.
  std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection() const;

 private:
  std::vector<PathPiece> pieces_;
  std::vector<double> offsets_;
};

}  // namespace diskdraw
