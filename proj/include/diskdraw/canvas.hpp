#pragma once

#include <span>
#include <vector>

#include "diskdraw/geom.hpp"

namespace diskdraw {

enum class DiskModel { Open, Closed };
enum class Tool { Pencil, Eraser };
enum class Trivalue { In, Out, Boundary };
enum class Shade { Black, White, Boundary };

const char* to_string(DiskModel m);
const char* to_string(Tool t);
const char* to_string(Trivalue v);
const char* to_string(Shade s);

/// Non-empty finite union of primitives; the centers of one stroke.
class CenterSet {
 public:
  CenterSet(std::vector<Primitive> primitives);
  CenterSet(Primitive primitive) : CenterSet(std::vector<Primitive>{std::move(primitive)}) {}

  const std::vector<Primitive>& primitives() const { return primitives_; }
  /// Infimum distance from x to the set.
  double distance(Point x) const;

 private:
  std::vector<Primitive> primitives_;
};

struct Stroke {
  Tool tool;
  CenterSet centers;
};

/// Pencil and eraser strokes in alternating normal form: stroke k (1-based) is a
/// pencil for odd k and an eraser for even k.
class DrawingScript {
 public:
  /// Throws InvalidParameters when the strokes do not alternate.
  DrawingScript(DiskModel model, std::vector<Stroke> strokes);

  /// Accepts any tool order and pads with strokes centred far away so that the
  /// result alternates. Padding strokes never cover a point of interest.
  static DrawingScript relaxed(DiskModel model, std::vector<Stroke> strokes);

  DiskModel model() const { return model_; }
  const std::vector<Stroke>& strokes() const { return strokes_; }
  std::size_t size() const { return strokes_.size(); }

 private:
  DiskModel model_;
  std::vector<Stroke> strokes_;
};

/// Center used for padding strokes.
inline constexpr Point kFarAway{1e9, 1e9};

/// Three-valued membership of x in the unit neighbourhood of A. The model does
/// not change the verdict: it fixes how Boundary resolves (Open excludes the
/// critical distance, Closed includes it).
Trivalue nbhd_contains(Point x, const CenterSet& centers, DiskModel model, Tolerance tol = {});

/// Exact membership without a collar: d < 1 for Open, d <= 1 for Closed.
bool nbhd_contains_exact(Point x, const CenterSet& centers, DiskModel model);

/// Final colour of x, or Boundary when a stroke that could decide it sits within
/// the tolerance collar.
Shade eval_script(Point x, const DrawingScript& script, Tolerance tol = {});

/// Exact evaluation under the script's own model (no collar).
Shade eval_script_exact(Point x, const DrawingScript& script);

/// Stroke index (1-based) at which x acquired its final colour; 0 when no
/// stroke ever covers x. Throws BoundaryPoint when a stroke is undecided at x.
int stationary_number(Point x, const DrawingScript& script, Tolerance tol = {});

/// Centers whose open unit neighbourhood is the open half-plane <x, normal> > offset.
/// With `strict` set the margin is exclusive, which gives the same half-plane
/// as a union of closed disks.
CenterSet halfplane_center_set(Point normal, double offset, bool strict = false);

/// Pencil over the whole plane, then erase the outside half-planes of every edge.
/// Vertices must form a strictly convex counter-clockwise polygon.
DrawingScript convex_polygon_script(std::span<const Point> vertices, DiskModel model);

}  // namespace diskdraw
