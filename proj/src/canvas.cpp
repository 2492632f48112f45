#include "diskdraw/canvas.hpp"

#include <algorithm>
#include <limits>

namespace diskdraw {

const char* to_string(DiskModel m) { return m == DiskModel::Open ? "open" : "closed"; }
const char* to_string(Tool t) { return t == Tool::Pencil ? "pencil" : "eraser"; }
const char* to_string(Trivalue v) {
  switch (v) {
    case Trivalue::In: return "in";
    case Trivalue::Out: return "out";
    case Trivalue::Boundary: return "boundary";
  }
  return "?";
}
const char* to_string(Shade s) {
  switch (s) {
    case Shade::Black: return "black";
    case Shade::White: return "white";
    case Shade::Boundary: return "boundary";
  }
  return "?";
}

CenterSet::CenterSet(std::vector<Primitive> primitives) : primitives_(std::move(primitives)) {
  if (primitives_.empty()) throw Error(ErrorCode::InvalidPrimitive, "center set is empty");
  for (const auto& p : primitives_) validate(p);
}

double CenterSet::distance(Point x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : primitives_) {
    best = std::min(best, dist_to_primitive(x, p));
    if (best == 0.0) break;
  }
  return best;
}

namespace {

Tool expected_tool(std::size_t index0) { return index0 % 2 == 0 ? Tool::Pencil : Tool::Eraser; }

Stroke padding(Tool tool) { return {tool, CenterSet(SinglePoint{kFarAway})}; }

}  // namespace

DrawingScript::DrawingScript(DiskModel model, std::vector<Stroke> strokes)
    : model_(model), strokes_(std::move(strokes)) {
  for (std::size_t i = 0; i < strokes_.size(); ++i)
    if (strokes_[i].tool != expected_tool(i))
      throw Error(ErrorCode::InvalidParameters,
                  "stroke " + std::to_string(i + 1) + " breaks pencil/eraser alternation");
}

DrawingScript DrawingScript::relaxed(DiskModel model, std::vector<Stroke> strokes) {
  std::vector<Stroke> out;
  out.reserve(strokes.size() * 2);
  for (auto& s : strokes) {
    if (s.tool != expected_tool(out.size())) out.push_back(padding(expected_tool(out.size())));
    out.push_back(std::move(s));
  }
  return DrawingScript(model, std::move(out));
}

Trivalue nbhd_contains(Point x, const CenterSet& centers, DiskModel /*model*/, Tolerance tol) {
  const double d = centers.distance(x);
  if (d < 1.0 - tol.value()) return Trivalue::In;
  if (d > 1.0 + tol.value()) return Trivalue::Out;
  return Trivalue::Boundary;
}

bool nbhd_contains_exact(Point x, const CenterSet& centers, DiskModel model) {
  const double d = centers.distance(x);
  return model == DiskModel::Open ? d < 1.0 : d <= 1.0;
}

namespace {

std::vector<Trivalue> verdicts(Point x, const DrawingScript& script, Tolerance tol) {
  std::vector<Trivalue> v;
  v.reserve(script.size());
  for (const auto& s : script.strokes()) v.push_back(nbhd_contains(x, s.centers, script.model(), tol));
  return v;
}

// 1-based index of the last definite cover, 0 if none.
std::size_t last_in(const std::vector<Trivalue>& v) {
  for (std::size_t k = v.size(); k > 0; --k)
    if (v[k - 1] == Trivalue::In) return k;
  return 0;
}

Shade shade_from(const std::vector<Trivalue>& v) {
  const std::size_t m = last_in(v);
  for (std::size_t k = std::max<std::size_t>(m, 1); k <= v.size(); ++k)
    if (v[k - 1] == Trivalue::Boundary) return Shade::Boundary;
  if (m == 0) return Shade::White;
  return expected_tool(m - 1) == Tool::Pencil ? Shade::Black : Shade::White;
}

}  // namespace

Shade eval_script(Point x, const DrawingScript& script, Tolerance tol) {
  return shade_from(verdicts(x, script, tol));
}

Shade eval_script_exact(Point x, const DrawingScript& script) {
  const auto& strokes = script.strokes();
  for (std::size_t k = strokes.size(); k > 0; --k)
    if (nbhd_contains_exact(x, strokes[k - 1].centers, script.model()))
      return strokes[k - 1].tool == Tool::Pencil ? Shade::Black : Shade::White;
  return Shade::White;
}

int stationary_number(Point x, const DrawingScript& script, Tolerance tol) {
  const auto v = verdicts(x, script, tol);
  const Shade shade = shade_from(v);
  if (shade == Shade::Boundary)
    throw Error(ErrorCode::BoundaryPoint, "final colour is undecided at this point");

  // Black: smallest odd k covering x after the last even cover. White: same with
  // parities swapped.
  const std::size_t wanted_parity = shade == Shade::Black ? 1 : 0;
  std::size_t last_opposite = 0;
  for (std::size_t k = v.size(); k > 0; --k) {
    if (k % 2 != wanted_parity && v[k - 1] != Trivalue::Out) {
      if (v[k - 1] == Trivalue::Boundary)
        throw Error(ErrorCode::BoundaryPoint, "stroke " + std::to_string(k) + " is undecided");
      last_opposite = k;
      break;
    }
  }
  for (std::size_t k = last_opposite + 1; k <= v.size(); ++k) {
    if (k % 2 != wanted_parity || v[k - 1] == Trivalue::Out) continue;
    if (v[k - 1] == Trivalue::Boundary)
      throw Error(ErrorCode::BoundaryPoint, "stroke " + std::to_string(k) + " is undecided");
    return static_cast<int>(k);
  }
  return 0;
}

CenterSet halfplane_center_set(Point normal, double offset, bool strict) {
  if (std::abs(norm(normal) - 1.0) > 1e-12)
    throw Error(ErrorCode::NonUnitNormal, "half-plane normal must have unit length");
  return CenterSet(OffsetHalfPlane{normal, offset, 1.0, strict});
}

DrawingScript convex_polygon_script(std::span<const Point> vertices, DiskModel model) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error(ErrorCode::NonConvexInput, "need at least three vertices");
  std::vector<Primitive> erase;
  erase.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices[i];
    const Point b = vertices[(i + 1) % n];
    const Point c = vertices[(i + 2) % n];
    const double scale = std::max(norm(b - a), norm(c - b));
    if (!(cross(b - a, c - b) > 1e-12 * scale * scale))
      throw Error(ErrorCode::NonConvexInput,
                  "vertices must turn strictly left at vertex " + std::to_string((i + 1) % n));
    const Point edge = b - a;
    const Point outward = Point{edge.y, -edge.x} / norm(edge);
    erase.emplace_back(OffsetHalfPlane{outward, dot(a, outward), 1.0, model == DiskModel::Closed});
  }
  // Turning left everywhere can still wind more than once.
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertices[(i + 1) % n] - vertices[i];
    const Point e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    winding += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(winding - 2.0 * std::numbers::pi) > 1e-6)
    throw Error(ErrorCode::NonConvexInput, "polygon winds more than once");

  std::vector<Stroke> strokes;
  strokes.push_back({Tool::Pencil, CenterSet(WholePlane{})});
  strokes.push_back({Tool::Eraser, CenterSet(std::move(erase))});
  return DrawingScript(model, std::move(strokes));
}

}  // namespace diskdraw
