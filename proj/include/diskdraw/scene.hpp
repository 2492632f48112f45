#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskdraw/canvas.hpp"
#include "diskdraw/path.hpp"

namespace diskdraw {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct ConstructionRef {
  std::string name;  // chessboard | rounded | snake | sharp
  double param = 0.0;
};

/// A parsed scene file.
///
///   model open|closed
///   stroke pencil|eraser <prim> [; <prim> ...]
///     prim: point X Y | segment X1 Y1 X2 Y2 | arc CX CY R A0 A1 [cw]
///           | halfplane NX NY OFFSET | plane
///   construction chessboard C | rounded RHO | snake R | sharp N
///   region
///     piece segment X1 Y1 X2 Y2
///     piece arc CX CY R A0 A1 ccw|cw
///   end
///
/// Angles are in radians; `#` starts a comment.
struct Scene {
  DiskModel model = DiskModel::Open;
  std::vector<Stroke> strokes;
  std::optional<ConstructionRef> construction;
  std::vector<PiecewisePath> regions;

  /// Strokes in alternating normal form (padding inserted where needed).
  DrawingScript script() const;
};

Scene parse_scene(const std::string& text);
DrawingScript parse_script(const std::string& text);

std::string serialize_script(const DrawingScript& script);
/// Region block for a closed path, one piece per line.
std::string serialize_region(const PiecewisePath& path);

}  // namespace diskdraw
