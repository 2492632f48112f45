#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "diskdraw/canvas.hpp"
#include "diskdraw/path.hpp"

namespace diskdraw {

struct RasterSpec {
  double xmin = -1.0;
  double ymin = -1.0;
  double xmax = 1.0;
  double ymax = 1.0;
  double resolution = 100.0;  // pixels per unit

  void validate() const;
  int width() const;
  int height() const;
  /// Centre of pixel (col, row); row 0 is the top edge (ymax).
  Point pixel_center(int col, int row) const;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first
};

inline constexpr std::uint8_t kBlackPixel = 0;
inline constexpr std::uint8_t kWhitePixel = 255;
inline constexpr std::uint8_t kBoundaryPixel = 128;

/// Samples `classify` at every pixel centre.
Image render(const std::function<Shade(Point)>& classify, const RasterSpec& spec);

std::string encode_pgm(const Image& img);
/// Throws IoError when the file cannot be written.
void write_pgm(const Image& img, const std::string& path);

/// SVG of the raster (each run of equal pixels in a row becomes one rect) with
/// the given paths drawn as outlines.
std::string encode_svg(const Image& img, const RasterSpec& spec,
                       const std::vector<PiecewisePath>& overlays);
void write_svg(const Image& img, const RasterSpec& spec,
               const std::vector<PiecewisePath>& overlays, const std::string& path);

/// Fraction of pixels equal to kBlackPixel.
double black_fraction(const Image& img);

/// 64-bit FNV-1a of the bytes.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace diskdraw
