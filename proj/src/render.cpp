#include "diskdraw/render.hpp"

#include <cstdio>
#include <fstream>

namespace diskdraw {

void RasterSpec::validate() const {
  if (!(xmax > xmin) || !(ymax > ymin))
    throw Error(ErrorCode::InvalidParameters, "bounding box is empty");
  if (!(resolution >= 1.0)) throw Error(ErrorCode::InvalidParameters, "resolution must be >= 1");
  if (static_cast<double>(width()) * height() > 1e8)
    throw Error(ErrorCode::InvalidParameters, "raster too large");
}

int RasterSpec::width() const { return static_cast<int>(std::ceil((xmax - xmin) * resolution - 1e-9)); }
int RasterSpec::height() const { return static_cast<int>(std::ceil((ymax - ymin) * resolution - 1e-9)); }

Point RasterSpec::pixel_center(int col, int row) const {
  return {xmin + (col + 0.5) / resolution, ymax - (row + 0.5) / resolution};
}

Image render(const std::function<Shade(Point)>& classify, const RasterSpec& spec) {
  spec.validate();
  Image img{spec.width(), spec.height(), {}};
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
  for (int row = 0; row < img.height; ++row)
    for (int col = 0; col < img.width; ++col) {
      const Shade s = classify(spec.pixel_center(col, row));
      img.pixels[static_cast<std::size_t>(row) * img.width + col] =
          s == Shade::Black ? kBlackPixel : s == Shade::White ? kWhitePixel : kBoundaryPixel;
    }
  return img;
}

std::string encode_pgm(const Image& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
  return out;
}

namespace {

void write_file(const std::string& bytes, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error(ErrorCode::IoError, "write failed for " + path);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void write_pgm(const Image& img, const std::string& path) { write_file(encode_pgm(img), path); }

std::string encode_svg(const Image& img, const RasterSpec& spec,
                       const std::vector<PiecewisePath>& overlays) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(img.width) +
                    "\" height=\"" + std::to_string(img.height) + "\" viewBox=\"0 0 " +
                    std::to_string(img.width) + " " + std::to_string(img.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int row = 0; row < img.height; ++row) {
    int col = 0;
    while (col < img.width) {
      const std::uint8_t v = img.pixels[static_cast<std::size_t>(row) * img.width + col];
      int end = col + 1;
      while (end < img.width && img.pixels[static_cast<std::size_t>(row) * img.width + end] == v) ++end;
      if (v != kWhitePixel)
        out += "<rect x=\"" + std::to_string(col) + "\" y=\"" + std::to_string(row) + "\" width=\"" +
               std::to_string(end - col) + "\" height=\"1\" fill=\"" +
               (v == kBlackPixel ? "black" : "gray") + "\"/>\n";
      col = end;
    }
  }
  // Overlays in pixel coordinates.
  auto px = [&](Point p) {
    return fmt((p.x - spec.xmin) * spec.resolution) + "," + fmt((spec.ymax - p.y) * spec.resolution);
  };
  for (const auto& path : overlays) {
    std::string d = "M" + px(piece_start(path.pieces().front()));
    for (const auto& piece : path.pieces()) {
      if (const auto* s = std::get_if<Segment>(&piece)) {
        d += " L" + px(s->b);
        continue;
      }
      const auto& a = std::get<Arc>(piece);
      const double r = a.radius * spec.resolution;
      // SVG arcs cannot span a full turn; split into halves.
      const double sweep = a.sweep();
      for (int k = 1; k <= 2; ++k) {
        const Point p = a.point_at_angle(a.start + sweep * k / 2.0);
        // y flips, so counter-clockwise in the plane is sweep-flag 0 on screen.
        d += " A" + fmt(r) + "," + fmt(r) + " 0 0," + (a.ccw ? "0" : "1") + " " + px(p);
      }
    }
    out += "<path d=\"" + d + " Z\" fill=\"none\" stroke=\"red\" stroke-width=\"1\"/>\n";
  }
  return out + "</svg>\n";
}

void write_svg(const Image& img, const RasterSpec& spec, const std::vector<PiecewisePath>& overlays,
               const std::string& path) {
  write_file(encode_svg(img, spec, overlays), path);
}

double black_fraction(const Image& img) {
  if (img.pixels.empty()) return 0.0;
  std::size_t black = 0;
  for (auto v : img.pixels) black += v == kBlackPixel;
  return static_cast<double>(black) / img.pixels.size();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace diskdraw
