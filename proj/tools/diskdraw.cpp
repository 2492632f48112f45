// diskdraw command-line front end.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "diskdraw/constructions.hpp"
#include "diskdraw/curvature.hpp"
#include "diskdraw/render.hpp"
#include "diskdraw/report.hpp"
#include "diskdraw/scene.hpp"

using namespace diskdraw;

namespace {

constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Coloring region_coloring(std::vector<PiecewisePath> regions, Tolerance tol) {
  return {[regions, tol](Point p) {
            bool inside = false;
            for (const auto& r : regions) {
              if (r.distance(p) <= tol.value()) return Shade::Boundary;
              inside ^= r.encloses(p);
            }
            return inside ? Shade::Black : Shade::White;
          },
          "regions"};
}

Coloring construction_coloring(const std::string& name, double param, Tolerance tol) {
  if (name == "chessboard") return chessboard_coloring(param, tol);
  if (name == "rounded") return rounded_chessboard_coloring(param, tol);
  if (name == "snake") return snake_coloring(build_snake(param), tol);
  if (name == "sharp" || name == "sharp-n")
    return script_coloring(sharp_ndissected_script(static_cast<int>(param)), tol);
  throw Error(ErrorCode::InvalidParameters, "unknown construction '" + name + "'");
}

// A construction wins over regions, which win over strokes.
Coloring scene_coloring(const Scene& scene, Tolerance tol) {
  if (scene.construction)
    return construction_coloring(scene.construction->name, scene.construction->param, tol);
  if (!scene.regions.empty()) return region_coloring(scene.regions, tol);
  return script_coloring(scene.script(), tol);
}

void print(const std::string& s) { std::fputs(s.c_str(), stdout); }

bool line(bool ok, const std::string& what) {
  std::printf("%s %s\n", ok ? "ok" : "FAIL", what.c_str());
  return ok;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

int verify_chessboard(double r, double theta_deg, int depth) {
  const auto cert = descent_verify(chessboard_coloring(1.0),
                                   chessboard_stages(r, theta_deg * std::numbers::pi / 180, depth));
  print(format_certificate(cert));
  if (!cert.valid())
    std::printf("certificate invalid: %s %s\n", to_string(cert.failure->kind),
                cert.failure->detail.c_str());
  else
    std::printf("certificate valid (%d stages)\n", depth);
  return cert.valid() ? kVerified : kRefuted;
}

int verify_snake(double r, int depth) {
  const SnakeGeometry g = build_snake(r);
  bool ok = true;
  const double AE = distance(g.point("A"), g.point("E"));
  const double OE = norm(g.point("E"));
  const double OEp = norm(g.point("E'"));
  ok &= line(std::abs(AE - 0.793) <= 0.002, "|AE|=" + num(AE));
  ok &= line(std::abs(OE - 2.963) <= 0.002, "|OE|=" + num(OE));
  ok &= line(std::abs(OEp - 3.735) <= 0.002, "|OE'|=" + num(OEp));

  const CurvatureReport curv = rolling_disk_check(g.boundary);
  ok &= line(curv.max_unsigned_curvature < 1.0, "max curvature=" + num(curv.max_unsigned_curvature));
  ok &= line(curv.rolling_disk_ok, "rolling disk, " + std::to_string(curv.samples) + " samples");

  const DissectionSpec spec = snake_dissection_spec(g);
  const double bound = undrawability_bound(spec.n);
  ok &= line(spec.a < bound, "a=" + num(spec.a) + " < cot(pi/12)=" + num(bound));
  const Coloring col = snake_coloring(g);
  const DissectionCheck dc = dissection_sample_check(col, spec, 200);
  ok &= line(dc.ok, "total 12-dissection" + (dc.ok ? std::string() : ": " + dc.failure));

  StageParams p;
  p.n = spec.n;
  p.L = default_stage_L(spec);
  p.s = 1e-3;
  p.t = std::pow(p.s, 1.5);
  const FiveCircleRadii radii = five_circle_radii(p);
  ok &= line(radii.max() < 1.0, "stage radii L=" + num(p.L) + " max=" + num(radii.max()));
  const auto cert =
      descent_verify(col, dissection_stages(p, spec.apex, spec.phase, depth, spec.first_ccw));
  print(format_certificate(cert));
  ok &= line(cert.valid(), "descent stages 0.." + std::to_string(depth) +
                               (cert.valid() ? std::string() : ": " + cert.failure->detail));
  return ok ? kVerified : kRefuted;
}

int verify_dissection(int n, double L, double s, int depth) {
  StageParams p{n, L, s, std::pow(s, 1.5)};
  const FiveCircleRadii r = five_circle_radii(p);
  std::printf("R_a=%s R_c=%s R_d=%s R_e=%s L*tan(pi/n)=%s\n", num(r.R_a).c_str(), num(r.R_c).c_str(),
              num(r.R_d).c_str(), num(r.R_e).c_str(), num(L * std::tan(std::numbers::pi / n)).c_str());
  if (!(r.max() < 1.0)) {
    std::printf("radii too large\n");
    return kRefuted;
  }
  const auto checks = encirclement_checks(dissection_stages(p, {0.0, 0.0}, 0.0, depth));
  bool ok = true;
  for (const auto& c : checks) {
    std::printf("%s\n", format_check_line(c.stage, c.kind, c.verdict, c.clearance).c_str());
    ok &= c.verdict == Verdict::Yes;
  }
  return ok ? kVerified : kRefuted;
}

int verify_trapezoid(int fuzz) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < fuzz; ++i) {
    const double b = 0.1 + 10.0 * U(rng);
    const double a = b * U(rng) * 0.999;
    const double h = 0.05 + 10.0 * U(rng);
    const double formula = trapezoid_circumradius(a, b, h);
    const double oracle = circumcircle3({-b / 2, 0.0}, {b / 2, 0.0}, {a / 2, h}).radius;
    worst = std::max(worst, std::abs(formula - oracle) / std::max(1.0, oracle));
  }
  std::printf("trapezoid cases=%d max_rel_err=%.3g\n", fuzz, worst);
  return worst <= 1e-9 ? kVerified : kRefuted;
}

int verify_rolling(const std::string& construction, double param, double step, double eps) {
  PiecewisePath path = construction == "snake"
                           ? build_snake(param).boundary
                           : PiecewisePath({Arc{{0.0, 0.0}, param, 0.0, 0.0, true}});
  const CurvatureReport rep = rolling_disk_check(path, step, eps);
  print(format_curvature(rep));
  std::printf("max curvature=%s failures=%zu\n", num(rep.max_unsigned_curvature).c_str(),
              rep.failures.size());
  return rep.rolling_disk_ok ? kVerified : kRefuted;
}

int verify_sharp(int n, int samples) {
  const DrawingScript script = sharp_ndissected_script(n);
  const double a = undrawability_bound(n) + 0.01;
  const DissectionCheck dc = dissection_sample_check(
      script_coloring(script), sharp_dissection_spec(n, a, 20.0, 2.0 - 0.02), samples);
  line(dc.ok, "total " + std::to_string(n) + "-dissection at (" + num(a) + ", 20) thickness 1.98" +
                  (dc.ok ? std::string() : ": " + dc.failure));
  return dc.ok ? kVerified : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pencil and eraser drawings with unit disks"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Colour of one point under a scene");
  std::string scene_path;
  std::vector<double> query;
  sim->add_option("scene", scene_path, "Scene file")->required();
  sim->add_option("--query", query, "X Y")->expected(2)->required();

  auto* ren = app.add_subcommand("render", "Rasterise a scene or construction to PGM");
  std::string ren_scene, construction, out_path = "out.pgm", svg_path;
  double param = 1.0;
  std::vector<double> bbox{-1.2, -1.2, 1.2, 1.2};
  double res = 100.0;
  ren->add_option("scene", ren_scene, "Scene file");
  ren->add_option("--construction", construction, "chessboard|rounded|snake|sharp-n");
  ren->add_option("--param", param, "Construction parameter (c, rho, r or n)");
  ren->add_option("--n", param, "Ray count for sharp-n");
  ren->add_option("--bbox", bbox, "XMIN YMIN XMAX YMAX")->expected(4);
  ren->add_option("--res", res, "Pixels per unit");
  ren->add_option("-o,--output", out_path, "PGM output");
  ren->add_option("--svg", svg_path, "Optional SVG output");

  auto* ver = app.add_subcommand("verify", "Run a verification");
  ver->require_subcommand(1);
  double r = 0.1, theta = 0.5, snake_r = 1.001, L = 3.0, s = 1e-3, step = 0.05, eps = 0.5;
  double rolling_param = 1.001;
  int depth = 10, snake_depth = 8, dis_depth = 4, n = 12, fuzz = 1000, samples = 200;
  std::string rolling_construction = "snake";

  auto* v_chess = ver->add_subcommand("chessboard", "Descent certificate for the 2x2 chessboard");
  v_chess->add_option("--r", r);
  v_chess->add_option("--theta-deg", theta);
  v_chess->add_option("--depth", depth);

  auto* v_snake = ver->add_subcommand("snake", "Anchors, dissection and descent for the snake");
  v_snake->add_option("--r", snake_r);
  v_snake->add_option("--depth", snake_depth);

  auto* v_dis = ver->add_subcommand("dissection", "Stage radii and encirclements");
  v_dis->add_option("--n", n);
  v_dis->add_option("--L", L);
  v_dis->add_option("--s", s);
  v_dis->add_option("--depth", dis_depth);

  auto* v_trap = ver->add_subcommand("trapezoid", "Circumradius formula against circumcircles");
  v_trap->add_option("--fuzz", fuzz);

  auto* v_roll = ver->add_subcommand("rolling", "Rolling unit disk check");
  v_roll->add_option("--construction", rolling_construction)
      ->check(CLI::IsMember({"snake", "circle"}));
  v_roll->add_option("--param", rolling_param, "Snake r or circle radius");
  v_roll->add_option("--step", step);
  v_roll->add_option("--eps", eps);

  auto* v_sharp = ver->add_subcommand("sharp", "Slid-disk script against the dissection bound");
  v_sharp->add_option("--n", n);
  v_sharp->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*sim) {
      const Scene scene = parse_scene(read_file(scene_path));
      const Shade sh = scene_coloring(scene, {}).classify({query[0], query[1]});
      std::printf("%s\n", to_string(sh));
      return kVerified;
    }
    if (*ren) {
      Coloring col;
      std::vector<PiecewisePath> overlays;
      if (!construction.empty()) {
        col = construction_coloring(construction, param, {});
        if (construction == "snake") overlays.push_back(build_snake(param).boundary);
      } else if (!ren_scene.empty()) {
        const Scene scene = parse_scene(read_file(ren_scene));
        col = scene_coloring(scene, {});
        overlays = scene.regions;
      } else {
        std::fprintf(stderr, "render needs a scene file or --construction\n");
        return kUsage;
      }
      const RasterSpec spec{bbox[0], bbox[1], bbox[2], bbox[3], res};
      const Image img = render(col.classify, spec);
      write_pgm(img, out_path);
      if (!svg_path.empty()) write_svg(img, spec, overlays, svg_path);
      std::printf("%dx%d black=%.6f fnv1a=%016llx\n", img.width, img.height, black_fraction(img),
                  static_cast<unsigned long long>(fnv1a64(encode_pgm(img))));
      return kVerified;
    }
    if (*v_chess) return verify_chessboard(r, theta, depth);
    if (*v_snake) return verify_snake(snake_r, snake_depth);
    if (*v_dis) return verify_dissection(n, L, s, dis_depth);
    if (*v_trap) return verify_trapezoid(fuzz);
    if (*v_roll) return verify_rolling(rolling_construction, rolling_param, step, eps);
    if (*v_sharp) return verify_sharp(n, samples);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    switch (e.code()) {
      case ErrorCode::InvalidParameters:
      case ErrorCode::InvalidN:
      case ErrorCode::IoError:
      case ErrorCode::InvalidTrapezoid:
        return kUsage;
      default:
        return kRefuted;
    }
  }
  return kUsage;
}
