#include <gtest/gtest.h>

#include <random>

#include "diskdraw/canvas.hpp"

using namespace diskdraw;

namespace {

Stroke pencil(std::vector<Primitive> p) { return {Tool::Pencil, CenterSet(std::move(p))}; }
Stroke eraser(std::vector<Primitive> p) { return {Tool::Eraser, CenterSet(std::move(p))}; }
Primitive pt(double x, double y) { return SinglePoint{{x, y}}; }

// Random script of point-centred strokes; also returns the raw centres.
struct RandomScript {
  DrawingScript script;
  std::vector<std::vector<Point>> centers;
};

RandomScript random_script(std::mt19937_64& rng, DiskModel model) {
  std::uniform_int_distribution<int> len(1, 8), count(1, 4);
  std::uniform_real_distribution<double> U(-2, 2);
  const int n = len(rng);
  std::vector<Stroke> strokes;
  std::vector<std::vector<Point>> centers;
  for (int k = 0; k < n; ++k) {
    std::vector<Primitive> prims;
    std::vector<Point> pts;
    for (int i = count(rng); i > 0; --i) {
      pts.push_back({U(rng), U(rng)});
      prims.push_back(SinglePoint{pts.back()});
    }
    strokes.push_back({k % 2 == 0 ? Tool::Pencil : Tool::Eraser, CenterSet(prims)});
    centers.push_back(pts);
  }
  return {DrawingScript(model, std::move(strokes)), std::move(centers)};
}

// The nested union/difference definition, evaluated literally.
bool recursive_member(Point x, const std::vector<std::vector<Point>>& centers, std::size_t k) {
  auto in_nbhd = [&](std::size_t j) {
    for (Point c : centers[j])
      if (std::hypot(x.x - c.x, x.y - c.y) < 1.0) return true;
    return false;
  };
  if (k == 1) return in_nbhd(0);
  const bool prev = recursive_member(x, centers, k - 1);
  return k % 2 == 1 ? (prev || in_nbhd(k - 1)) : (prev && !in_nbhd(k - 1));
}

}  // namespace

TEST(Neighbourhood, Examples) {
  const CenterSet A(pt(0, 0));
  EXPECT_EQ(nbhd_contains({0.5, 0}, A, DiskModel::Open), Trivalue::In);
  EXPECT_EQ(nbhd_contains({2.5, 0}, A, DiskModel::Open), Trivalue::Out);
  EXPECT_EQ(nbhd_contains({1, 0}, A, DiskModel::Open), Trivalue::Boundary);
  EXPECT_EQ(nbhd_contains({1, 0}, A, DiskModel::Closed), Trivalue::Boundary);
  EXPECT_FALSE(nbhd_contains_exact({1, 0}, A, DiskModel::Open));
  EXPECT_TRUE(nbhd_contains_exact({1, 0}, A, DiskModel::Closed));
}

TEST(Neighbourhood, EmptyCenterSetRejected) {
  EXPECT_THROW(CenterSet(std::vector<Primitive>{}), Error);
}

TEST(EvalScript, Examples) {
  const DrawingScript one(DiskModel::Open, {pencil({pt(0, 0)})});
  EXPECT_EQ(eval_script({0.2, 0}, one), Shade::Black);

  const DrawingScript two(DiskModel::Open, {pencil({pt(0, 0)}), eraser({pt(0.5, 0)})});
  EXPECT_EQ(eval_script({0.2, 0}, two), Shade::White);

  const DrawingScript three(DiskModel::Open,
                            {pencil({pt(0, 0)}), eraser({pt(2, 0)}), pencil({pt(2.5, 0)})});
  // (1.2, 0) is erased by the second stroke and out of reach of the third.
  EXPECT_EQ(eval_script({1.2, 0}, three), Shade::White);
  EXPECT_EQ(eval_script({1.6, 0}, three), Shade::Black);
  EXPECT_EQ(eval_script({50, 50}, three), Shade::White);
}

TEST(EvalScript, BoundaryPropagates) {
  const DrawingScript two(DiskModel::Open, {pencil({pt(0, 0)}), eraser({pt(2, 0)})});
  EXPECT_EQ(eval_script({1, 0}, two), Shade::Boundary);
  // A boundary stroke that is later overridden does not matter.
  const DrawingScript three(DiskModel::Open,
                            {pencil({pt(0, 0)}), eraser({pt(2, 0)}), pencil({pt(1, 0)})});
  EXPECT_EQ(eval_script({1, 0}, three), Shade::Black);
}

TEST(EvalScript, AlternationEnforced) {
  EXPECT_THROW(DrawingScript(DiskModel::Open, {eraser({pt(0, 0)})}), Error);
  EXPECT_THROW(DrawingScript(DiskModel::Open, {pencil({pt(0, 0)}), pencil({pt(1, 0)})}), Error);
}

TEST(EvalScript, RelaxedPadsWithFarStrokes) {
  const auto s = DrawingScript::relaxed(DiskModel::Open, {eraser({pt(0, 0)}), eraser({pt(1, 0)})});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.strokes()[0].tool, Tool::Pencil);
  EXPECT_EQ(s.strokes()[1].tool, Tool::Eraser);
  EXPECT_EQ(s.strokes()[2].tool, Tool::Pencil);
  EXPECT_EQ(s.strokes()[3].tool, Tool::Eraser);
  EXPECT_EQ(eval_script({-0.5, 0}, s), Shade::White);
}

TEST(EvalScript, ParityMatchesRecursiveDefinition) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> U(-3.5, 3.5);
  int compared = 0;
  for (int s = 0; s < 100; ++s) {
    const auto rs = random_script(rng, DiskModel::Open);
    for (int i = 0; i < 1000; ++i) {
      const Point x{U(rng), U(rng)};
      const Shade got = eval_script(x, rs.script);
      if (got == Shade::Boundary) continue;
      ++compared;
      EXPECT_EQ(got == Shade::Black, recursive_member(x, rs.centers, rs.centers.size()));
      EXPECT_EQ(got, eval_script_exact(x, rs.script));
    }
  }
  EXPECT_GT(compared, 99000);
}

TEST(EvalScript, MonotoneExtension) {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int s = 0; s < 50; ++s) {
    auto rs = random_script(rng, DiskModel::Open);
    std::vector<Stroke> strokes = rs.script.strokes();
    const Tool next = strokes.size() % 2 == 0 ? Tool::Pencil : Tool::Eraser;
    strokes.push_back({next, CenterSet(pt(U(rng), U(rng)))});
    const Stroke added = strokes.back();
    const DrawingScript longer(DiskModel::Open, std::move(strokes));
    for (int i = 0; i < 500; ++i) {
      const Point x{U(rng), U(rng)};
      if (nbhd_contains(x, added.centers, DiskModel::Open) == Trivalue::Boundary) continue;
      const Shade before = eval_script(x, rs.script);
      const Shade after = eval_script(x, longer);
      if (next == Tool::Pencil && before == Shade::Black) {
        EXPECT_EQ(after, Shade::Black);
      }
      if (next == Tool::Eraser && before == Shade::White) {
        EXPECT_EQ(after, Shade::White);
      }
    }
  }
}

TEST(EvalScript, OpenInsideClosed) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int s = 0; s < 50; ++s) {
    auto rs = random_script(rng, DiskModel::Open);
    const DrawingScript closed(DiskModel::Closed, rs.script.strokes());
    for (int i = 0; i < 500; ++i) {
      const Point x{U(rng), U(rng)};
      for (const auto& st : rs.script.strokes()) {
        if (nbhd_contains_exact(x, st.centers, DiskModel::Open)) {
          EXPECT_TRUE(nbhd_contains_exact(x, st.centers, DiskModel::Closed));
        }
      }
      if (eval_script(x, rs.script) == Shade::Black) {
        EXPECT_NE(eval_script(x, closed), Shade::White);
      }
    }
  }
}

TEST(StationaryNumber, Examples) {
  const DrawingScript one(DiskModel::Open, {pencil({pt(0, 0)})});
  EXPECT_EQ(stationary_number({0.2, 0}, one), 1);

  const DrawingScript three(DiskModel::Open,
                            {pencil({pt(0, 0)}), eraser({pt(0.5, 0)}), pencil({pt(9, 9)})});
  EXPECT_EQ(stationary_number({0.2, 0}, three), 2);

  const DrawingScript far(DiskModel::Open, {pencil({pt(9, 9)})});
  EXPECT_EQ(stationary_number({0, 0}, far), 0);
}

TEST(StationaryNumber, SmallestIndexAfterLastOpposite) {
  // Pencil, erase, pencil, pencil-padding: x black from stroke 3 on.
  const DrawingScript s(DiskModel::Open, {pencil({pt(0, 0)}), eraser({pt(0, 0)}),
                                          pencil({pt(0, 0)}), eraser({pt(9, 9)}),
                                          pencil({pt(0, 0)})});
  EXPECT_EQ(stationary_number({0, 0}, s), 3);
}

TEST(StationaryNumber, BoundaryThrows) {
  const DrawingScript s(DiskModel::Open, {pencil({pt(0, 0)}), eraser({pt(2, 0)})});
  try {
    stationary_number({1, 0}, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundaryPoint);
  }
}

TEST(StationaryNumber, Invariants) {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int s = 0; s < 100; ++s) {
    const auto rs = random_script(rng, DiskModel::Open);
    const auto& strokes = rs.script.strokes();
    for (int i = 0; i < 200; ++i) {
      const Point x{U(rng), U(rng)};
      const Shade final_shade = eval_script(x, rs.script);
      if (final_shade == Shade::Boundary) continue;
      int sn;
      try {
        sn = stationary_number(x, rs.script);
      } catch (const Error&) {
        continue;
      }
      ASSERT_LE(sn, static_cast<int>(rs.script.size()));
      if (sn == 0) {
        EXPECT_EQ(final_shade, Shade::White);
        continue;
      }
      const Tool at = strokes[sn - 1].tool;
      EXPECT_EQ(at == Tool::Pencil ? Shade::Black : Shade::White, final_shade);
      EXPECT_EQ(nbhd_contains(x, strokes[sn - 1].centers, DiskModel::Open), Trivalue::In);
      for (std::size_t k = sn; k < strokes.size(); ++k) {
        if (strokes[k].tool != at) {
          EXPECT_NE(nbhd_contains(x, strokes[k].centers, DiskModel::Open), Trivalue::In);
        }
      }
    }
  }
}

TEST(HalfPlane, Examples) {
  const CenterSet H = halfplane_center_set({0, 1}, 0.0);
  EXPECT_EQ(nbhd_contains({0, 0.5}, H, DiskModel::Open), Trivalue::In);
  EXPECT_EQ(nbhd_contains({0, -0.1}, H, DiskModel::Open), Trivalue::Out);
  EXPECT_EQ(nbhd_contains({0, 0}, H, DiskModel::Open), Trivalue::Boundary);
  try {
    halfplane_center_set({1, 1}, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnitNormal);
  }
}

TEST(ConvexPolygon, UnitSquare) {
  const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const DrawingScript s = convex_polygon_script(sq, DiskModel::Open);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(eval_script({0.5, 0.5}, s), Shade::Black);
  EXPECT_EQ(eval_script({5, 5}, s), Shade::White);
  EXPECT_EQ(eval_script({1, 0.5}, s), Shade::Boundary);

  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> U(-0.5, 1.5);
  for (int i = 0; i < 10000; ++i) {
    const Point x{U(rng), U(rng)};
    const double margin = std::min({x.x, x.y, 1 - x.x, 1 - x.y});
    if (std::abs(margin) <= 2e-9) continue;
    EXPECT_EQ(eval_script(x, s), margin > 0 ? Shade::Black : Shade::White);
  }
}

TEST(ConvexPolygon, RejectsBadInput) {
  auto code_of = [](std::vector<Point> v) {
    try {
      convex_polygon_script(v, DiskModel::Open);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code_of({{0, 0}, {1, 0}}), ErrorCode::NonConvexInput);
  EXPECT_EQ(code_of({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), ErrorCode::NonConvexInput);  // clockwise
  EXPECT_EQ(code_of({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), ErrorCode::NonConvexInput);
  EXPECT_EQ(code_of({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), ErrorCode::NonConvexInput);
}
