#include <gtest/gtest.h>

#include <random>

#include "diskdraw/constructions.hpp"
#include "diskdraw/obstruction.hpp"

using namespace diskdraw;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point> ring(Point c, double radius, int k, double phase = 0.0) {
  std::vector<Point> out;
  for (int i = 0; i < k; ++i) out.push_back(c + unit(phase + 2 * kPi * i / k) * radius);
  return out;
}

Coloring constant(Shade s) {
  return {[s](Point) { return s; }, "constant"};
}

}  // namespace

TEST(Encircles, Examples) {
  const std::vector<Point> T{{0, 0}};
  EXPECT_EQ(encircles(ring({0, 0}, 0.5, 4), T), Verdict::Yes);
  EXPECT_EQ(encircles(ring({0, 0}, 2.0, 4), T), Verdict::No);
  EXPECT_EQ(encircles(ring({0, 0}, 0.5, 4), std::vector<Point>{}), Verdict::Yes);
  EXPECT_EQ(encircles(std::vector<Point>{}, T), Verdict::No);
  // Three points on one side never encircle.
  EXPECT_EQ(encircles(std::vector<Point>{{0.1, 0.1}, {0.1, -0.1}, {0.2, 0}}, T), Verdict::No);
}

TEST(Encircles, CriticalRadiusOfRegularRing) {
  // Every open disk containing the centre of a ring of radius rho with many
  // points hits the ring once its radius exceeds rho.
  const auto S = ring({0, 0}, 0.5, 64);
  const double R = critical_radius(S, {0, 0});
  EXPECT_GT(R, 0.5 - 1e-9);
  EXPECT_LT(R, 0.5 / std::cos(kPi / 64) + 1e-9);
}

TEST(Encircles, UnionAndMonotonicity) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> U(-0.3, 0.3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto S = ring({U(rng), U(rng)}, 0.6 + U(rng), 5 + trial % 4, U(rng));
    const std::vector<Point> T1{{U(rng), U(rng)}}, T2{{U(rng), U(rng)}};
    std::vector<Point> both = T1;
    both.push_back(T2[0]);
    const Verdict a = encircles(S, T1), b = encircles(S, T2);
    if (a == Verdict::Yes && b == Verdict::Yes) EXPECT_EQ(encircles(S, both), Verdict::Yes);
    if (a == Verdict::No || b == Verdict::No) EXPECT_EQ(encircles(S, both), Verdict::No);
    std::vector<Point> bigger = S;
    bigger.push_back({U(rng), U(rng)});
    if (a == Verdict::Yes) EXPECT_EQ(encircles(bigger, T1), Verdict::Yes);
  }
}

TEST(Encircles, RigidMotionInvariance) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> S, T;
    for (int i = 0; i < 6; ++i) S.push_back({U(rng), U(rng)});
    for (int i = 0; i < 3; ++i) T.push_back({0.3 * U(rng), 0.3 * U(rng)});
    const double angle = 3 * U(rng);
    const Point shift{4 * U(rng), 4 * U(rng)};
    std::vector<Point> S2, T2;
    for (Point p : S) S2.push_back(rotate(p, angle) + shift);
    for (Point p : T) T2.push_back(rotate(p, angle) + shift);
    EXPECT_EQ(encircles(S, T), encircles(S2, T2));
    for (std::size_t i = 0; i < T.size(); ++i) {
      const double a = critical_radius(S, T[i]), b = critical_radius(S2, T2[i]);
      if (std::isinf(a)) {
        EXPECT_TRUE(std::isinf(b));
      } else {
        EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, a));
      }
    }
  }
}

TEST(Encircles, TouchingRadiusBracketsCriticalRadius) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto S = ring({0, 0}, 0.5 + 0.4 * std::abs(U(rng)), 3 + trial % 6, U(rng));
    const Point t{0.2 * U(rng), 0.2 * U(rng)};
    const double crit = critical_radius(S, t), touch = touching_radius(S, t);
    EXPECT_LE(touch, crit * (1 + 1e-9));
    EXPECT_GE(touch, 0.5 * crit * (1 - 1e-9));
  }
}

// Any stroke deciding a point t also covers part of every set encircling t.
TEST(Encircles, SoundOnRandomScripts) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> U(-2, 2);
  std::uniform_int_distribution<int> len(1, 7);
  int configurations = 0;
  for (int s = 0; s < 60; ++s) {
    std::vector<Stroke> strokes;
    for (int k = len(rng); k > 0; --k)
      strokes.push_back({strokes.size() % 2 == 0 ? Tool::Pencil : Tool::Eraser,
                         CenterSet({SinglePoint{{U(rng), U(rng)}}, SinglePoint{{U(rng), U(rng)}}})});
    const DrawingScript script(DiskModel::Open, strokes);
    for (int q = 0; q < 20; ++q) {
      const Point t{U(rng), U(rng)};
      const auto S = ring(t + Point{0.1 * U(rng), 0.1 * U(rng)}, 0.3 + 0.3 * std::abs(U(rng)),
                          5, U(rng));
      if (encircles(S, std::vector<Point>{t}) != Verdict::Yes) continue;
      int sn;
      try {
        sn = stationary_number(t, script);
      } catch (const Error&) {
        continue;
      }
      ++configurations;
      if (sn == 0) continue;
      const auto& deciding = script.strokes()[sn - 1].centers;
      bool hit = false;
      for (Point p : S) hit |= nbhd_contains_exact(p, deciding, DiskModel::Open);
      EXPECT_TRUE(hit);
    }
  }
  EXPECT_GE(configurations, 50);
}

TEST(Chessboard, StageOnePoints) {
  const auto stages = chessboard_stages(0.1, 0.5 * kPi / 180, 3);
  ASSERT_EQ(stages.size(), 3u);
  const Point a = stages[0].blacks[0];
  EXPECT_NEAR(a.x, 0.0999962, 1e-7);
  EXPECT_NEAR(a.y, 0.0008727, 1e-7);
  EXPECT_EQ(stages[0].blacks.size(), 4u);
  EXPECT_EQ(stages[0].whites.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(stages[1].blacks[i].x, stages[0].blacks[i].x / 2, 1e-15);
    EXPECT_NEAR(stages[2].whites[i].y, stages[0].whites[i].y / 4, 1e-15);
  }
}

TEST(Chessboard, ColoursAgreeWithBoard) {
  const Coloring c = chessboard_coloring(1.0);
  for (const auto& st : chessboard_stages(0.1, 0.5 * kPi / 180, 4)) {
    for (Point p : st.blacks) EXPECT_EQ(c.classify(p), Shade::Black);
    for (Point p : st.whites) EXPECT_EQ(c.classify(p), Shade::White);
  }
}

TEST(Chessboard, DescentHalvesEachStage) {
  const auto cert = descent_verify(chessboard_coloring(1.0), chessboard_stages(0.1, 0.5 * kPi / 180, 6));
  ASSERT_TRUE(cert.valid());
  std::vector<double> enc;
  for (const auto& c : cert.checks)
    if (c.kind == "enc") {
      EXPECT_EQ(c.verdict, Verdict::Yes);
      enc.push_back(c.clearance);
    }
  ASSERT_EQ(enc.size(), 5u);
  for (std::size_t i = 1; i < enc.size(); ++i) EXPECT_NEAR(enc[i] / enc[i - 1], 0.5, 1e-6);
}

TEST(Chessboard, TouchingRadiusTendsToClosedForm) {
  // As the rotation vanishes, the circle through a stage-2 white and two
  // stage-1 blacks approaches radius sqrt(10) r / 4.
  const double r = 0.1;
  const auto stages = chessboard_stages(r, 1e-5, 2);
  EXPECT_NEAR(encirclement_clearance(stages[0].blacks, stages[1].whites), std::sqrt(10.0) * r / 4,
              1e-5);
  // The critical radius itself is r: the blacks are concyclic about the origin.
  double crit = 0.0;
  for (Point w : stages[1].whites) crit = std::max(crit, critical_radius(stages[0].blacks, w));
  EXPECT_NEAR(crit, r, 1e-9);
}

TEST(Chessboard, RecolouredStageIsMisclassified) {
  auto stages = chessboard_stages(0.1, 0.5 * kPi / 180, 3);
  std::swap(stages[1].blacks, stages[1].whites);
  const auto cert = descent_verify(chessboard_coloring(1.0), stages);
  ASSERT_FALSE(cert.valid());
  EXPECT_EQ(cert.failure->kind, FailureKind::MisclassifiedPoint);
  EXPECT_EQ(cert.failure->stage, stages[1].stage_index);
}

TEST(Chessboard, SingleStageIsValid) {
  const auto cert = descent_verify(chessboard_coloring(1.0), chessboard_stages(0.1, 0.01, 1));
  EXPECT_TRUE(cert.valid());
}

TEST(FiveCircles, SmallCircleClosedForm) {
  const StageParams p;  // n = 12, L = 3, s = 1e-3, t = s^1.5
  const auto R = five_circle_radii(p);
  EXPECT_NEAR(R.R_a, (std::sqrt(p.s) + std::pow(p.s, 1.5)) / 2, 1e-12);
  EXPECT_NEAR(R.R_a, 0.015827, 1e-6);
  EXPECT_LT(R.R_c, R.R_d);
  EXPECT_LT(R.max(), 1.0);
}

TEST(FiveCircles, ConvergeToHalfChord) {
  StageParams p;
  p.L = 3.348025;
  const double limit = p.L * std::tan(kPi / p.n);
  double prev = 1.0;
  for (double s : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
    p.s = s;
    p.t = std::pow(s, 1.5);
    const double gap = std::abs(five_circle_radii(p).max() - limit);
    EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(FiveCircles, RejectsFarStages) {
  StageParams p;
  p.L = 3.9;
  try {
    dissection_stages(p, {0, 0}, 0.0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RadiiTooLarge);
  }
}

TEST(Dissection, StageLayout) {
  const StageParams p;
  const auto stages = dissection_stages(p, {1, 2}, 0.3, 3);
  ASSERT_EQ(stages.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(stages[i].blacks.size(), 2u * p.n);
    // Adjacent black/white pair straddles the ray at distance 2 t_i.
    const double t_i = p.t * std::pow(std::ldexp(1.0, -i), 1.5);
    EXPECT_NEAR(distance(stages[i].blacks[0], stages[i].whites[0]), 2 * t_i, 1e-15);
  }
  const auto cert = descent_verify(
      {[&](Point x) {
         // Colour by the angular sector about the apex.
         const double a = wrap_angle(std::atan2(x.y - 2, x.x - 1) - 0.3);
         return static_cast<int>(a / (2 * kPi / p.n)) % 2 == 0 ? Shade::Black : Shade::White;
       },
       "sectors"},
      stages);
  EXPECT_TRUE(cert.valid());
}

TEST(Dissection, UndrawabilityBound) {
  EXPECT_NEAR(undrawability_bound(12), 2 + std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(undrawability_bound(4), 1.0, 1e-12);
  EXPECT_NEAR(undrawability_bound(8), 1 + std::sqrt(2.0), 1e-12);
  for (int n : {2, 3, 7}) {
    try {
      undrawability_bound(n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidN);
    }
  }
}

TEST(Dissection, SampleCheck) {
  const DissectionSpec spec{{0, 0}, 4, 0.1, 0.9, 0.5, 0.0, true};
  EXPECT_TRUE(dissection_sample_check(chessboard_coloring(1.0), spec, 100));
  const auto bad = dissection_sample_check(constant(Shade::White), spec, 100);
  EXPECT_FALSE(bad);
  EXPECT_FALSE(bad.failure.empty());
  // The opposite side convention does not match the board.
  DissectionSpec flipped = spec;
  flipped.first_ccw = false;
  EXPECT_FALSE(dissection_sample_check(chessboard_coloring(1.0), flipped, 100));
}
