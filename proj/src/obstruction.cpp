#include "diskdraw/obstruction.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace diskdraw {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Boundary: return "boundary";
  }
  return "?";
}

const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::MisclassifiedPoint: return "MisclassifiedPoint";
    case FailureKind::BoundaryPoint: return "BoundaryPoint";
    case FailureKind::EncirclementFailed: return "EncirclementFailed";
  }
  return "?";
}

Verdict encircles(std::span<const Point> S, std::span<const Point> T, Tolerance tol) {
  if (T.empty()) return Verdict::Yes;
  if (S.empty()) return Verdict::No;
  const double tau = tol.value();
  bool all_yes = true;
  for (const Point& t : T) {
    if (constrained_largest_empty_circle(S, t, 1.0).clearance < 1.0 - tau) continue;
    all_yes = false;
    const EmptyCircle w = constrained_largest_empty_circle(S, t, 1.0 - 2.0 * tau);
    if (distance(w.center, t) < 1.0 - tau && w.clearance > 1.0 + tau) return Verdict::No;
  }
  return all_yes ? Verdict::Yes : Verdict::Boundary;
}

double critical_radius(std::span<const Point> S, Point t) {
  if (S.empty()) return std::numeric_limits<double>::infinity();
  auto h = [&](double R) { return constrained_largest_empty_circle(S, t, R).clearance; };
  // h(R) - R is non-increasing; R* is where it crosses zero.
  const double f0 = h(0.0);
  if (f0 == 0.0) return 0.0;
  double lo = 0.0;
  double hi = f0;
  constexpr double kHuge = 1e12;
  while (h(hi) >= hi) {
    lo = hi;
    hi *= 2.0;
    if (hi > kHuge * std::max(1.0, f0)) return std::numeric_limits<double>::infinity();
  }
  for (int i = 0; i < 80 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) >= mid ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double touching_radius(std::span<const Point> S, Point t) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> angles;
  for (const Point& s : S) {
    if (s == t) return 0.0;
    angles.push_back(std::atan2(s.y - t.y, s.x - t.x));
  }
  if (angles.size() < 3) return inf;
  std::sort(angles.begin(), angles.end());
  double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  if (gap >= std::numbers::pi) return inf;

  // Strictly inside the hull: the maximal circle through t passes through two
  // points of S as well.
  double best = 0.0;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      Circle c;
      try {
        c = circumcircle3(t, S[i], S[j]);
      } catch (const Error&) {
        continue;
      }
      if (c.radius <= best) continue;
      if (clearance_at(c.center, S) >= c.radius * (1.0 - 1e-12)) best = c.radius;
    }
  return best;
}

double encirclement_clearance(std::span<const Point> S, std::span<const Point> T) {
  double worst = 0.0;
  for (const Point& t : T) worst = std::max(worst, touching_radius(S, t));
  return worst;
}

namespace {

double max_critical(std::span<const Point> S, std::span<const Point> T) {
  double worst = 0.0;
  for (const Point& t : T) worst = std::max(worst, critical_radius(S, t));
  return worst;
}

}  // namespace

std::vector<StageCheck> encirclement_checks(const std::vector<StageFamily>& stages,
                                            Tolerance tol) {
  std::vector<StageCheck> out;
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    const auto& cur = stages[i];
    const auto& next = stages[i + 1];
    const Verdict v1 = encircles(cur.blacks, next.whites, tol);
    const Verdict v2 = encircles(cur.whites, next.blacks, tol);
    const Verdict v = v1 == Verdict::Yes && v2 == Verdict::Yes ? Verdict::Yes
                      : v1 == Verdict::No || v2 == Verdict::No ? Verdict::No
                                                               : Verdict::Boundary;
    const double c = std::max(encirclement_clearance(cur.blacks, next.whites),
                              encirclement_clearance(cur.whites, next.blacks));
    const double k = std::max(max_critical(cur.blacks, next.whites),
                              max_critical(cur.whites, next.blacks));
    out.push_back({cur.stage_index, "enc", v, c, k});
  }
  return out;
}

DescentCertificate descent_verify(const Coloring& coloring, std::vector<StageFamily> stages,
                                  Tolerance tol) {
  DescentCertificate cert;
  cert.stages = std::move(stages);
  if (cert.stages.empty()) throw Error(ErrorCode::InvalidParameters, "no stages to verify");

  for (const auto& st : cert.stages) {
    auto check_all = [&](const std::vector<Point>& pts, Shade want) {
      for (const Point& p : pts) {
        const Shade got = coloring.classify(p);
        if (got == want) continue;
        const FailureKind kind =
            got == Shade::Boundary ? FailureKind::BoundaryPoint : FailureKind::MisclassifiedPoint;
        return std::optional<DescentFailure>{DescentFailure{
            kind, st.stage_index,
            "point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") is " +
                to_string(got) + ", expected " + to_string(want)}};
      }
      return std::optional<DescentFailure>{};
    };
    auto bad = check_all(st.blacks, Shade::Black);
    if (!bad) bad = check_all(st.whites, Shade::White);
    cert.checks.push_back({st.stage_index, "colors", bad ? Verdict::No : Verdict::Yes, 0.0, 0.0});
    if (bad && !cert.failure) cert.failure = bad;
  }
  if (cert.failure) return cert;

  for (const auto& c : encirclement_checks(cert.stages, tol)) {
    cert.checks.push_back(c);
    if (c.verdict != Verdict::Yes && !cert.failure)
      cert.failure = DescentFailure{FailureKind::EncirclementFailed, c.stage,
                                    "stage " + std::to_string(c.stage) +
                                        " does not encircle the next stage (" +
                                        to_string(c.verdict) + ")"};
  }
  return cert;
}

std::vector<StageFamily> chessboard_stages(double r, double theta, int depth) {
  if (!(r > 0.0 && r < 1.0) || !(theta > 0.0 && theta < std::numbers::pi / 4) || depth < 1)
    throw Error(ErrorCode::InvalidParameters, "need 0 < r < 1, 0 < theta < pi/4, depth >= 1");
  auto four = [](Point a) {
    const Point b{a.y, a.x};
    return std::vector<Point>{a, b, -a, -b};
  };
  const auto blacks = four({r * std::cos(theta), r * std::sin(theta)});
  const auto whites = four({r * std::cos(theta), -r * std::sin(theta)});
  std::vector<StageFamily> out;
  for (int i = 1; i <= depth; ++i) {
    const double k = std::ldexp(1.0, -(i - 1));
    StageFamily st;
    st.stage_index = i;
    for (Point p : blacks) st.blacks.push_back(p * k);
    for (Point p : whites) st.whites.push_back(p * k);
    out.push_back(std::move(st));
  }
  return out;
}

double FiveCircleRadii::max() const { return std::max({R_a, R_c, R_d, R_e}); }

namespace {

void check_params(const StageParams& p) {
  if (p.n < 4 || p.n % 2 != 0) throw Error(ErrorCode::InvalidParameters, "n must be even and >= 4");
  if (!(p.L > 0.0) || !(p.t > 0.0) || !(p.t < p.s) || !(p.s < 1.0))
    throw Error(ErrorCode::InvalidParameters, "need L > 0 and 0 < t < s < 1");
}

}  // namespace

FiveCircleRadii five_circle_radii(const StageParams& p) {
  check_params(p);
  const double half = std::numbers::pi / p.n;
  const double u = std::hypot(p.s, p.t);
  const double phi = std::atan2(p.t, p.s);
  const double base = p.L * std::sin(half);

  FiveCircleRadii r;
  r.R_a = trapezoid_circumradius(0.0, 2.0 * p.s, p.t);
  r.R_d = trapezoid_circumradius(2.0 * base, 2.0 * (base + u * std::sin(half + phi)),
                                 u * std::cos(half + phi));
  r.R_e = trapezoid_circumradius(2.0 * (base - u * std::sin(half - phi)),
                                 2.0 * (base + u * std::sin(half + phi)),
                                 2.0 * p.s * std::cos(half));

  // Bisector along +x, first ray at -pi/n; white points sit on the outer side.
  const Point e = unit(-half);
  const Point out{e.y, -e.x};
  const Point O1 = e * p.L;
  const Point O2{O1.x, -O1.y};
  const Point W1 = O1 - e * p.s + out * p.t;
  r.R_c = circumcircle3(W1, O1, O2).radius;
  if (!(r.R_c < r.R_d))
    throw Error(ErrorCode::ConstructionInconsistent, "expected R_c < R_d");
  return r;
}

std::vector<StageFamily> dissection_stages(const StageParams& p, Point apex, double phase,
                                           int depth, bool first_ccw, Tolerance tol) {
  const FiveCircleRadii radii = five_circle_radii(p);
  if (!(radii.max() < 1.0 - tol.value()))
    throw Error(ErrorCode::RadiiTooLarge,
                "largest stage circle has radius " + std::to_string(radii.max()));
  if (depth < 0) throw Error(ErrorCode::InvalidParameters, "depth must be >= 0");

  std::vector<StageFamily> out;
  for (int i = 0; i <= depth; ++i) {
    const double s = std::ldexp(p.s, -i);
    const double t = p.t * std::pow(s / p.s, 1.5);
    StageFamily st;
    st.stage_index = i;
    for (int j = 0; j < p.n; ++j) {
      const Point e = unit(phase + j * 2.0 * std::numbers::pi / p.n);
      const Point left = perp(e);
      const bool black_left = (j % 2 == 0) == first_ccw;
      const Point black_side = black_left ? left : -left;
      for (double along : {p.L - s, p.L + s}) {
        const Point base = apex + e * along;
        st.blacks.push_back(base + black_side * t);
        st.whites.push_back(base - black_side * t);
      }
    }
    out.push_back(std::move(st));
  }
  return out;
}

double default_stage_L(const DissectionSpec& spec) {
  return 0.5 * (spec.a + std::min(spec.b, undrawability_bound(spec.n)));
}

DissectionCheck dissection_sample_check(const Coloring& coloring, const DissectionSpec& spec,
                                        int samples_per_rect, Tolerance tol) {
  if (samples_per_rect < 1) throw Error(ErrorCode::InvalidParameters, "need at least one sample");
  if (spec.n < 2 || spec.n % 2 != 0) throw Error(ErrorCode::InvalidN, "n must be even");
  const double tau = tol.value();
  const int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples_per_rect))));
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> jitter(0.05, 0.95);

  const double x0 = spec.a + tau, x1 = spec.b - tau;
  const double y0 = tau, y1 = spec.d - tau;
  if (!(x1 > x0) || !(y1 > y0)) return {false, "rectangle is empty after shrinking"};

  for (int j = 0; j < spec.n; ++j) {
    const Point e = unit(spec.phase + j * 2.0 * std::numbers::pi / spec.n);
    const Point left = perp(e);
    const bool black_left = (j % 2 == 0) == spec.first_ccw;
    for (int side = 0; side < 2; ++side) {
      const bool is_left = side == 0;
      const Shade want = is_left == black_left ? Shade::Black : Shade::White;
      const Point normal = is_left ? left : -left;
      int taken = 0;
      for (int a = 0; a < k && taken < samples_per_rect; ++a) {
        for (int b = 0; b < k && taken < samples_per_rect; ++b, ++taken) {
          const double x = x0 + (x1 - x0) * (a + jitter(rng)) / k;
          const double y = y0 + (y1 - y0) * (b + jitter(rng)) / k;
          const Point q = spec.apex + e * x + normal * y;
          const Shade got = coloring.classify(q);
          if (got != want)
            return {false, "ray " + std::to_string(j + 1) + (is_left ? " left" : " right") +
                               " rectangle: (" + std::to_string(q.x) + ", " +
                               std::to_string(q.y) + ") is " + to_string(got) + ", expected " +
                               to_string(want)};
        }
      }
    }
  }
  return {};
}

double undrawability_bound(int n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::InvalidN, "n must be even and >= 4");
  return 1.0 / std::tan(std::numbers::pi / n);
}

}  // namespace diskdraw
