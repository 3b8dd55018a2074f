#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "quas/errors.hpp"
#include "quas/optimize.hpp"
#include "quas/rng.hpp"
#include "quas/scoring.hpp"
#include "quas/special.hpp"

using namespace quas;
using std::numbers::pi;

namespace {

DataPoint point(std::size_t size, double accuracy, double runtime, bool feasible = true) {
  DataPoint p;
  p.problem = "maxcut";
  p.backend = "sa";
  p.size = size;
  p.accuracy = accuracy;
  p.runtime = runtime;
  p.feasible = feasible;
  return p;
}

// Samples of the superellipse quadrant at angles spread over [0, pi/2].
std::vector<KpiPoint> superellipse(double a, double b, double p, std::size_t count) {
  std::vector<KpiPoint> pts;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = (pi / 2) * static_cast<double>(k) / (count - 1);
    pts.push_back({a * std::pow(std::cos(t), 2 / p), b * std::pow(std::sin(t), 2 / p)});
  }
  return pts;
}

// Builds a group whose normalized points are exactly `pts` by mapping them to
// raw (accuracy, runtime) with anchors at both ends of each axis.
SizeGroup group_from_normalized(const std::vector<KpiPoint>& pts) {
  std::vector<DataPoint> raw;
  for (const auto& q : pts) raw.push_back(point(5, 0.5 + 0.5 * q.accuracy, 1.0 / (1.0 + q.speed)));
  auto groups = build_groups(raw);
  REQUIRE(groups.size() == 1);
  return groups.front();
}

}  // namespace

TEST_CASE("build_groups drops points below the accuracy floor") {
  const std::vector<DataPoint> pts{point(4, 0.4, 1.0), point(4, 0.6, 0.5), point(4, 0.9, 0.25)};
  const auto groups = build_groups(pts);
  REQUIRE(groups.size() == 1);
  REQUIRE(groups[0].retained.size() == 2);
  CHECK(groups[0].retained[0].accuracy == 0.6);
  CHECK(groups[0].retained[1].accuracy == 0.9);
  CHECK(groups[0].speeds == std::vector<double>{2.0, 4.0});

  CHECK(build_groups({}).empty());
  const std::vector<DataPoint> infeasible{point(4, 1.0, 1.0, false)};
  CHECK(build_groups(infeasible).empty());

  const std::vector<DataPoint> single{point(7, 0.8, 1.0)};
  CHECK(build_groups(single).front().degenerate());
}

TEST_CASE("axis normalization and offset") {
  const std::vector<double> v{2, 4, 6};
  const auto axis = fit_axis(v);
  CHECK(axis.normalize(2) == 0.0);
  CHECK(axis.normalize(4) == 0.5);
  CHECK(axis.normalize(6) == 1.0);
  CHECK(axis.offset == 0.5);

  // range 1 < min 10: alpha = 10 capped at 1
  const std::vector<double> narrow{10, 11};
  CHECK(fit_axis(narrow).offset == 1.0);

  const std::vector<double> flat{3, 3, 3};
  const auto degenerate = fit_axis(flat);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.offset == 1.0);
  CHECK(degenerate.normalize(3) == 1.0);
}

TEST_CASE("normalized coordinates lie in the unit square") {
  SplitMix64 rng(5);
  std::vector<DataPoint> pts;
  for (int i = 0; i < 300; ++i) {
    pts.push_back(point(4 + i % 3, rng.uniform(0, 1.3), rng.uniform(1e-6, 2)));
  }
  for (const auto& g : build_groups(pts)) {
    for (const auto& p : g.retained) CHECK(p.accuracy >= 0.5);
    for (const auto& q : g.normalized) {
      CHECK(q.speed >= 0.0);
      CHECK(q.speed <= 1.0);
      CHECK(q.accuracy >= 0.0);
      CHECK(q.accuracy <= 1.0);
    }
  }
}

TEST_CASE("pareto_front examples") {
  const std::vector<KpiPoint> pts{{0.1, 0.9}, {0.2, 0.8}, {0.05, 0.7}};
  CHECK(pareto_front(pts) == std::vector<KpiPoint>{{0.1, 0.9}, {0.2, 0.8}});

  const std::vector<KpiPoint> one{{0.3, 0.3}};
  CHECK(pareto_front(one) == one);

  const std::vector<KpiPoint> dup{{0.5, 0.5}, {0.5, 0.5}, {0.2, 0.5}};
  CHECK(pareto_front(dup) == std::vector<KpiPoint>{{0.5, 0.5}});
}

TEST_CASE("pareto_front matches the pairwise dominance oracle") {
  SplitMix64 rng(2024);
  for (int set = 0; set < 100; ++set) {
    std::vector<KpiPoint> pts;
    for (int i = 0; i < 200; ++i) {
      // Coarse grid on some sets to exercise ties.
      double u = rng.uniform01(), v = rng.uniform01();
      if (set % 3 == 0) {
        u = std::round(u * 10) / 10;
        v = std::round(v * 10) / 10;
      }
      pts.push_back({u, v});
    }
    const auto front = pareto_front(pts);
    CHECK(front == oracle::pareto_quadratic(pts));
    CHECK(pareto_front(front) == front);
  }
}

TEST_CASE("gamma") {
  CHECK(quas::gamma(1.0) == 1.0);
  CHECK(quas::gamma(5.0) == 24.0);
  CHECK(quas::gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-12));
  CHECK(quas::gamma(1.5) == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-12));
  for (double x = 0.05; x < 30; x *= 1.37) {
    CHECK(std::abs(quas::gamma(x) / std::tgamma(x) - 1) < 1e-10);
  }
  CHECK_THROWS_AS(quas::gamma(0.0), DomainError);
  CHECK_THROWS_AS(quas::gamma(-1.5), DomainError);
}

TEST_CASE("quadrant_area") {
  CHECK(std::abs(quadrant_area(1, 1, 2) - pi / 4) < 1e-9);
  CHECK(std::abs(quadrant_area(1, 1, 1) - 0.5) < 1e-12);
  CHECK(quadrant_area(2, 3, 2) == doctest::Approx(6 * pi / 4));
  for (double p : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    CHECK(std::abs(quadrant_area(1, 1, p) - oracle::lame_quadrature(p)) < 1e-6);
  }
  CHECK_THROWS_AS(quadrant_area(0, 1, 2), DomainError);
  CHECK_THROWS_AS(quadrant_area(1, -1, 2), DomainError);
  CHECK_THROWS_AS(quadrant_area(1, 1, 0), DomainError);
}

TEST_CASE("nelder_mead") {
  const auto q = nelder_mead([](std::span<const double> x) { return (x[0] - 3) * (x[0] - 3); }, {0.0});
  CHECK(std::abs(q.argmin[0] - 3) < 1e-4);

  const auto bowl = nelder_mead([](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }, {1.0, 1.0});
  CHECK(std::abs(bowl.argmin[0]) < 1e-4);
  CHECK(std::abs(bowl.argmin[1]) < 1e-4);

  auto rosen = [](std::span<const double> x) {
    return 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]);
  };
  OptimizerSettings s;
  s.tol = 1e-14;
  const auto r = nelder_mead(rosen, {-1.2, 1.0}, s);
  CHECK(r.value < 1e-6);
  CHECK(r.iterations <= 500);

  OptimizerSettings capped;
  capped.max_evals = 20;
  CHECK(nelder_mead(rosen, {-1.2, 1.0}, capped).evaluations <= 20);

  CHECK_THROWS_AS(nelder_mead([](std::span<const double>) { return std::nan(""); }, {0.0}), OptimizerInitError);
}

TEST_CASE("fit_lame recovers synthetic curves") {
  const std::vector<KpiPoint> circle{{1, 0}, {0, 1}, {std::sqrt(0.5), std::sqrt(0.5)}, {0.6, 0.8}};
  const auto c = fit_lame(circle);
  CHECK(c.a == doctest::Approx(1).epsilon(0.01));
  CHECK(c.b == doctest::Approx(1).epsilon(0.01));
  CHECK(c.p == doctest::Approx(2).epsilon(0.01));
  CHECK(c.residual <= lame_residual(circle, 1, 1, 2));

  const std::vector<KpiPoint> line{{1, 0}, {0.5, 0.5}, {0, 1}};
  CHECK(fit_lame(line).p == doctest::Approx(1).epsilon(0.02));

  for (const auto& [a, b, p] : std::vector<std::array<double, 3>>{{1, 1, 2}, {1, 1, 1}, {0.8, 1.2, 4}}) {
    const auto fit = fit_lame(superellipse(a, b, p, 9));
    CHECK(fit.a == doctest::Approx(a).epsilon(0.02));
    CHECK(fit.b == doctest::Approx(b).epsilon(0.02));
    CHECK(fit.p == doctest::Approx(p).epsilon(0.02));
  }

  const std::vector<KpiPoint> one{{1, 1}};
  CHECK_THROWS_AS(fit_lame(one), InsufficientDataError);
}

TEST_CASE("fit_lame respects its bounds") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<KpiPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
    const auto front = pareto_front(pts);
    if (front.size() < 2) continue;
    const auto fit = fit_lame(front);
    CHECK(fit.a > 0);
    CHECK(fit.a <= 1.5);
    CHECK(fit.b > 0);
    CHECK(fit.b <= 1.5);
    CHECK(fit.p >= 0.1);
    CHECK(fit.p <= 20);
    CHECK(fit.residual <= lame_residual(front, 1, 1, 2) + 1e-15);
  }
}

TEST_CASE("size_score") {
  CHECK(offset_area(0.2, 0.1) == doctest::Approx(0.28));

  const auto group = group_from_normalized(superellipse(1, 1, 2, 7));
  CHECK(group.accuracy_axis.offset == 1.0);  // accuracies in [0.5, 1]: min/range = 1
  auto circle = size_score(group);
  CHECK(circle.area_curve == doctest::Approx(pi / 4).epsilon(1e-3));
  CHECK(circle.area == circle.area_curve + circle.area_offset);

  // Zero offsets need raw minima at zero, so the accuracy floor is lowered to 0.
  std::vector<DataPoint> raw;
  for (const auto& q : superellipse(1, 1, 2, 7)) raw.push_back(point(5, q.accuracy, 1.0 / (q.speed + 1e-300)));
  std::vector<SizeGroup> zero_offset = build_groups(raw, 0.0);
  REQUIRE(zero_offset.size() == 1);
  const auto pure = size_score(zero_offset.front());
  CHECK(pure.area_offset == doctest::Approx(0.0).epsilon(1e-9).scale(1));
  CHECK(pure.area == doctest::Approx(pi / 4).epsilon(1e-3));

  const std::vector<DataPoint> single{point(9, 0.9, 1.0)};
  const auto lone = size_score(build_groups(single).front());
  CHECK(lone.area == 0.0);
  CHECK_FALSE(lone.fit.has_value());
}

TEST_CASE("a dominating measurement scores as the limiting rectangle") {
  const std::vector<DataPoint> pts{point(6, 1.0, 0.1), point(6, 0.7, 0.5), point(6, 0.8, 0.3)};
  const auto s = size_score(build_groups(pts).front());
  REQUIRE(s.fit);
  CHECK(s.fit->kind == FitKind::single_point);
  CHECK(s.fit->a == 1.0);
  CHECK(s.fit->b == 1.0);
  CHECK(s.front_points == 1);
  CHECK(s.area_curve == doctest::Approx(quadrant_area(1, 1, 20)));
  CHECK(s.area > 0.9);
}

TEST_CASE("total_score") {
  std::vector<SizeScore> scores(3);
  for (std::size_t i = 0; i < 3; ++i) {
    scores[i].size = 4 + i;
    scores[i].area = 0.5 + 0.1 * i;
  }
  CHECK(total_score(scores).total == doctest::Approx(1.8));
  CHECK(total_score({}).total == 0.0);

  auto dup = scores;
  dup[2].size = 4;
  CHECK_THROWS_AS(total_score(dup), AggregationError);

  auto more = scores;
  more.push_back({});
  more.back().size = 10;
  more.back().area = 0.01;
  CHECK(total_score(more).total > total_score(scores).total);

  std::reverse(scores.begin(), scores.end());
  const auto sorted = total_score(scores);
  CHECK(sorted.sizes.front().size == 4);
  double sum = 0;
  for (const auto& s : sorted.sizes) sum += s.area;
  CHECK(sorted.total == sum);
}

TEST_CASE("dominated or below-floor insertions leave the score bit-identical") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<DataPoint> base;
    for (int i = 0; i < 12; ++i) base.push_back(point(8, rng.uniform(0.5, 1.2), rng.uniform(0.01, 1.0)));
    const auto g0 = build_groups(base).front();
    const auto s0 = size_score(g0);

    auto below = base;
    below.insert(below.begin() + trial % 12, point(8, rng.uniform(0, 0.4999), rng.uniform(1e-5, 10)));
    auto dominated = base;
    // The slowest, least accurate corner of the group's ranges.
    dominated.push_back(point(8, g0.accuracy_axis.min, 1.0 / g0.speed_axis.min));

    for (const auto& variant : {below, dominated}) {
      const auto g1 = build_groups(variant).front();
      const auto s1 = size_score(g1);
      CHECK(g1.accuracy_axis.min == g0.accuracy_axis.min);
      CHECK(g1.accuracy_axis.range == g0.accuracy_axis.range);
      CHECK(g1.speed_axis.min == g0.speed_axis.min);
      CHECK(g1.speed_axis.range == g0.speed_axis.range);
      CHECK(pareto_front(g1.normalized) == pareto_front(g0.normalized));
      CHECK(s1.fit->a == s0.fit->a);
      CHECK(s1.fit->b == s0.fit->b);
      CHECK(s1.fit->p == s0.fit->p);
      CHECK(s1.area == s0.area);
    }
  }
}

TEST_CASE("interior dominated insertions leave the score bit-identical") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<DataPoint> base;
    for (int i = 0; i < 10; ++i) base.push_back(point(6, rng.uniform(0.5, 1.0), rng.uniform(0.01, 1.0)));
    const auto g0 = build_groups(base).front();
    const auto s0 = size_score(g0);
    // Pick any retained point and insert a copy that is slower and less accurate, clipped to the ranges.
    const auto& pick = base[trial % base.size()];
    const double acc = std::max(g0.accuracy_axis.min, pick.accuracy - rng.uniform(0, 0.2));
    const double runtime = std::min(1.0 / g0.speed_axis.min, pick.runtime * rng.uniform(1.0, 3.0));
    auto extended = base;
    extended.push_back(point(6, acc, runtime));
    const auto g1 = build_groups(extended).front();
    const auto s1 = size_score(g1);
    CHECK(g1.accuracy_axis.offset == g0.accuracy_axis.offset);
    CHECK(g1.speed_axis.offset == g0.speed_axis.offset);
    CHECK(pareto_front(g1.normalized) == pareto_front(g0.normalized));
    CHECK(s1.area == s0.area);
  }
}

TEST_CASE("fronts closer to the corner fit a larger p and area") {
  for (double p_lo : {1.0, 1.5, 2.0, 3.0}) {
    const double p_hi = p_lo * 1.8;
    const auto lo = fit_lame(superellipse(1, 1, p_lo, 8));
    const auto hi = fit_lame(superellipse(1, 1, p_hi, 8));
    CHECK(hi.p > lo.p);
    CHECK(quadrant_area(hi.a, hi.b, hi.p) > quadrant_area(lo.a, lo.b, lo.p));
  }
}

TEST_CASE("raising the accuracy weight never shrinks the curve area") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<DataPoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(point(5, rng.uniform(0.5, 1.0), rng.uniform(0.01, 1.0)));
    const auto g = build_groups(pts).front();
    double previous = -1;
    for (double w : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const auto s = size_score(g, {w, 1.0});
      CHECK(s.area_curve >= previous);
      CHECK(s.area >= 0.0);
      previous = s.area_curve;
    }
  }
}
