#include "quas/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "quas/errors.hpp"

namespace quas {

AxisScale fit_axis(std::span<const double> values) {
  AxisScale s;
  if (values.empty()) return s;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  s.range = s.max - s.min;
  if (s.range < kDegenerateRange) {
    s.degenerate = true;
    s.offset = 1.0;
  } else {
    s.offset = std::min(s.min / s.range, 1.0);
  }
  return s;
}

std::vector<SizeGroup> build_groups(std::span<const DataPoint> points, double min_accuracy) {
  std::map<std::size_t, SizeGroup> by_size;
  for (const auto& p : points) {
    if (!p.feasible || !(p.accuracy >= min_accuracy)) continue;
    auto& g = by_size[p.size];
    g.size = p.size;
    g.retained.push_back(p);
    g.speeds.push_back(1.0 / std::max(p.runtime, kRuntimeFloor));
  }

  std::vector<SizeGroup> groups;
  groups.reserve(by_size.size());
  for (auto& [size, g] : by_size) {
    std::vector<double> accuracies;
    accuracies.reserve(g.retained.size());
    for (const auto& p : g.retained) accuracies.push_back(p.accuracy);
    g.accuracy_axis = fit_axis(accuracies);
    g.speed_axis = fit_axis(g.speeds);
    for (std::size_t i = 0; i < g.retained.size(); ++i) {
      g.normalized.push_back({g.speed_axis.normalize(g.speeds[i]), g.accuracy_axis.normalize(accuracies[i])});
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

std::vector<KpiPoint> pareto_front(std::span<const KpiPoint> points) {
  std::vector<KpiPoint> sorted(points.begin(), points.end());
  // Fastest first; among equal speed, most accurate first. A point survives
  // only if it is strictly more accurate than everything faster or equal.
  std::sort(sorted.begin(), sorted.end(), [](const KpiPoint& x, const KpiPoint& y) {
    return x.speed != y.speed ? x.speed > y.speed : x.accuracy > y.accuracy;
  });
  std::vector<KpiPoint> front;
  for (const auto& p : sorted) {
    if (front.empty() || p.accuracy > front.back().accuracy) front.push_back(p);
  }
  std::reverse(front.begin(), front.end());
  return front;
}

double lame_residual(std::span<const KpiPoint> points, double a, double b, double p) {
  double r = 0.0;
  for (const auto& pt : points) {
    const double e = std::pow(std::abs(pt.speed / a), p) + std::pow(std::abs(pt.accuracy / b), p) - 1.0;
    r += e * e;
  }
  return r;
}

namespace {

struct LameParams {
  double a, b, p;
};

// Optimizer coordinates are (log a, log b, log p); bounds are applied on the way out.
LameParams from_log(std::span<const double> x, const LameBounds& bounds) {
  constexpr double kFloor = 1e-9;
  return {std::clamp(std::exp(x[0]), kFloor, bounds.a_max), std::clamp(std::exp(x[1]), kFloor, bounds.a_max),
          std::clamp(std::exp(x[2]), bounds.p_min, bounds.p_max)};
}

}  // namespace

LameFit fit_lame(std::span<const KpiPoint> front, const FitSettings& settings) {
  if (front.size() < 2) throw InsufficientDataError("a Lame fit needs at least two front points");

  auto objective = [&](std::span<const double> x) {
    const LameParams q = from_log(x, settings.bounds);
    return lame_residual(front, q.a, q.b, q.p);
  };

  std::vector<double> start{0.0, 0.0, std::log(2.0)};
  OptimizeResult best = nelder_mead(objective, start, settings.optimizer);
  for (std::size_t r = 0; r < settings.restarts; ++r) {
    OptimizeResult again = nelder_mead(objective, best.argmin, settings.optimizer);
    if (!(again.value < best.value)) break;
    best = std::move(again);
  }

  const LameParams q = from_log(best.argmin, settings.bounds);
  return LameFit{q.a, q.b, q.p, lame_residual(front, q.a, q.b, q.p), front.size(), FitKind::least_squares};
}

double offset_area(double accuracy_offset, double speed_offset) noexcept {
  return accuracy_offset + speed_offset - accuracy_offset * speed_offset;
}

SizeScore size_score(const SizeGroup& group, const Weights& weights, const FitSettings& settings) {
  SizeScore s;
  s.size = group.size;
  s.accuracy_axis = group.accuracy_axis;
  s.speed_axis = group.speed_axis;
  s.retained_points = group.retained.size();
  if (group.degenerate()) return s;

  const std::vector<KpiPoint> front = pareto_front(group.normalized);
  s.front_points = front.size();
  if (front.size() == 1) {
    s.fit = LameFit{front[0].speed, front[0].accuracy, settings.bounds.p_max, 0.0, 1, FitKind::single_point};
  } else {
    s.fit = fit_lame(front, settings);
  }
  const double scaled_a = weights.speed * s.fit->a;
  const double scaled_b = weights.accuracy * s.fit->b;
  if (scaled_a > 0.0 && scaled_b > 0.0) s.area_curve = quadrant_area(scaled_a, scaled_b, s.fit->p);
  s.area_offset = offset_area(group.accuracy_axis.offset, group.speed_axis.offset);
  s.area = s.area_curve + s.area_offset;
  return s;
}

QuasReport total_score(std::vector<SizeScore> size_scores, const Weights& weights, nlohmann::json configuration) {
  std::sort(size_scores.begin(), size_scores.end(),
            [](const SizeScore& x, const SizeScore& y) { return x.size < y.size; });
  for (std::size_t i = 1; i < size_scores.size(); ++i) {
    if (size_scores[i].size == size_scores[i - 1].size) {
      throw AggregationError("duplicate score for size " + std::to_string(size_scores[i].size));
    }
  }
  QuasReport report;
  report.weights = weights;
  report.configuration = std::move(configuration);
  for (const auto& s : size_scores) report.total += s.area;
  report.sizes = std::move(size_scores);
  return report;
}

}  // namespace quas
