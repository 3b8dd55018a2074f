#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "quas/optimize.hpp"
#include "quas/special.hpp"

namespace quas {

inline constexpr double kMinAccuracy = 0.5;
inline constexpr double kRuntimeFloor = 1e-9;      // seconds
inline constexpr double kDegenerateRange = 1e-12;  // axis range treated as zero

/// One benchmark measurement.
struct DataPoint {
  std::string problem;
  std::size_t size = 0;
  std::size_t instance_index = 0;
  std::string backend;
  double accuracy = 0.0;
  double runtime = 0.0;  // seconds, solver wall-time
  double raw_value = 0.0;
  double heuristic_value = 0.0;
  bool feasible = true;
  std::uint64_t seed = 0;
  double heuristic_runtime = 0.0;  // logged only, never part of the runtime KPI

  friend bool operator==(const DataPoint&, const DataPoint&) = default;
};

/// A measurement in the fitted plane; both coordinates are higher-is-better.
struct KpiPoint {
  double speed = 0.0;
  double accuracy = 0.0;

  friend bool operator==(const KpiPoint&, const KpiPoint&) = default;
};

/// Min-max normalization of one KPI and the offset min / range, capped at 1.
/// A degenerate axis (range below 1e-12) maps every value to 1 with offset 1.
struct AxisScale {
  double min = 0.0;
  double max = 0.0;
  double range = 0.0;
  double offset = 0.0;
  bool degenerate = false;

  double normalize(double x) const noexcept { return degenerate ? 1.0 : (x - min) / range; }
};

AxisScale fit_axis(std::span<const double> values);

struct SizeGroup {
  std::size_t size = 0;
  std::vector<DataPoint> retained;
  std::vector<double> speeds;  // 1 / max(runtime, floor), parallel to retained
  AxisScale accuracy_axis;
  AxisScale speed_axis;
  std::vector<KpiPoint> normalized;  // parallel to retained

  bool degenerate() const noexcept { return retained.size() < 2; }
};

/// Drops infeasible points and points below `min_accuracy`, groups the rest by
/// size (ascending) and normalizes each group. Preserves input order within a group.
std::vector<SizeGroup> build_groups(std::span<const DataPoint> points, double min_accuracy = kMinAccuracy);

/// Points not dominated by any other (>= on both axes, > on one). Duplicates
/// collapse to one; output is sorted by speed ascending.
std::vector<KpiPoint> pareto_front(std::span<const KpiPoint> points);

struct LameBounds {
  double a_max = 1.5;
  double p_min = 0.1;
  double p_max = 20.0;
};

struct FitSettings {
  LameBounds bounds;
  OptimizerSettings optimizer{500, 0, 1e-12, 1e-6, 0.1};
  std::size_t restarts = 2;  // re-seed the simplex at the previous optimum
};

enum class FitKind { least_squares, single_point };

/// Lame curve |x/a|^p + |y/b|^p = 1 with x on the speed axis and y on accuracy.
struct LameFit {
  double a = 1.0;
  double b = 1.0;
  double p = 2.0;
  double residual = 0.0;
  std::size_t points_used = 0;
  FitKind kind = FitKind::least_squares;
};

/// Sum over points of (|x/a|^p + |y/b|^p - 1)^2.
double lame_residual(std::span<const KpiPoint> points, double a, double b, double p);

/// Least-squares Lame fit in log-parameter space starting from (1, 1, 2).
/// Throws InsufficientDataError for fewer than two points.
LameFit fit_lame(std::span<const KpiPoint> front, const FitSettings& settings = {});

struct Weights {
  double accuracy = 1.0;
  double speed = 1.0;
};

struct SizeScore {
  std::size_t size = 0;
  std::optional<LameFit> fit;
  double area_curve = 0.0;
  double area_offset = 0.0;
  double area = 0.0;  // area_curve + area_offset
  AxisScale accuracy_axis;
  AxisScale speed_axis;
  std::size_t retained_points = 0;
  std::size_t front_points = 0;
};

/// Offset area in normalized space: a_acc + a_speed - a_acc * a_speed.
double offset_area(double accuracy_offset, double speed_offset) noexcept;

/// Curve area plus offset area for one size; zero when fewer than two points
/// were retained. A front that collapses to a single point means one
/// measurement dominates the group; it is scored as the limiting rectangle
/// (a = b = 1, p at its upper bound).
SizeScore size_score(const SizeGroup& group, const Weights& weights = {}, const FitSettings& settings = {});

struct QuasReport {
  std::vector<SizeScore> sizes;  // ascending by size
  double total = 0.0;
  Weights weights;
  nlohmann::json configuration = nlohmann::json::object();
};

/// Sums the per-size areas. Throws AggregationError on duplicate sizes.
QuasReport total_score(std::vector<SizeScore> size_scores, const Weights& weights = {},
                       nlohmann::json configuration = nlohmann::json::object());

}  // namespace quas
