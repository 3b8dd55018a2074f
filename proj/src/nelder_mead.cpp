#include <algorithm>
#include <cmath>
#include <numeric>

#include "quas/errors.hpp"
#include "quas/optimize.hpp"

namespace quas {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> x;
  double f;
};

// Non-finite values sort last so the simplex walks away from them.
double ordered(double f) { return std::isfinite(f) ? f : std::numeric_limits<double>::infinity(); }

}  // namespace

OptimizeResult nelder_mead(const Objective& objective, std::vector<double> start, const OptimizerSettings& settings) {
  const std::size_t dim = start.size();
  OptimizeResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return ordered(objective(x));
  };
  auto out_of_evals = [&] { return settings.max_evals != 0 && result.evaluations >= settings.max_evals; };

  const double f0 = objective(start);
  ++result.evaluations;
  if (!std::isfinite(f0)) throw OptimizerInitError("objective is not finite at the start point");

  std::vector<Vertex> simplex;
  simplex.push_back({start, f0});
  for (std::size_t i = 0; i < dim && !out_of_evals(); ++i) {
    std::vector<double> x = start;
    x[i] += settings.initial_step;
    simplex.push_back({x, eval(x)});
  }
  if (simplex.size() < dim + 1) {
    // Evaluation budget ran out while building the simplex.
    const auto& best = *std::min_element(simplex.begin(), simplex.end(),
                                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    result.argmin = best.x;
    result.value = best.f;
    return result;
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::vector<double> centroid(dim), trial(dim);
  auto along = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
    std::vector<double> x(dim);
    for (std::size_t k = 0; k < dim; ++k) x[k] = from[k] + t * (to[k] - from[k]);
    return x;
  };

  while (true) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    // A simplex straddling the minimum can have equal values at every vertex,
    // so the value spread alone is not enough.
    double size = 0.0;
    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t k = 0; k < dim; ++k) size = std::max(size, std::abs(simplex[v].x[k] - simplex[0].x[k]));
    }
    if (simplex.back().f - simplex.front().f < settings.tol && size <= settings.x_tol) {
      result.converged = true;
      break;
    }
    if (result.iterations >= settings.max_iter || out_of_evals()) break;
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[v].x[k];
    }
    for (auto& c : centroid) c /= static_cast<double>(dim);

    Vertex& worst = simplex.back();
    const double f_best = simplex.front().f;
    const double f_second_worst = simplex[dim - 1].f;

    Vertex reflected{along(centroid, worst.x, -kReflect), 0.0};
    reflected.f = eval(reflected.x);

    if (reflected.f < f_best) {
      if (out_of_evals()) {
        worst = std::move(reflected);
        continue;
      }
      Vertex expanded{along(centroid, worst.x, -kExpand), 0.0};
      expanded.f = eval(expanded.x);
      worst = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
      continue;
    }
    if (reflected.f < f_second_worst) {
      worst = std::move(reflected);
      continue;
    }
    if (out_of_evals()) {
      if (reflected.f < worst.f) worst = std::move(reflected);
      continue;
    }

    const bool outside = reflected.f < worst.f;
    Vertex contracted{outside ? along(centroid, reflected.x, kContract) : along(centroid, worst.x, kContract), 0.0};
    contracted.f = eval(contracted.x);
    if (contracted.f < (outside ? reflected.f : worst.f)) {
      worst = std::move(contracted);
      continue;
    }

    for (std::size_t v = 1; v <= dim && !out_of_evals(); ++v) {
      simplex[v].x = along(simplex.front().x, simplex[v].x, kShrink);
      simplex[v].f = eval(simplex[v].x);
    }
  }

  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  result.argmin = simplex.front().x;
  result.value = simplex.front().f;
  return result;
}

}  // namespace quas
