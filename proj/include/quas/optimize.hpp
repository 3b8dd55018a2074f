#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace quas {

struct OptimizerSettings {
  std::size_t max_iter = 500;
  std::size_t max_evals = 0;  // 0 = unlimited
  double tol = 1e-8;          // stop when f(worst) - f(best) < tol
  double x_tol = 1e-6;        // ... and every vertex lies within x_tol of the best (max norm)
  double initial_step = 0.1;  // offset of the initial simplex along each axis
};

struct OptimizeResult {
  std::vector<double> argmin;
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free simplex minimization with the classic coefficients
/// (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
/// Throws OptimizerInitError if the objective is not finite at the start.
OptimizeResult nelder_mead(const Objective& objective, std::vector<double> start,
                           const OptimizerSettings& settings = {});

}  // namespace quas
