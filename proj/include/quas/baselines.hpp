#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "quas/problems.hpp"

namespace quas {

/// Pinned classical reference solver configuration. Every data point carries
/// the identity string so accuracies are only compared under the same heuristic.
struct HeuristicSettings {
  /// Improving moves allowed per restart; 0 selects 50 * n.
  std::size_t iterations_per_restart = 0;
  std::size_t restarts = 10;

  std::size_t budget_for(std::size_t n) const noexcept {
    return iterations_per_restart == 0 ? 50 * n : iterations_per_restart;
  }
};

struct HeuristicResult {
  double value = 0.0;  // S_heur
  Candidate candidate;
  std::size_t budget_used = 0;
  double elapsed = 0.0;  // seconds
};

/// Max-Cut: steepest single-flip local search; Ising: greedy single-spin
/// descent; TSP: nearest-neighbour tour improved by 2-opt. Best of all
/// restarts, deterministic per seed.
HeuristicResult heuristic_solve(const ProblemInstance& instance, const HeuristicSettings& settings,
                                std::uint64_t seed);

std::string heuristic_identity(ProblemKind kind, const HeuristicSettings& settings);

/// Relative accuracy 1 - (S_heur - S) / |S_heur| for maximization, with the
/// sign of the gap flipped for minimization, clamped below at 0.
/// Throws DegenerateBaselineError when s_heur == 0.
double accuracy(double s, double s_heur, Direction direction);

struct AccuracyRecord {
  double s = 0.0;
  double s_heur = 0.0;
  Direction direction = Direction::maximize;
  double accuracy = 0.0;
  bool degenerate_baseline = false;
};

/// accuracy() with the documented fallbacks applied: infeasible solutions
/// score 0, and a zero baseline scores 1 if s == 0 and 0 otherwise.
AccuracyRecord score_accuracy(double s, double s_heur, Direction direction, bool feasible = true);

}  // namespace quas
