#include "quas/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "quas/errors.hpp"
#include "quas/rng.hpp"

namespace quas {
namespace {

struct LocalOptimum {
  std::vector<int> values;
  std::size_t moves = 0;
};

// Flip gain for Max-Cut: vertex v switching sides changes the cut by
// (weight to same side) - (weight to other side).
LocalOptimum maxcut_local_search(const GraphInstance& g, std::size_t budget, SplitMix64& rng) {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  LocalOptimum out{std::vector<int>(g.n), 0};
  for (auto& s : out.values) s = rng.coin() ? 1 : 0;

  while (out.moves < budget) {
    double best_gain = 0.0;
    std::size_t best_v = g.n;
    for (std::size_t v = 0; v < g.n; ++v) {
      double gain = 0.0;
      for (const auto& [w, weight] : adj[v]) gain += out.values[w] == out.values[v] ? weight : -weight;
      if (gain > best_gain + 1e-12) {
        best_gain = gain;
        best_v = v;
      }
    }
    if (best_v == g.n) break;
    out.values[best_v] ^= 1;
    ++out.moves;
  }
  return out;
}

LocalOptimum ising_descent(const IsingInstance& s, std::size_t budget, SplitMix64& rng) {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(s.n);
  for (const auto& [key, j] : s.couplings) {
    adj[key.first].push_back({key.second, j});
    adj[key.second].push_back({key.first, j});
  }
  LocalOptimum out{std::vector<int>(s.n), 0};
  for (auto& v : out.values) v = rng.coin() ? 1 : -1;

  // Flipping spin i changes H by 2 s_i (sum_j J_ij s_j + mu h_i).
  auto delta = [&](std::size_t i) {
    double local = s.mu * s.fields[i];
    for (const auto& [k, j] : adj[i]) local += j * out.values[k];
    return 2.0 * out.values[i] * local;
  };
  while (out.moves < budget) {
    double best_delta = 0.0;
    std::size_t best_i = s.n;
    for (std::size_t i = 0; i < s.n; ++i) {
      const double d = delta(i);
      if (d < best_delta - 1e-12) {
        best_delta = d;
        best_i = i;
      }
    }
    if (best_i == s.n) break;
    out.values[best_i] = -out.values[best_i];
    ++out.moves;
  }
  return out;
}

LocalOptimum tsp_nearest_two_opt(const TspInstance& t, std::size_t budget, SplitMix64& rng) {
  const std::size_t n = t.n;
  LocalOptimum out{{}, 0};
  std::vector<bool> visited(n, false);
  std::size_t current = rng.below(n);
  out.values.push_back(static_cast<int>(current));
  visited[current] = true;
  while (out.values.size() < n) {
    std::size_t next = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (!visited[c] && (next == n || t.at(current, c) < t.at(current, next))) next = c;
    }
    visited[next] = true;
    out.values.push_back(static_cast<int>(next));
    current = next;
  }

  // First-improvement 2-opt: reverse tour[i+1..j] when it shortens the tour.
  auto& tour = out.values;
  bool improved = true;
  while (improved && out.moves < budget) {
    improved = false;
    for (std::size_t i = 0; i + 1 < n && !improved; ++i) {
      for (std::size_t j = i + 2; j < n && !improved; ++j) {
        const int a = tour[i], b = tour[i + 1], c = tour[j], d = tour[(j + 1) % n];
        if (a == d) continue;
        const double delta = t.at(a, c) + t.at(b, d) - t.at(a, b) - t.at(c, d);
        if (delta < -1e-12) {
          std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       tour.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          ++out.moves;
          improved = true;
        }
      }
    }
  }
  return out;
}

}  // namespace

HeuristicResult heuristic_solve(const ProblemInstance& instance, const HeuristicSettings& settings,
                                std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = size_of(instance);
  const std::size_t budget = settings.budget_for(n);
  const std::size_t restarts = std::max<std::size_t>(settings.restarts, 1);
  const Direction direction = direction_of(kind_of(instance));

  HeuristicResult best;
  bool have_best = false;
  for (std::size_t r = 0; r < restarts; ++r) {
    SplitMix64 rng(counter_hash(seed, {r}));
    LocalOptimum local;
    switch (kind_of(instance)) {
      case ProblemKind::maxcut: local = maxcut_local_search(std::get<GraphInstance>(instance), budget, rng); break;
      case ProblemKind::ising: local = ising_descent(std::get<IsingInstance>(instance), budget, rng); break;
      case ProblemKind::tsp: local = tsp_nearest_two_opt(std::get<TspInstance>(instance), budget, rng); break;
    }
    best.budget_used += local.moves;
    Candidate candidate{std::move(local.values), true};
    const double value = evaluate(instance, candidate).value;
    if (!have_best || better(value, best.value, direction)) {
      best.value = value;
      best.candidate = std::move(candidate);
      have_best = true;
    }
  }
  best.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return best;
}

std::string heuristic_identity(ProblemKind kind, const HeuristicSettings& settings) {
  std::string name;
  switch (kind) {
    case ProblemKind::maxcut: name = "maxcut-steepest-flip"; break;
    case ProblemKind::ising: name = "ising-greedy-descent"; break;
    case ProblemKind::tsp: name = "tsp-nearest-neighbour-2opt"; break;
  }
  const std::string budget =
      settings.iterations_per_restart == 0 ? "50n" : std::to_string(settings.iterations_per_restart);
  return name + "@1.0;budget=" + budget + ";restarts=" + std::to_string(settings.restarts);
}

double accuracy(double s, double s_heur, Direction direction) {
  if (s_heur == 0.0) throw DegenerateBaselineError("heuristic value is zero; relative accuracy undefined");
  const double gap = direction == Direction::maximize ? s_heur - s : s - s_heur;
  return std::max(0.0, 1.0 - gap / std::abs(s_heur));
}

AccuracyRecord score_accuracy(double s, double s_heur, Direction direction, bool feasible) {
  AccuracyRecord r{s, s_heur, direction, 0.0, false};
  if (!feasible) return r;
  try {
    r.accuracy = accuracy(s, s_heur, direction);
  } catch (const DegenerateBaselineError&) {
    r.degenerate_baseline = true;
    r.accuracy = s == 0.0 ? 1.0 : 0.0;
  }
  return r;
}

}  // namespace quas
