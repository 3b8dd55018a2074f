#include "quas/backends.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "quas/errors.hpp"
#include "quas/qaoa.hpp"
#include "quas/rng.hpp"

namespace quas {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::max(std::chrono::duration<double>(Clock::now() - start).count(), 1e-9);
}

bool over_budget(const SolveRequest& request, Clock::time_point start) {
  return request.wall_clock_budget && seconds_since(start) >= *request.wall_clock_budget;
}

}  // namespace

double AnnealSchedule::temperature(std::size_t sweep) const noexcept {
  if (sweeps <= 1) return t_start;
  const double frac = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
  return t_start * std::pow(t_end / t_start, frac);
}

AnnealSchedule default_schedule(const QuboForm& qubo) {
  AnnealSchedule s;
  s.sweeps = std::max<std::size_t>(100 * qubo.m, 1);
  s.t_start = qubo.max_abs_coefficient();
  if (s.t_start <= 0.0) s.t_start = 1.0;
  s.t_end = 0.01 * s.t_start;
  s.reads = 10;
  return s;
}

SolveOutcome random_solve(const SolveRequest& request) {
  const auto start = Clock::now();
  const QuboForm& q = request.qubo;
  SplitMix64 rng(request.seed);
  SolveOutcome out;
  Bits bits(q.m);
  const std::size_t samples = std::max<std::size_t>(request.samples, 1);
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& b : bits) b = rng.coin() ? 1 : 0;
    const double value = qubo_objective(q, bits);
    if (s == 0 || better(value, out.best_value, q.direction)) {
      out.best_value = value;
      out.best_bits = bits;
    }
    ++out.samples_taken;
    if (over_budget(request, start)) break;
  }
  out.elapsed = seconds_since(start);
  return out;
}

SolveOutcome sa_solve(const SolveRequest& request, const AnnealSchedule& schedule, const SweepObserver& observer) {
  const auto start = Clock::now();
  const QuboForm& q = request.qubo;
  const std::size_t m = q.m;
  // Anneal on energy = sign * objective so lower is always better.
  const double sign = q.direction == Direction::minimize ? 1.0 : -1.0;

  std::vector<std::vector<std::pair<std::size_t, double>>> adj(m);
  for (const auto& [key, w] : q.quadratic) {
    adj[key.first].push_back({key.second, w});
    adj[key.second].push_back({key.first, w});
  }

  SolveOutcome out;
  bool have_best = false;
  Bits bits(m);
  std::vector<double> field(m);  // linear_i + sum_j Q_ij x_j
  const std::size_t reads = std::max<std::size_t>(schedule.reads, 1);

  for (std::size_t read = 0; read < reads; ++read) {
    SplitMix64 rng(counter_hash(request.seed, {read}));
    for (auto& b : bits) b = rng.coin() ? 1 : 0;
    for (std::size_t i = 0; i < m; ++i) {
      field[i] = q.linear[i];
      for (const auto& [j, w] : adj[i]) field[i] += bits[j] ? w : 0.0;
    }
    double value = qubo_objective(q, bits);
    if (!have_best || better(value, out.best_value, q.direction)) {
      out.best_value = value;
      out.best_bits = bits;
      have_best = true;
    }

    for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
      const double temperature = schedule.temperature(sweep);
      for (std::size_t i = 0; i < m; ++i) {
        const double step = bits[i] ? -1.0 : 1.0;
        const double delta_energy = sign * step * field[i];
        if (delta_energy > 0.0 && rng.uniform01() >= std::exp(-delta_energy / temperature)) continue;
        bits[i] ^= 1;
        value += step * field[i];
        for (const auto& [j, w] : adj[i]) field[j] += step * w;
        if (better(value, out.best_value, q.direction)) {
          out.best_value = value;
          out.best_bits = bits;
        }
      }
      if (observer) observer(SweepState{read, sweep, value, out.best_value, bits});
    }
    ++out.samples_taken;
    if (over_budget(request, start)) break;
  }
  // Incremental tracking drifts by rounding; report the exact objective.
  out.best_value = qubo_objective(q, out.best_bits);
  out.elapsed = seconds_since(start);
  return out;
}

void BackendRegistry::add(BackendEntry entry) {
  const std::string id = entry.id;
  entries_[id] = std::move(entry);
}

const BackendEntry& BackendRegistry::at(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    std::string known;
    for (const auto& [k, v] : entries_) known += (known.empty() ? "" : ", ") + k;
    throw ConfigError("unknown backend '" + id + "' (registered: " + known + ")");
  }
  return it->second;
}

std::vector<std::string> BackendRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

const BackendRegistry& default_registry() {
  static const BackendRegistry registry = [] {
    BackendRegistry r;
    r.add({"random", 1, [](const SolveRequest& req, const BackendSettings&) { return random_solve(req); }});
    r.add({"sa", 1, [](const SolveRequest& req, const BackendSettings& s) {
             AnnealSchedule schedule = default_schedule(req.qubo);
             if (s.sweeps != 0) schedule.sweeps = s.sweeps;
             if (s.reads != 0) schedule.reads = s.reads;
             return sa_solve(req, schedule);
           }});
    r.add({"qaoa-sim", 1024, [](const SolveRequest& req, const BackendSettings& s) {
             QaoaSettings settings;
             settings.layers = s.layers;
             settings.optimizer.max_evals = s.max_evals;
             settings.qubit_cap = s.qubit_cap;
             return qaoa_solve(req, settings);
           }});
    return r;
  }();
  return registry;
}

}  // namespace quas
