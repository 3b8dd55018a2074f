#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quas/problems.hpp"

namespace quas {

struct SolveRequest {
  QuboForm qubo;
  std::size_t samples = 1;  // samples for "random", shots for "qaoa-sim"
  std::uint64_t seed = 0;
  std::optional<double> wall_clock_budget;  // seconds
};

struct SolveOutcome {
  Bits best_bits;
  double best_value = 0.0;  // QUBO objective of best_bits
  std::size_t samples_taken = 0;
  double elapsed = 0.0;  // seconds, whole call
};

/// Geometric temperature ladder from t_start down to t_end over `sweeps`.
struct AnnealSchedule {
  std::size_t sweeps = 1;
  double t_start = 1.0;
  double t_end = 0.01;
  std::size_t reads = 10;

  double temperature(std::size_t sweep) const noexcept;
};

/// 100 m sweeps, t_start = max |coefficient|, t_end = t_start / 100, 10 reads.
AnnealSchedule default_schedule(const QuboForm& qubo);

/// Snapshot handed to an optional observer after every sweep. `value` is the
/// incrementally tracked QUBO objective of `bits`.
struct SweepState {
  std::size_t read = 0;
  std::size_t sweep = 0;
  double value = 0.0;
  double best_value = 0.0;
  std::span<const std::uint8_t> bits;
};
using SweepObserver = std::function<void(const SweepState&)>;

SolveOutcome random_solve(const SolveRequest& request);
SolveOutcome sa_solve(const SolveRequest& request, const AnnealSchedule& schedule,
                      const SweepObserver& observer = {});

/// Knobs shared by the registered backends. Zero means "backend default".
struct BackendSettings {
  std::size_t samples = 0;
  std::size_t sweeps = 0;
  std::size_t reads = 10;
  std::size_t layers = 1;
  std::size_t max_evals = 200;
  std::size_t qubit_cap = 20;
};

struct BackendEntry {
  std::string id;
  std::size_t default_samples = 1;
  std::function<SolveOutcome(const SolveRequest&, const BackendSettings&)> solve;
};

class BackendRegistry {
 public:
  void add(BackendEntry entry);
  /// Throws ConfigError for unknown ids.
  const BackendEntry& at(const std::string& id) const;
  bool contains(const std::string& id) const { return entries_.count(id) != 0; }
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, BackendEntry> entries_;
};

/// Registry holding "random", "sa" and "qaoa-sim".
const BackendRegistry& default_registry();

}  // namespace quas
