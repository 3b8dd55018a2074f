#include "quas/qaoa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "quas/errors.hpp"
#include "quas/kernels.hpp"
#include "quas/rng.hpp"

namespace quas {
namespace {

void check_capacity(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapacityError(std::to_string(n) + " qubits exceed the simulator cap of " + std::to_string(cap));
  }
}

void check_dimensions(const StateVector& state, const DiagonalCost& cost) {
  if (state.amplitudes.size() != cost.values.size() || state.n_qubits != cost.n_qubits) {
    throw ShapeError("state and cost operator dimensions differ");
  }
}

}  // namespace

StateVector prepare_plus_state(std::size_t n, std::size_t cap) {
  if (n < 1) throw InvalidSizeError("need at least one qubit");
  check_capacity(n, cap);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector{n, std::vector<std::complex<double>>(dim, {amp, 0.0})};
}

DiagonalCost make_diagonal_cost(const QuboForm& qubo, std::size_t cap) {
  check_capacity(qubo.m, cap);
  DiagonalCost cost{qubo.m, std::vector<double>(std::size_t{1} << qubo.m)};
  kernels::omp::fill_cost(qubo, cost.values);
  return cost;
}

void evolve_layer_in_place(StateVector& state, const DiagonalCost& cost, double gamma, double beta) {
  check_dimensions(state, cost);
  kernels::omp::apply_phase(state.amplitudes, cost.values, gamma);
  kernels::omp::apply_mixer(state.amplitudes, state.n_qubits, beta);
}

StateVector evolve_layer(StateVector state, const DiagonalCost& cost, double gamma, double beta) {
  evolve_layer_in_place(state, cost, gamma, beta);
  return state;
}

double expectation(const StateVector& state, const DiagonalCost& cost) {
  check_dimensions(state, cost);
  return kernels::omp::expectation(state.amplitudes, cost.values);
}

double norm_squared(const StateVector& state) { return kernels::omp::norm_squared(state.amplitudes); }

StateVector qaoa_state(const DiagonalCost& cost, const QaoaParams& params) {
  if (params.gammas.size() != params.betas.size()) throw ShapeError("gamma and beta counts differ");
  StateVector state = prepare_plus_state(cost.n_qubits, cost.n_qubits);
  for (std::size_t l = 0; l < params.layers(); ++l) {
    evolve_layer_in_place(state, cost, params.gammas[l], params.betas[l]);
  }
  return state;
}

std::vector<std::size_t> sample_outcomes(const StateVector& state, std::size_t shots, std::uint64_t seed) {
  std::vector<double> cumulative(state.dimension());
  double total = 0.0;
  for (std::size_t z = 0; z < state.dimension(); ++z) {
    total += std::norm(state.amplitudes[z]);
    cumulative[z] = total;
  }
  SplitMix64 rng(seed);
  std::vector<std::size_t> out(shots);
  for (auto& z : out) {
    const double u = rng.uniform01() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    z = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), state.dimension() - 1);
  }
  return out;
}

SolveOutcome qaoa_solve(const SolveRequest& request, const QaoaSettings& settings) {
  const auto start = std::chrono::steady_clock::now();
  const QuboForm& q = request.qubo;
  const DiagonalCost cost = make_diagonal_cost(q, settings.qubit_cap);
  const std::size_t layers = std::max<std::size_t>(settings.layers, 1);
  const double sign = q.direction == Direction::minimize ? 1.0 : -1.0;

  auto unpack = [layers](std::span<const double> x) {
    return QaoaParams{{x.begin(), x.begin() + static_cast<std::ptrdiff_t>(layers)},
                      {x.begin() + static_cast<std::ptrdiff_t>(layers), x.end()}};
  };
  std::vector<double> x0(2 * layers);
  std::fill(x0.begin(), x0.begin() + static_cast<std::ptrdiff_t>(layers), settings.start_gamma);
  std::fill(x0.begin() + static_cast<std::ptrdiff_t>(layers), x0.end(), settings.start_beta);

  const OptimizeResult opt = nelder_mead(
      [&](std::span<const double> x) { return sign * expectation(qaoa_state(cost, unpack(x)), cost); }, x0,
      settings.optimizer);

  const StateVector final_state = qaoa_state(cost, unpack(opt.argmin));
  const std::size_t shots = std::max<std::size_t>(request.samples, 1);
  const auto outcomes = sample_outcomes(final_state, shots, request.seed);

  std::size_t best_z = outcomes.front();
  for (std::size_t z : outcomes) {
    if (better(cost.values[z], cost.values[best_z], q.direction)) best_z = z;
  }
  SolveOutcome out;
  out.best_bits.resize(q.m);
  for (std::size_t i = 0; i < q.m; ++i) out.best_bits[i] = (best_z >> i) & 1U;
  out.best_value = qubo_objective(q, out.best_bits);
  out.samples_taken = shots;
  out.elapsed = std::max(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1e-9);
  return out;
}

}  // namespace quas
