#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "quas/backends.hpp"
#include "quas/optimize.hpp"
#include "quas/problems.hpp"

namespace quas {

inline constexpr std::size_t kDefaultQubitCap = 20;

struct StateVector {
  std::size_t n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  std::size_t dimension() const noexcept { return amplitudes.size(); }
};

/// values[z] is the QUBO objective of the bitstring whose bit i is x_i.
struct DiagonalCost {
  std::size_t n_qubits = 0;
  std::vector<double> values;
};

struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  std::size_t layers() const noexcept { return gammas.size(); }
};

struct QaoaSettings {
  std::size_t layers = 1;
  OptimizerSettings optimizer{500, 200, 1e-8, 1e-6, 0.1};
  double start_gamma = 0.5;
  double start_beta = 0.5;
  std::size_t qubit_cap = kDefaultQubitCap;
};

/// Uniform superposition |+>^n. Throws CapacityError above the cap.
StateVector prepare_plus_state(std::size_t n, std::size_t cap = kDefaultQubitCap);
DiagonalCost make_diagonal_cost(const QuboForm& qubo, std::size_t cap = kDefaultQubitCap);

/// Phase exp(-i gamma C) followed by exp(-i beta X) on every qubit.
StateVector evolve_layer(StateVector state, const DiagonalCost& cost, double gamma, double beta);
void evolve_layer_in_place(StateVector& state, const DiagonalCost& cost, double gamma, double beta);

double expectation(const StateVector& state, const DiagonalCost& cost);
double norm_squared(const StateVector& state);

/// |+>^n evolved through every layer of `params`.
StateVector qaoa_state(const DiagonalCost& cost, const QaoaParams& params);

/// Draws `shots` basis indices from |amplitude|^2.
std::vector<std::size_t> sample_outcomes(const StateVector& state, std::size_t shots, std::uint64_t seed);

/// Optimizes the angles on the exact expectation, then samples request.samples
/// shots from the final state and returns the best sampled bitstring.
SolveOutcome qaoa_solve(const SolveRequest& request, const QaoaSettings& settings = {});

}  // namespace quas
