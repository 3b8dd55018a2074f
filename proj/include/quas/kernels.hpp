#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "quas/problems.hpp"

// Statevector kernels. `serial` is the reference implementation kept for
// tests and benchmarks; `omp` is what the simulator runs. Both must agree
// to rounding on every input.
namespace quas::kernels {

using Amplitude = std::complex<double>;

namespace serial {
void fill_cost(const QuboForm& qubo, std::span<double> cost);
void apply_phase(std::span<Amplitude> amps, std::span<const double> cost, double gamma);
void apply_mixer(std::span<Amplitude> amps, std::size_t n_qubits, double beta);
double expectation(std::span<const Amplitude> amps, std::span<const double> cost);
double norm_squared(std::span<const Amplitude> amps);
}  // namespace serial

namespace omp {
void fill_cost(const QuboForm& qubo, std::span<double> cost);
void apply_phase(std::span<Amplitude> amps, std::span<const double> cost, double gamma);
void apply_mixer(std::span<Amplitude> amps, std::size_t n_qubits, double beta);
double expectation(std::span<const Amplitude> amps, std::span<const double> cost);
double norm_squared(std::span<const Amplitude> amps);
}  // namespace omp

/// Threads the omp kernels will use (1 when built without OpenMP).
int max_threads();

}  // namespace quas::kernels
