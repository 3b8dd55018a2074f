#include <cmath>
#include <vector>

#include "quas/kernels.hpp"

namespace quas::kernels::serial {

// Bit i of the basis index z is the value of binary variable i.
void fill_cost(const QuboForm& qubo, std::span<double> cost) {
  for (std::size_t z = 0; z < cost.size(); ++z) {
    double v = qubo.constant;
    for (std::size_t i = 0; i < qubo.m; ++i) {
      if ((z >> i) & 1U) v += qubo.linear[i];
    }
    for (const auto& [key, w] : qubo.quadratic) {
      if (((z >> key.first) & 1U) && ((z >> key.second) & 1U)) v += w;
    }
    cost[z] = v;
  }
}

void apply_phase(std::span<Amplitude> amps, std::span<const double> cost, double gamma) {
  for (std::size_t z = 0; z < amps.size(); ++z) amps[z] *= std::polar(1.0, -gamma * cost[z]);
}

// exp(-i beta X) on every qubit: [[cos, -i sin], [-i sin, cos]].
void apply_mixer(std::span<Amplitude> amps, std::size_t n_qubits, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < amps.size(); ++z) {
      if (z & bit) continue;
      const Amplitude a0 = amps[z];
      const Amplitude a1 = amps[z | bit];
      // -i s a = (s im(a), -s re(a))
      amps[z] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
      amps[z | bit] = {s * a0.imag() + c * a1.real(), c * a1.imag() - s * a0.real()};
    }
  }
}

double expectation(std::span<const Amplitude> amps, std::span<const double> cost) {
  double e = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z) e += std::norm(amps[z]) * cost[z];
  return e;
}

double norm_squared(std::span<const Amplitude> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace quas::kernels::serial
