#include <cmath>
#include <cstdint>
#include <vector>

#include "quas/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quas::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace omp {
namespace {

// Parallel loops need a signed induction variable for OpenMP 2.x compilers.
using Index = std::int64_t;

struct Term {
  std::size_t i, j;
  double w;
};

}  // namespace

void fill_cost(const QuboForm& qubo, std::span<double> cost) {
  std::vector<Term> terms;
  terms.reserve(qubo.quadratic.size());
  for (const auto& [key, w] : qubo.quadratic) terms.push_back({key.first, key.second, w});
  const auto* linear = qubo.linear.data();
  const std::size_t m = qubo.m;
  const double constant = qubo.constant;
  const Index dim = static_cast<Index>(cost.size());
#pragma omp parallel for schedule(static)
  for (Index zi = 0; zi < dim; ++zi) {
    const auto z = static_cast<std::size_t>(zi);
    double v = constant;
    for (std::size_t i = 0; i < m; ++i) {
      if ((z >> i) & 1U) v += linear[i];
    }
    for (const auto& t : terms) {
      if (((z >> t.i) & 1U) && ((z >> t.j) & 1U)) v += t.w;
    }
    cost[z] = v;
  }
}

void apply_phase(std::span<Amplitude> amps, std::span<const double> cost, double gamma) {
  const Index dim = static_cast<Index>(amps.size());
#pragma omp parallel for schedule(static)
  for (Index z = 0; z < dim; ++z) amps[z] *= std::polar(1.0, -gamma * cost[z]);
}

void apply_mixer(std::span<Amplitude> amps, std::size_t n_qubits, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const Index pairs = static_cast<Index>(amps.size() / 2);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t low_mask = bit - 1;
    // Pair k maps to the index with a zero inserted at position q.
#pragma omp parallel for schedule(static)
    for (Index k = 0; k < pairs; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const std::size_t z = ((uk & ~low_mask) << 1) | (uk & low_mask);
      const Amplitude a0 = amps[z];
      const Amplitude a1 = amps[z | bit];
      // -i s a = (s im(a), -s re(a))
      amps[z] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
      amps[z | bit] = {s * a0.imag() + c * a1.real(), c * a1.imag() - s * a0.real()};
    }
  }
}

double expectation(std::span<const Amplitude> amps, std::span<const double> cost) {
  const Index dim = static_cast<Index>(amps.size());
  double e = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : e)
  for (Index z = 0; z < dim; ++z) e += std::norm(amps[z]) * cost[z];
  return e;
}

double norm_squared(std::span<const Amplitude> amps) {
  const Index dim = static_cast<Index>(amps.size());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (Index z = 0; z < dim; ++z) s += std::norm(amps[z]);
  return s;
}

}  // namespace omp
}  // namespace quas::kernels
