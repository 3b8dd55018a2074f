// Serial reference vs OpenMP statevector kernels on random Max-Cut QUBOs.
//
//   quas_bench [min_qubits=14] [max_qubits=20] [repeats=5]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "quas/kernels.hpp"
#include "quas/problems.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t lo = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 14;
  const std::size_t hi = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 20;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;
  namespace k = quas::kernels;

  std::printf("threads=%d\n", k::max_threads());
  std::printf("%-7s %-12s %-12s %-12s %-8s\n", "qubits", "kernel", "serial[ms]", "omp[ms]", "speedup");
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto qubo = quas::to_qubo(quas::gen_er_graph(n, 0.5, 42));
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> cost(dim);
    std::vector<k::Amplitude> amps(dim, k::Amplitude(1.0 / std::sqrt(double(dim)), 0.0));

    auto row = [&](const char* name, const std::function<void()>& s, const std::function<void()>& o) {
      const double ts = best_of(repeats, s) * 1e3, to = best_of(repeats, o) * 1e3;
      std::printf("%-7zu %-12s %-12.3f %-12.3f %-8.2f\n", n, name, ts, to, ts / to);
    };
    row("fill_cost", [&] { k::serial::fill_cost(qubo, cost); }, [&] { k::omp::fill_cost(qubo, cost); });
    row("phase", [&] { k::serial::apply_phase(amps, cost, 0.1); }, [&] { k::omp::apply_phase(amps, cost, 0.1); });
    row("mixer", [&] { k::serial::apply_mixer(amps, n, 0.2); }, [&] { k::omp::apply_mixer(amps, n, 0.2); });
    volatile double sink = 0;
    row("expectation", [&] { sink = k::serial::expectation(amps, cost); },
        [&] { sink = k::omp::expectation(amps, cost); });
    (void)sink;
  }
  return 0;
}
