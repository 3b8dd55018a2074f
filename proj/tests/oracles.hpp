#pragma once

// Independent reference computations for tests. Nothing here calls into the
// code paths it is used to check (no QUBO evaluation, no kernels, no fits).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "quas/problems.hpp"
#include "quas/scoring.hpp"

namespace oracle {

inline std::vector<int> bits_of(std::uint64_t z, std::size_t n) {
  std::vector<int> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<int>((z >> i) & 1U);
  return b;
}

inline double cut(const quas::GraphInstance& g, const std::vector<int>& side) {
  double c = 0;
  for (const auto& e : g.edges) c += side[e.u] != side[e.v] ? e.weight : 0.0;
  return c;
}

inline double max_cut(const quas::GraphInstance& g) {
  double best = 0;
  for (std::uint64_t z = 0; z < (1ULL << g.n); ++z) best = std::max(best, cut(g, bits_of(z, g.n)));
  return best;
}

inline double ising_energy(const quas::IsingInstance& s, const std::vector<int>& spin) {
  double h = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = i + 1; j < s.n; ++j) {
      auto it = s.couplings.find({i, j});
      if (it != s.couplings.end()) h -= it->second * spin[i] * spin[j];
    }
    h -= s.mu * s.fields[i] * spin[i];
  }
  return h;
}

inline double ising_ground(const quas::IsingInstance& s) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t z = 0; z < (1ULL << s.n); ++z) {
    auto b = bits_of(z, s.n);
    for (auto& v : b) v = 2 * v - 1;
    best = std::min(best, ising_energy(s, b));
  }
  return best;
}

// q dominates p: >= on both axes, > on at least one.
inline bool dominates(const quas::KpiPoint& q, const quas::KpiPoint& p) {
  return q.speed >= p.speed && q.accuracy >= p.accuracy && (q.speed > p.speed || q.accuracy > p.accuracy);
}

inline std::vector<quas::KpiPoint> pareto_quadratic(const std::vector<quas::KpiPoint>& pts) {
  std::vector<quas::KpiPoint> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) dominated = dominated || dominates(q, p);
    if (dominated) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.speed < b.speed; });
  return out;
}

using cd = std::complex<double>;
using Matrix = std::vector<std::vector<cd>>;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.size() * b.size(), std::vector<cd>(a.size() * b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) k[i * b.size() + r][j * b.size() + c] = a[i][j] * b[r][c];
  return k;
}

inline std::vector<cd> mat_vec(const Matrix& m, const std::vector<cd>& v) {
  std::vector<cd> out(v.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Dense QAOA: U_B = Rx(beta)^{(x)n} built by Kronecker products (qubit 0 is the
// least significant index bit, so it is the rightmost factor), U_C diagonal.
inline double qaoa_expectation_dense(const std::vector<double>& cost, std::size_t n,
                                     const std::vector<double>& gammas, const std::vector<double>& betas) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cd> psi(dim, cd(1.0 / std::sqrt(double(dim)), 0.0));
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    Matrix phase(dim, std::vector<cd>(dim));
    for (std::size_t z = 0; z < dim; ++z) phase[z][z] = std::exp(cd(0, -gammas[l] * cost[z]));
    const double c = std::cos(betas[l]), s = std::sin(betas[l]);
    const Matrix rx{std::vector<cd>{cd(c, 0), cd(0, -s)}, std::vector<cd>{cd(0, -s), cd(c, 0)}};
    Matrix mixer = rx;
    for (std::size_t q = 1; q < n; ++q) mixer = kron(rx, mixer);
    psi = mat_vec(mixer, mat_vec(phase, psi));
  }
  double e = 0;
  for (std::size_t z = 0; z < dim; ++z) e += std::norm(psi[z]) * cost[z];
  return e;
}

// Cost vector built straight from the graph, not from the QUBO.
inline std::vector<double> maxcut_cost_vector(const quas::GraphInstance& g) {
  std::vector<double> c(std::size_t{1} << g.n);
  for (std::uint64_t z = 0; z < c.size(); ++z) c[z] = cut(g, bits_of(z, g.n));
  return c;
}

inline double lame_quadrature(double p) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate([p](double u) { return std::pow(std::max(0.0, 1.0 - std::pow(u, p)), 1.0 / p); },
                              0.0, 1.0);
}

}  // namespace oracle
