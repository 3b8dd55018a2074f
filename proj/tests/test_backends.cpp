#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "quas/backends.hpp"
#include "quas/errors.hpp"

using namespace quas;

namespace {

IsingInstance aligned_pair() {
  IsingInstance pair;
  pair.n = 2;
  pair.couplings[{0, 1}] = 1.0;
  pair.fields = {0.0, 0.0};
  return pair;
}

}  // namespace

TEST_CASE("random_solve finds the single-edge cut") {
  GraphInstance edge{2, {{0, 1, 1.0}}, 0};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto out = random_solve({to_qubo(edge), 1000, seed, {}});
    CHECK(out.best_value == 1.0);
    CHECK(out.samples_taken == 1000);
    CHECK(out.elapsed > 0.0);
  }
}

TEST_CASE("random_solve with one sample is a deterministic draw") {
  QuboForm q;
  q.m = 1;
  q.linear = {1.0};
  q.direction = Direction::maximize;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_solve({q, 1, seed, {}});
    CHECK((a.best_value == 0.0 || a.best_value == 1.0));
    CHECK(random_solve({q, 1, seed, {}}).best_bits == a.best_bits);
  }
}

TEST_CASE("a uniform sample cuts half the total weight on average") {
  const auto g = gen_er_graph(12, 0.5, 4);
  const auto q = to_qubo(g);
  const int trials = 4000;
  double sum = 0, sum_sq = 0;
  for (int s = 0; s < trials; ++s) {
    const double v = random_solve({q, 1, static_cast<std::uint64_t>(s), {}}).best_value;
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / trials;
  const double sd = std::sqrt(sum_sq / trials - mean * mean);
  CHECK(std::abs(mean - g.total_weight() / 2) < 4 * sd / std::sqrt(double(trials)));
}

TEST_CASE("sa_solve trivial cases") {
  QuboForm zero;
  zero.m = 5;
  zero.linear.assign(5, 0.0);
  zero.constant = 2.5;
  const auto schedule = default_schedule(zero);
  CHECK(schedule.t_start == 1.0);
  CHECK(sa_solve({zero, 1, 3, {}}, schedule).best_value == 2.5);

  const auto q = to_qubo(aligned_pair());
  CHECK(sa_solve({q, 1, 9, {}}, default_schedule(q)).best_value == -1.0);
}

TEST_CASE("default schedule scales with the coefficients") {
  const auto q = to_qubo(gen_er_graph(8, 0.5, 1));
  const auto s = default_schedule(q);
  CHECK(s.sweeps == 800);
  CHECK(s.reads == 10);
  CHECK(s.t_start == q.max_abs_coefficient());
  CHECK(s.t_end == doctest::Approx(0.01 * s.t_start));
  CHECK(s.temperature(0) == s.t_start);
  CHECK(s.temperature(s.sweeps - 1) == doctest::Approx(s.t_end));
  for (std::size_t k = 1; k < s.sweeps; ++k) CHECK(s.temperature(k) < s.temperature(k - 1));
}

TEST_CASE("sa_solve reaches the ground state of a 12-spin glass for most seeds") {
  const auto s = gen_ising(12, 1);
  const double ground = oracle::ising_ground(s);
  const auto q = to_qubo(s);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const double best = sa_solve({q, 1, seed, {}}, default_schedule(q)).best_value;
    CHECK(best >= ground - 1e-9);
    if (std::abs(best - ground) <= 0.05 * std::abs(ground)) ++hits;
  }
  CHECK(hits >= 23);  // 90% of 25, rounded up
}

TEST_CASE("incremental energy tracking matches full re-evaluation") {
  for (auto q : {to_qubo(gen_ising(10, 5)), to_qubo(gen_er_graph(9, 0.5, 6)), to_qubo(gen_tsp(4, 7))}) {
    AnnealSchedule schedule = default_schedule(q);
    schedule.sweeps = 40;
    schedule.reads = 3;
    std::size_t calls = 0;
    double previous_best = 0;
    sa_solve({q, 1, 11, {}}, schedule, [&](const SweepState& st) {
      ++calls;
      CHECK(st.value == doctest::Approx(qubo_objective(q, st.bits)).epsilon(1e-9).scale(1.0));
      if (calls > 1) {
        // Anytime: the recorded best never gets worse.
        CHECK_FALSE(better(previous_best, st.best_value, q.direction));
      }
      previous_best = st.best_value;
    });
    CHECK(calls == 120);
  }
}

TEST_CASE("sa_solve is deterministic per seed") {
  const auto q = to_qubo(gen_tsp(4, 3));
  const auto a = sa_solve({q, 1, 42, {}}, default_schedule(q));
  const auto b = sa_solve({q, 1, 42, {}}, default_schedule(q));
  CHECK(a.best_bits == b.best_bits);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_value == qubo_objective(q, a.best_bits));
}

TEST_CASE("wall clock budget stops after the first read") {
  const auto q = to_qubo(gen_ising(8, 2));
  const auto out = sa_solve({q, 1, 1, 0.0}, default_schedule(q));
  CHECK(out.samples_taken == 1);
  CHECK(out.best_value == qubo_objective(q, out.best_bits));
}

TEST_CASE("backend registry") {
  const auto& r = default_registry();
  CHECK(r.ids() == std::vector<std::string>{"qaoa-sim", "random", "sa"});
  CHECK(r.at("qaoa-sim").default_samples == 1024);
  CHECK_THROWS_AS(r.at("dwave"), ConfigError);

  const auto q = to_qubo(gen_er_graph(5, 0.5, 1));
  for (const auto& id : r.ids()) {
    const auto out = r.at(id).solve({q, 16, 3, {}}, BackendSettings{});
    CHECK(out.best_bits.size() == 5);
    CHECK(out.best_value == qubo_objective(q, out.best_bits));
  }
}
