#include "quas/problems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quas/errors.hpp"
#include "quas/rng.hpp"

namespace quas {

std::string_view to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::maxcut: return "maxcut";
    case ProblemKind::ising: return "ising";
    case ProblemKind::tsp: return "tsp";
  }
  return "unknown";
}

std::string_view to_string(Direction direction) noexcept {
  return direction == Direction::maximize ? "maximize" : "minimize";
}

ProblemKind parse_problem_kind(std::string_view tag) {
  if (tag == "maxcut" || tag == "max-cut") return ProblemKind::maxcut;
  if (tag == "ising") return ProblemKind::ising;
  if (tag == "tsp") return ProblemKind::tsp;
  throw ConfigError("unknown problem '" + std::string(tag) + "' (expected maxcut, ising or tsp)");
}

Direction parse_direction(std::string_view tag) {
  if (tag == "maximize") return Direction::maximize;
  if (tag == "minimize") return Direction::minimize;
  throw DataError("unknown direction '" + std::string(tag) + "'");
}

double GraphInstance::total_weight() const noexcept {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

double TspInstance::max_distance() const noexcept {
  double m = 0.0;
  for (double d : distance) m = std::max(m, d);
  return m;
}

ProblemKind kind_of(const ProblemInstance& instance) noexcept {
  return static_cast<ProblemKind>(instance.index());
}

Direction direction_of(ProblemKind kind) noexcept {
  return kind == ProblemKind::maxcut ? Direction::maximize : Direction::minimize;
}

std::size_t size_of(const ProblemInstance& instance) noexcept {
  return std::visit([](const auto& p) { return p.n; }, instance);
}

std::size_t candidate_length(const ProblemInstance& instance) noexcept { return size_of(instance); }

void QuboForm::add_quadratic(std::size_t i, std::size_t j, double w) {
  if (i == j) {
    linear[i] += w;
    return;
  }
  quadratic[{std::min(i, j), std::max(i, j)}] += w;
}

double QuboForm::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double c : linear) m = std::max(m, std::abs(c));
  for (const auto& [key, c] : quadratic) m = std::max(m, std::abs(c));
  return m;
}

double qubo_objective(const QuboForm& qubo, std::span<const std::uint8_t> bits) {
  if (bits.size() != qubo.m) {
    throw ShapeError("bitstring has " + std::to_string(bits.size()) + " entries, QUBO expects " +
                     std::to_string(qubo.m));
  }
  double value = qubo.constant;
  for (std::size_t i = 0; i < qubo.m; ++i) {
    if (bits[i]) value += qubo.linear[i];
  }
  for (const auto& [key, w] : qubo.quadratic) {
    if (bits[key.first] && bits[key.second]) value += w;
  }
  return value;
}

GraphInstance gen_er_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (n < 2) throw InvalidSizeError("Max-Cut graphs need at least 2 vertices");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  GraphInstance g{n, {}, seed};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      // Each pair gets its own draw so the edge set does not depend on loop order.
      if (to_unit_interval(counter_hash(seed, {u, v})) < edge_prob) g.edges.push_back({u, v, 1.0});
    }
  }
  return g;
}

IsingInstance gen_ising(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidSizeError("Ising instances need at least 1 spin");
  IsingInstance s;
  s.n = n;
  s.seed = seed;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s.couplings[{i, j}] = rng.uniform(-1.0, 1.0);
  }
  s.fields.resize(n);
  for (auto& h : s.fields) h = rng.uniform(-1.0, 1.0);
  return s;
}

TspInstance gen_tsp(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidSizeError("TSP instances need at least 3 cities");
  SplitMix64 rng(seed);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.uniform01();
    y[i] = rng.uniform01();
  }
  TspInstance t{n, std::vector<double>(n * n, 0.0), seed};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(x[i] - x[j], y[i] - y[j]);
      t.distance[i * n + j] = d;
      t.distance[j * n + i] = d;
    }
  }
  return t;
}

ProblemInstance generate(ProblemKind kind, std::size_t n, std::uint64_t seed) {
  switch (kind) {
    case ProblemKind::maxcut: return gen_er_graph(n, 0.5, seed);
    case ProblemKind::ising: return gen_ising(n, seed);
    case ProblemKind::tsp: return gen_tsp(n, seed);
  }
  throw ConfigError("unknown problem kind");
}

namespace {

void check_length(std::size_t got, std::size_t want) {
  if (got != want) {
    throw ShapeError("candidate has " + std::to_string(got) + " entries, instance expects " +
                     std::to_string(want));
  }
}

bool is_permutation_of_range(std::span<const int> tour) {
  std::vector<bool> seen(tour.size(), false);
  for (int c : tour) {
    if (c < 0 || static_cast<std::size_t>(c) >= tour.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

}  // namespace

double cut_value(const GraphInstance& graph, std::span<const int> side) {
  check_length(side.size(), graph.n);
  double cut = 0.0;
  for (const auto& e : graph.edges) {
    if ((side[e.u] != 0) != (side[e.v] != 0)) cut += e.weight;
  }
  return cut;
}

double ising_energy(const IsingInstance& ising, std::span<const int> spins) {
  check_length(spins.size(), ising.n);
  for (int s : spins) {
    if (s != 1 && s != -1) throw ShapeError("spins must be -1 or +1");
  }
  double h = 0.0;
  for (const auto& [key, j] : ising.couplings) h -= j * spins[key.first] * spins[key.second];
  double field = 0.0;
  for (std::size_t i = 0; i < ising.n; ++i) field += ising.fields[i] * spins[i];
  return h - ising.mu * field;
}

double tour_length(const TspInstance& tsp, std::span<const int> tour) {
  check_length(tour.size(), tsp.n);
  double len = 0.0;
  for (std::size_t t = 0; t < tour.size(); ++t) {
    len += tsp.at(tour[t], tour[(t + 1) % tour.size()]);
  }
  return len;
}

ObjectiveValue evaluate(const ProblemInstance& instance, const Candidate& candidate) {
  const ProblemKind kind = kind_of(instance);
  ObjectiveValue out{0.0, direction_of(kind), true};
  switch (kind) {
    case ProblemKind::maxcut:
      out.value = cut_value(std::get<GraphInstance>(instance), candidate.values);
      break;
    case ProblemKind::ising:
      out.value = ising_energy(std::get<IsingInstance>(instance), candidate.values);
      break;
    case ProblemKind::tsp: {
      const auto& tsp = std::get<TspInstance>(instance);
      check_length(candidate.values.size(), tsp.n);
      if (!candidate.feasible || !is_permutation_of_range(candidate.values)) {
        out.feasible = false;
        break;
      }
      out.value = tour_length(tsp, candidate.values);
      break;
    }
  }
  return out;
}

double tsp_penalty_weight(const TspInstance& tsp) noexcept {
  return 2.0 * static_cast<double>(tsp.n) * tsp.max_distance();
}

QuboForm to_qubo(const GraphInstance& graph) {
  QuboForm q;
  q.m = graph.n;
  q.linear.assign(graph.n, 0.0);
  q.direction = Direction::maximize;
  q.decoder = ProblemKind::maxcut;
  // w (x_u + x_v - 2 x_u x_v) is w exactly when the edge crosses.
  for (const auto& e : graph.edges) {
    q.linear[e.u] += e.weight;
    q.linear[e.v] += e.weight;
    q.add_quadratic(e.u, e.v, -2.0 * e.weight);
  }
  return q;
}

QuboForm to_qubo(const IsingInstance& ising) {
  QuboForm q;
  q.m = ising.n;
  q.linear.assign(ising.n, 0.0);
  q.direction = Direction::minimize;
  q.decoder = ProblemKind::ising;
  // s = 2x - 1, so s_i s_j = 4 x_i x_j - 2 x_i - 2 x_j + 1.
  for (const auto& [key, j] : ising.couplings) {
    const auto [a, b] = key;
    q.add_quadratic(a, b, -4.0 * j);
    q.linear[a] += 2.0 * j;
    q.linear[b] += 2.0 * j;
    q.constant -= j;
  }
  for (std::size_t i = 0; i < ising.n; ++i) {
    q.linear[i] -= 2.0 * ising.mu * ising.fields[i];
    q.constant += ising.mu * ising.fields[i];
  }
  return q;
}

QuboForm to_qubo(const TspInstance& tsp) {
  const std::size_t n = tsp.n;
  QuboForm q;
  q.m = n * n;
  q.linear.assign(q.m, 0.0);
  q.direction = Direction::minimize;
  q.decoder = ProblemKind::tsp;

  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t next = (t + 1) % n;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v) q.add_quadratic(tsp_var(n, u, t), tsp_var(n, v, next), tsp.at(u, v));
      }
    }
  }

  // P (1 - sum x)^2 = P (1 - sum x + 2 sum_{a<b} x_a x_b) for binary x.
  const double penalty = tsp_penalty_weight(tsp);
  auto one_hot = [&](auto var_of) {
    q.constant += penalty;
    for (std::size_t a = 0; a < n; ++a) {
      q.linear[var_of(a)] -= penalty;
      for (std::size_t b = a + 1; b < n; ++b) q.add_quadratic(var_of(a), var_of(b), 2.0 * penalty);
    }
  };
  for (std::size_t city = 0; city < n; ++city) {
    one_hot([&](std::size_t t) { return tsp_var(n, city, t); });
  }
  for (std::size_t t = 0; t < n; ++t) {
    one_hot([&](std::size_t city) { return tsp_var(n, city, t); });
  }
  return q;
}

QuboForm to_qubo(const ProblemInstance& instance) {
  return std::visit([](const auto& p) { return to_qubo(p); }, instance);
}

Candidate decode_tsp(std::span<const std::uint8_t> bits, const TspInstance& tsp) {
  const std::size_t n = tsp.n;
  if (bits.size() != n * n) {
    throw ShapeError("TSP bitstring must have n^2 = " + std::to_string(n * n) + " entries");
  }
  Candidate c{std::vector<int>(n, -1), true};
  for (std::size_t city = 0; city < n; ++city) {
    std::size_t row = 0;
    for (std::size_t t = 0; t < n; ++t) row += bits[tsp_var(n, city, t)] ? 1 : 0;
    if (row != 1) c.feasible = false;
  }
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t count = 0;
    for (std::size_t city = 0; city < n; ++city) {
      if (bits[tsp_var(n, city, t)]) {
        ++count;
        c.values[t] = static_cast<int>(city);
      }
    }
    if (count != 1) {
      c.values[t] = -1;
      c.feasible = false;
    }
  }
  return c;
}

Bits encode_tsp(std::span<const int> tour, std::size_t n) {
  if (tour.size() != n || !is_permutation_of_range(tour)) throw ShapeError("tour is not a permutation of 0..n-1");
  Bits bits(n * n, 0);
  for (std::size_t t = 0; t < n; ++t) bits[tsp_var(n, static_cast<std::size_t>(tour[t]), t)] = 1;
  return bits;
}

Candidate decode(const ProblemInstance& instance, std::span<const std::uint8_t> bits) {
  switch (kind_of(instance)) {
    case ProblemKind::maxcut: {
      check_length(bits.size(), size_of(instance));
      return Candidate{std::vector<int>(bits.begin(), bits.end()), true};
    }
    case ProblemKind::ising: {
      check_length(bits.size(), size_of(instance));
      Candidate c{std::vector<int>(bits.size()), true};
      for (std::size_t i = 0; i < bits.size(); ++i) c.values[i] = bits[i] ? 1 : -1;
      return c;
    }
    case ProblemKind::tsp: return decode_tsp(bits, std::get<TspInstance>(instance));
  }
  throw ConfigError("unknown problem kind");
}

Bits encode(const ProblemInstance& instance, const Candidate& candidate) {
  switch (kind_of(instance)) {
    case ProblemKind::maxcut:
    case ProblemKind::ising: {
      check_length(candidate.values.size(), size_of(instance));
      Bits bits(candidate.values.size());
      for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = candidate.values[i] > 0 ? 1 : 0;
      return bits;
    }
    case ProblemKind::tsp: return encode_tsp(candidate.values, size_of(instance));
  }
  throw ConfigError("unknown problem kind");
}

// JSON shapes:
//   maxcut: {"n", "edges": [[u, v, w], ...], "seed"}
//   ising:  {"n", "J": [[i, j, J_ij], ...], "h": [...], "mu", "seed"}
//   tsp:    {"n", "distance": [[...], ...], "seed"}

void to_json(nlohmann::json& j, const GraphInstance& g) {
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.weight});
  j = {{"n", g.n}, {"edges", std::move(edges)}, {"seed", g.seed}};
}

void from_json(const nlohmann::json& j, GraphInstance& g) {
  g.n = j.at("n").get<std::size_t>();
  g.seed = j.at("seed").get<std::uint64_t>();
  g.edges.clear();
  for (const auto& e : j.at("edges")) {
    Edge edge{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<double>()};
    if (edge.u >= edge.v || edge.v >= g.n) throw DataError("edge indices must satisfy u < v < n");
    g.edges.push_back(edge);
  }
}

void to_json(nlohmann::json& j, const IsingInstance& s) {
  auto couplings = nlohmann::json::array();
  for (const auto& [key, w] : s.couplings) couplings.push_back({key.first, key.second, w});
  j = {{"n", s.n}, {"J", std::move(couplings)}, {"h", s.fields}, {"mu", s.mu}, {"seed", s.seed}};
}

void from_json(const nlohmann::json& j, IsingInstance& s) {
  s.n = j.at("n").get<std::size_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.mu = j.at("mu").get<double>();
  s.fields = j.at("h").get<std::vector<double>>();
  if (s.fields.size() != s.n) throw DataError("field vector length must equal n");
  s.couplings.clear();
  for (const auto& c : j.at("J")) {
    const auto a = c.at(0).get<std::size_t>();
    const auto b = c.at(1).get<std::size_t>();
    if (a >= b || b >= s.n) throw DataError("coupling indices must satisfy i < j < n");
    s.couplings[{a, b}] = c.at(2).get<double>();
  }
}

void to_json(nlohmann::json& j, const TspInstance& t) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.n; ++i) {
    rows.push_back(std::vector<double>(t.distance.begin() + i * t.n, t.distance.begin() + (i + 1) * t.n));
  }
  j = {{"n", t.n}, {"distance", std::move(rows)}, {"seed", t.seed}};
}

void from_json(const nlohmann::json& j, TspInstance& t) {
  t.n = j.at("n").get<std::size_t>();
  t.seed = j.at("seed").get<std::uint64_t>();
  t.distance.clear();
  const auto& rows = j.at("distance");
  if (rows.size() != t.n) throw DataError("distance matrix must have n rows");
  for (const auto& row : rows) {
    if (row.size() != t.n) throw DataError("distance matrix must be square");
    for (const auto& d : row) t.distance.push_back(d.get<double>());
  }
}

nlohmann::json instance_to_json(const ProblemInstance& instance) {
  nlohmann::json j = std::visit([](const auto& p) { return nlohmann::json(p); }, instance);
  j["problem"] = to_string(kind_of(instance));
  return j;
}

ProblemInstance instance_from_json(const nlohmann::json& j) {
  switch (parse_problem_kind(j.at("problem").get<std::string>())) {
    case ProblemKind::maxcut: return j.get<GraphInstance>();
    case ProblemKind::ising: return j.get<IsingInstance>();
    case ProblemKind::tsp: return j.get<TspInstance>();
  }
  throw DataError("unknown problem kind");
}

}  // namespace quas
