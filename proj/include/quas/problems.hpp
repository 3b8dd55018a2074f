#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace quas {

enum class ProblemKind { maxcut, ising, tsp };
enum class Direction { maximize, minimize };

std::string_view to_string(ProblemKind kind) noexcept;
std::string_view to_string(Direction direction) noexcept;
/// Throws ConfigError on unknown tags.
ProblemKind parse_problem_kind(std::string_view tag);
Direction parse_direction(std::string_view tag);

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph for Max-Cut. Edges are stored with u < v,
/// sorted lexicographically, without duplicates.
struct GraphInstance {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::uint64_t seed = 0;

  double total_weight() const noexcept;
  friend bool operator==(const GraphInstance&, const GraphInstance&) = default;
};

/// Spin glass with energy H = -sum_{i<j} J_ij s_i s_j - mu sum_j h_j s_j.
struct IsingInstance {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, double> couplings;
  std::vector<double> fields;
  double mu = 1.0;
  std::uint64_t seed = 0;

  friend bool operator==(const IsingInstance&, const IsingInstance&) = default;
};

/// Symmetric TSP over a dense distance matrix (row-major n*n).
struct TspInstance {
  std::size_t n = 0;
  std::vector<double> distance;
  std::uint64_t seed = 0;

  double at(std::size_t i, std::size_t j) const noexcept { return distance[i * n + j]; }
  double max_distance() const noexcept;
  friend bool operator==(const TspInstance&, const TspInstance&) = default;
};

using ProblemInstance = std::variant<GraphInstance, IsingInstance, TspInstance>;

ProblemKind kind_of(const ProblemInstance& instance) noexcept;
Direction direction_of(ProblemKind kind) noexcept;
std::size_t size_of(const ProblemInstance& instance) noexcept;
/// Number of entries a candidate for this instance must carry.
std::size_t candidate_length(const ProblemInstance& instance) noexcept;

using Bits = std::vector<std::uint8_t>;

/// A proposed solution. The meaning of `values` depends on the problem:
/// partition bits (0/1) for Max-Cut, spins (-1/+1) for Ising, and the
/// visiting order of cities for TSP.
struct Candidate {
  std::vector<int> values;
  bool feasible = true;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct ObjectiveValue {
  double value = 0.0;
  Direction direction = Direction::maximize;
  bool feasible = true;
};

/// Binary quadratic objective:
///   constant + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j
struct QuboForm {
  std::size_t m = 0;
  std::vector<double> linear;
  std::map<std::pair<std::size_t, std::size_t>, double> quadratic;
  double constant = 0.0;
  Direction direction = Direction::minimize;
  ProblemKind decoder = ProblemKind::maxcut;

  /// Adds w to the (i, j) coefficient, folding i == j into the linear term.
  void add_quadratic(std::size_t i, std::size_t j, double w);
  double max_abs_coefficient() const noexcept;
};

double qubo_objective(const QuboForm& qubo, std::span<const std::uint8_t> bits);

/// True when `a` is strictly better than `b` under `direction`.
inline bool better(double a, double b, Direction direction) noexcept {
  return direction == Direction::maximize ? a > b : a < b;
}

// Generators. Each is a pure function of its arguments.
GraphInstance gen_er_graph(std::size_t n, double edge_prob, std::uint64_t seed);
IsingInstance gen_ising(std::size_t n, std::uint64_t seed);
TspInstance gen_tsp(std::size_t n, std::uint64_t seed);
ProblemInstance generate(ProblemKind kind, std::size_t n, std::uint64_t seed);

ObjectiveValue evaluate(const ProblemInstance& instance, const Candidate& candidate);
double cut_value(const GraphInstance& graph, std::span<const int> side);
double ising_energy(const IsingInstance& ising, std::span<const int> spins);
double tour_length(const TspInstance& tsp, std::span<const int> tour);

/// Penalty weight for the TSP one-hot constraints: 2 * n * max distance.
double tsp_penalty_weight(const TspInstance& tsp) noexcept;

QuboForm to_qubo(const GraphInstance& graph);
QuboForm to_qubo(const IsingInstance& ising);
QuboForm to_qubo(const TspInstance& tsp);
QuboForm to_qubo(const ProblemInstance& instance);

/// Variable index of "city v at position t" in the TSP encoding.
inline std::size_t tsp_var(std::size_t n, std::size_t city, std::size_t position) noexcept {
  return city * n + position;
}

Candidate decode_tsp(std::span<const std::uint8_t> bits, const TspInstance& tsp);
Bits encode_tsp(std::span<const int> tour, std::size_t n);
/// Bitstring -> candidate for any problem (spins are 2x - 1).
Candidate decode(const ProblemInstance& instance, std::span<const std::uint8_t> bits);
/// Candidate -> bitstring; inverse of decode on feasible candidates.
Bits encode(const ProblemInstance& instance, const Candidate& candidate);

void to_json(nlohmann::json& j, const GraphInstance& g);
void from_json(const nlohmann::json& j, GraphInstance& g);
void to_json(nlohmann::json& j, const IsingInstance& s);
void from_json(const nlohmann::json& j, IsingInstance& s);
void to_json(nlohmann::json& j, const TspInstance& t);
void from_json(const nlohmann::json& j, TspInstance& t);
nlohmann::json instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const nlohmann::json& j);

}  // namespace quas
