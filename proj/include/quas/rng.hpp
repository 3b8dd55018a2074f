#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string_view>

namespace quas {

/// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// FNV-1a over the bytes of a string. Used to turn tags into seed material.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Counter-based hash of a seed and a list of 64-bit words. The result
/// depends only on the values, never on host byte order or word size.
std::uint64_t counter_hash(std::uint64_t seed, std::initializer_list<std::uint64_t> words) noexcept;

/// Seed of instance `index` at `size` for `problem_tag` within a campaign.
std::uint64_t derive_instance_seed(std::uint64_t campaign_seed, std::string_view problem_tag,
                                   std::uint64_t size, std::uint64_t index) noexcept;

/// Child seed for a named purpose ("heuristic", "backend", ...).
std::uint64_t derive_stream_seed(std::uint64_t parent, std::string_view purpose) noexcept;

/// Maps 64 random bits to [0, 1) with 53-bit resolution.
inline double to_unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Small portable generator. Satisfies UniformRandomBitGenerator, but the
/// helper members below are what the library uses: std distributions are
/// implementation-defined and would break cross-platform reproducibility.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  double uniform01() noexcept { return to_unit_interval((*this)()); }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  bool coin() noexcept { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace quas
