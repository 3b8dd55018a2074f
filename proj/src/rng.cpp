#include "quas/rng.hpp"

namespace quas {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t counter_hash(std::uint64_t seed, std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  std::uint64_t counter = 0;
  for (std::uint64_t w : words) {
    h = mix64(h ^ mix64(w + 0x9e3779b97f4a7c15ULL * ++counter));
  }
  return h;
}

std::uint64_t derive_instance_seed(std::uint64_t campaign_seed, std::string_view problem_tag,
                                   std::uint64_t size, std::uint64_t index) noexcept {
  return counter_hash(campaign_seed, {fnv1a64(problem_tag), size, index});
}

std::uint64_t derive_stream_seed(std::uint64_t parent, std::string_view purpose) noexcept {
  return counter_hash(parent, {fnv1a64(purpose)});
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t r;
  do {
    r = (*this)();
  } while (r >= limit);
  return r % bound;
}

}  // namespace quas
