#pragma once

#include <cstdint>

namespace nlgames {

// Counter-splittable pseudo-random stream (splitmix64). One master seed
// plus a tuple of stream tags yields an independent stream, so draws do
// not depend on the order in which streams are consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Fair +1 / -1.
  int next_sign() { return (next_u64() >> 63) ? +1 : -1; }

  bool next_bool() { return (next_u64() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Stream tags for the harness-derived substreams.
enum class StreamRole : std::uint64_t {
  Referee = 1,  // question assignment
  Alice = 2,    // Alice's private coins
  Bob = 3,      // Bob's private coins
  Pair = 4,     // shared entangled-pair measurement
};

// Derives an independent stream from (master seed, trial, round, role).
inline Rng derive_rng(std::uint64_t master, std::uint64_t trial, std::uint64_t round,
                      StreamRole role) {
  std::uint64_t h = detail::mix64(master ^ 0x5851f42d4c957f2dull);
  h = detail::mix64(h ^ (trial + 0x9e3779b97f4a7c15ull));
  h = detail::mix64(h ^ (round + 0xd1b54a32d192ed03ull));
  h = detail::mix64(h ^ static_cast<std::uint64_t>(role));
  return Rng(h);
}

}  // namespace nlgames
