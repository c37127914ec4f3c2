#pragma once

#include <cstdint>
#include <random>

namespace fedcomp {

// Stream purposes. Keeping these disjoint ensures that e.g. batch sampling
// never consumes draws destined for data generation.
enum class RngDomain : std::uint64_t {
  kClientParams = 0x01,
  kClientSamples = 0x02,
  kBatch = 0x03,
  kSigmaProbe = 0x04,
  kPowerIteration = 0x05,
  kTest = 0x7f,
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t domain,
                             std::uint64_t a, std::uint64_t b,
                             std::uint64_t c) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= domain;
  h ^= splitmix64(s);
  s ^= a + 0x165667b19e3779f9ULL;
  h ^= splitmix64(s);
  s ^= b + 0x27d4eb2f165667c5ULL;
  h ^= splitmix64(s);
  s ^= c + 0x85ebca77c2b2ae63ULL;
  h ^= splitmix64(s);
  return h;
}
}  // namespace detail

// A self-contained random stream keyed by (seed, domain, a, b, c).
// Streams for distinct keys are independent, so per-client work can run in
// any order (or in parallel) without perturbing the draws of other clients.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, RngDomain domain, std::uint64_t a = 0,
            std::uint64_t b = 0, std::uint64_t c = 0)
      : engine_(detail::mix_key(seed, static_cast<std::uint64_t>(domain), a, b,
                                c)) {}

  double normal(double mean, double stddev) {
    return mean + stddev * normal_(engine_);
  }

  double uniform01() { return uniform_(engine_); }

  // Inclusive on both ends.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace fedcomp
