#pragma once

#include <cstdint>
#include <random>

namespace nnsmooth {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Explicit, value-semantic RNG state. Every randomized operation takes one
/// of these by reference and advances it; copying the state replays the draw
/// sequence exactly. Trial substreams come from split(), which is a pure
/// function of (master seed, index), so trials are order-insensitive.
class RngState {
 public:
  RngState() : RngState(0) {}
  explicit RngState(std::uint64_t seed) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s), b = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
  }

  static RngState split(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return RngState(splitmix64(s));
  }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  std::uint64_t uniform_index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  std::uint64_t next_u64() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

  bool operator==(const RngState& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nnsmooth
