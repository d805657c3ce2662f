#pragma once

#include <cstdint>
#include <random>

namespace albert {

// Seeded generator. Every randomized procedure takes one of these so that a
// run is a pure function of its seed. Per-trial streams are derived with
// for_trial() so trial i sees the same numbers no matter which thread runs it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t index) {
    return Rng(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL) ^
                   mix(index * 0xbf58476d1ce4e5b9ULL + 1)));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace albert
