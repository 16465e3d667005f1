#pragma once

#include <cstdint>

namespace mincut {

// Counter-based pseudo-random generator (splitmix64 finalizer over an
// incrementing counter). The key is fixed at construction, so substreams
// derived with stream() do not depend on how many values the parent has
// already produced. That keeps randomized pipelines reproducible even if
// the order of independent draws changes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed) {}

  std::uint64_t next() {
    counter_ += 0x9E3779B97F4A7C15ull;
    return mix(key_ ^ counter_);
  }

  // Uniform in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). Modulo bias is negligible for the bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Independent substream identified by (a, b), derived from the key only.
  Rng stream(std::uint64_t a, std::uint64_t b = 0) const {
    std::uint64_t k = mix(key_ ^ (a + 0x9E3779B97F4A7C15ull));
    k = mix(k ^ (b + 0xD1B54A32D192ED03ull));
    return Rng(k);
  }

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace mincut
