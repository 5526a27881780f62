#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pcl {

// Random stream used throughout training and experiments.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The distributions below are written out by hand instead of using
// <random>'s distributions, whose algorithms are implementation-defined, so
// that a seed produces the same trajectory with every standard library.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// True with probability `p`; always consumes exactly one draw.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [lo, hi] (inclusive), unbiased by rejection.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

  // UniformRandomBitGenerator interface, so std::shuffle-like helpers work.
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives a child seed from a master seed and an ordered list of counters.
///
/// h = mix64(master); for each counter c: h = mix64(h ^ (c + 0x9e3779b97f4a7c15)).
/// The scheme is part of the CSV reproducibility contract; do not change it.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> counters);

/// Fisher-Yates shuffle driven by Rng::uniform_int (portable, unlike std::shuffle).
template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto count = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = count; i > 1; --i) {
    const auto j = rng.uniform_int(0, i - 1);
    using std::swap;
    swap(first[i - 1], first[j]);
  }
}

}  // namespace pcl
