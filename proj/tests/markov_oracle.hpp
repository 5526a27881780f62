#pragma once

// Exact success probability of single-clause PCL training with the fixed
// lexicographic epoch order. Literal automata never interact, so the joint
// law factorizes into one 2N-state chain per literal; each chain is pushed
// through the per-sample transition kernels for every epoch.

#include <cstdint>
#include <vector>

#include "reference.hpp"

namespace markov_oracle {

// Probability that literal k ends in the wanted action after `epochs`.
inline double literal_correct(const std::vector<bool>& target, std::size_t n, std::size_t k, double p, int half,
                              std::uint64_t epochs) {
  const int states = 2 * half;
  std::vector<double> dist(static_cast<std::size_t>(states) + 1, 0.0), next(dist.size());
  dist[static_cast<std::size_t>(half)] = 0.5;  // FiftyFifty start
  dist[static_cast<std::size_t>(half) + 1] = 0.5;
  const std::uint64_t count = 1ULL << n;
  for (std::uint64_t e = 0; e < epochs; ++e) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto bits = reference::lexicographic(i, n);
      const bool positive = reference::satisfies(target, bits, n);
      const bool value = reference::literal(bits, n, k);
      std::fill(next.begin(), next.end(), 0.0);
      for (int s = 1; s <= states; ++s) {
        const double mass = dist[static_cast<std::size_t>(s)];
        if (mass == 0.0) continue;
        const bool include = s > half;
        const double r = reference::table_reward(positive, value, include, p);
        const int rewarded = include ? std::min(states, s + 1) : std::max(1, s - 1);
        const int penalized = include ? s - 1 : s + 1;
        next[static_cast<std::size_t>(rewarded)] += mass * r;
        next[static_cast<std::size_t>(penalized)] += mass * (1 - r);
      }
      dist.swap(next);
    }
  }
  double correct = 0.0;
  for (int s = 1; s <= states; ++s) {
    if ((s > half) == target[k]) correct += dist[static_cast<std::size_t>(s)];
  }
  return correct;
}

inline double success_probability(const std::vector<bool>& target, std::size_t n, double p, int half,
                                  std::uint64_t epochs) {
  double prob = 1.0;
  for (std::size_t k = 0; k < 2 * n; ++k) prob *= literal_correct(target, n, k, p, half, epochs);
  return prob;
}

// Expected success rate for a random target: m uniform in [1, n], then a
// uniform m-subset of variables with fair polarities.
inline double expected_success_rate(std::size_t n, double p, int half, std::uint64_t epochs) {
  std::vector<double> sum_by_m(n + 1, 0.0);
  std::vector<std::uint64_t> count_by_m(n + 1, 0);
  std::uint64_t combos = 1;
  for (std::size_t v = 0; v < n; ++v) combos *= 3;
  for (std::uint64_t code = 1; code < combos; ++code) {
    std::vector<bool> target(2 * n, false);
    std::size_t m = 0;
    std::uint64_t c = code;
    for (std::size_t v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) target[v] = true, ++m;
      if (c % 3 == 2) target[n + v] = true, ++m;
    }
    sum_by_m[m] += success_probability(target, n, p, half, epochs);
    ++count_by_m[m];
  }
  double rate = 0.0;
  for (std::size_t m = 1; m <= n; ++m) rate += sum_by_m[m] / static_cast<double>(count_by_m[m]) / static_cast<double>(n);
  return rate;
}

}  // namespace markov_oracle
