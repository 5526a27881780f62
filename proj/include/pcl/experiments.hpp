#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcl/automaton.hpp"
#include "pcl/pcl_machine.hpp"
#include "pcl/rng.hpp"
#include "pcl/target.hpp"

namespace pcl {

// How many literals a random target gets.
struct TargetSizePolicy {
  std::optional<std::size_t> fixed;  // empty: uniform in [1, n]

  static TargetSizePolicy uniform() { return {}; }
  static TargetSizePolicy exactly(std::size_t m) { return {m}; }
};

/// Draws m per the policy, m distinct variables uniformly, and a fair polarity for each.
/// Throws invalid_parameter for n = 0 or a fixed m outside [1, n].
TargetConjunction random_target(std::size_t n, Rng& rng, TargetSizePolicy policy = {});

struct TrialParams {
  std::size_t n = 4;
  double p = 0.75;
  std::uint64_t epochs = 1000;
  int half_size = kDefaultHalfSize;
  bool shuffle = false;
  InitPolicy init = kDefaultInitPolicy;
  TargetSizePolicy target_size{};
};

struct TrialOutcome {
  TargetConjunction target;
  PclClause clause;  // final state of the trained clause
  IncludeMask learned;
  bool success = false;
};

/// One single-clause PCL run on the full truth table of a fresh random target.
///
/// All randomness comes from Rng(seed): first the target, then the clause's
/// initial states, then training. Throws resource_error for n > 20.
TrialOutcome run_trial(const TrialParams& params, std::uint64_t seed);

struct ExperimentConfig {
  std::vector<std::size_t> n_values{4};
  std::vector<double> p_values{0.75};
  std::vector<std::uint64_t> epoch_grid{1000};
  std::uint64_t trials = 100;
  int half_size = kDefaultHalfSize;
  std::uint64_t master_seed = 42;
  bool shuffle = false;
  InitPolicy init = kDefaultInitPolicy;
  TargetSizePolicy target_size{};
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws invalid_parameter if a field is out of its domain.
  void validate() const;
};

/// Named grids approximating the two published sweeps: "figure3a", "figure3b".
/// Throws invalid_parameter for an unknown name.
ExperimentConfig preset(std::string_view name);

struct SweepRow {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t epochs = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;  // master seed of the sweep

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (n, p, epochs)
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Seed of one trial: derive_seed(master, {n, p_index, epochs, trial}), where p_index
/// is the position of p in config.p_values.
std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t p_index, std::uint64_t epochs,
                         std::uint64_t trial);

/// Runs config.trials trials per (n, p, epochs) cell, in parallel when threads != 1.
SweepResult sweep(const ExperimentConfig& config);

/// Shortest decimal that round-trips `value`, '.' separator.
std::string format_probability(double value);

/// Header `n,p,epochs,trials,successes,seed`, one line per row, every line newline-terminated.
void emit_csv(const SweepResult& result, std::ostream& out);
/// Throws std::runtime_error naming `path` if the file cannot be written.
void write_csv(const SweepResult& result, const std::filesystem::path& path);
/// Inverse of emit_csv; throws invalid_parameter on a malformed header or line.
SweepResult parse_csv(std::istream& in);

}  // namespace pcl
