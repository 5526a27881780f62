// pcl: command-line front end for PCL convergence experiments.
//
//   pcl sweep --preset figure3a --out results.csv
//   pcl sweep --n 4 --p 0.25 0.75 1 --epochs 100 1000 --trials 100 --states-half 8 --seed 42
//   pcl trial --n 4 --p 0.75 --epochs 1000 --seed 7
//   pcl verify-theory --max-n 6
//
// Exit status: 0 success, 1 invariant violation, 2 bad arguments.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcl/errors.hpp"
#include "pcl/experiments.hpp"
#include "pcl/snapshot.hpp"
#include "pcl/theory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct SweepArgs {
  std::string preset;
  std::vector<std::size_t> n;
  std::vector<double> p;
  std::vector<std::uint64_t> epochs;
  std::uint64_t trials = 100;
  int half_size = pcl::kDefaultHalfSize;
  std::uint64_t seed = 42;
  bool shuffle = false;
  std::size_t target_size = 0;
  std::string init = std::string(pcl::to_string(pcl::kDefaultInitPolicy));
  unsigned threads = 0;
  std::string out;
};

struct TrialArgs {
  std::size_t n = 4;
  double p = 0.75;
  std::uint64_t epochs = 1000;
  int half_size = pcl::kDefaultHalfSize;
  std::uint64_t seed = 42;
  bool shuffle = false;
  std::size_t target_size = 0;
  std::string init = std::string(pcl::to_string(pcl::kDefaultInitPolicy));
  std::string snapshot;
};

pcl::TargetSizePolicy size_policy(std::size_t m) {
  return m == 0 ? pcl::TargetSizePolicy::uniform() : pcl::TargetSizePolicy::exactly(m);
}

int run_sweep(const SweepArgs& args) {
  pcl::ExperimentConfig config = args.preset.empty() ? pcl::ExperimentConfig{} : pcl::preset(args.preset);
  if (!args.n.empty()) config.n_values = args.n;
  if (!args.p.empty()) config.p_values = args.p;
  if (!args.epochs.empty()) config.epoch_grid = args.epochs;
  config.trials = args.trials;
  config.half_size = args.half_size;
  config.master_seed = args.seed;
  config.shuffle = args.shuffle;
  config.target_size = size_policy(args.target_size);
  config.init = pcl::parse_init_policy(args.init);
  config.threads = args.threads;

  const pcl::SweepResult result = pcl::sweep(config);
  if (args.out.empty() || args.out == "-") {
    pcl::emit_csv(result, std::cout);
  } else {
    pcl::write_csv(result, args.out);
    std::cerr << "wrote " << result.rows.size() << " rows to " << args.out << '\n';
  }
  for (const auto& row : result.rows) {
    if (row.successes > row.trials) return kExitViolation;
  }
  return kExitOk;
}

int run_single_trial(const TrialArgs& args) {
  pcl::TrialParams params{.n = args.n,
                          .p = args.p,
                          .epochs = args.epochs,
                          .half_size = args.half_size,
                          .shuffle = args.shuffle,
                          .init = pcl::parse_init_policy(args.init),
                          .target_size = size_policy(args.target_size)};
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw pcl::invalid_parameter("--p must be in [0, 1]");
  const auto outcome = pcl::run_trial(params, args.seed);
  std::cout << "target:  " << pcl::to_string(outcome.target.mask()) << '\n'
            << "learned: " << pcl::to_string(outcome.learned) << '\n'
            << "success: " << (outcome.success ? "yes" : "no") << '\n';
  if (!args.snapshot.empty()) {
    std::ofstream out(args.snapshot);
    if (!out) throw std::runtime_error("cannot open '" + args.snapshot + "' for writing");
    pcl::write_snapshot(pcl::PclMachine(params.n, {outcome.clause}), out);
  }
  return kExitOk;
}

int run_verify_theory(std::size_t max_n) {
  const auto checks = pcl::verify_theory(max_n);
  bool ok = true;
  for (const auto& check : checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.cases << " cases";
    if (!check.passed) std::cout << ", " << check.failures << " failures, first: " << check.detail;
    std::cout << ")\n";
    ok = ok && check.passed;
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PCL concept-learning experiments"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Success counts over an (n, p, epochs) grid, as CSV");
  sweep->add_option("--preset", sweep_args.preset, "figure3a or figure3b")
      ->check(CLI::IsMember({"figure3a", "figure3b"}));
  sweep->add_option("--n", sweep_args.n, "Feature counts")->check(CLI::Range(1, 20));
  sweep->add_option("--p", sweep_args.p, "Inclusion probabilities")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--epochs", sweep_args.epochs, "Epoch budgets");
  sweep->add_option("--trials", sweep_args.trials, "Trials per cell")->capture_default_str()->check(CLI::PositiveNumber);
  sweep->add_option("--states-half", sweep_args.half_size, "Automaton half size N")->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.seed, "Master seed")->capture_default_str();
  sweep->add_flag("--shuffle", sweep_args.shuffle, "Reshuffle samples every epoch");
  sweep->add_option("--target-size", sweep_args.target_size, "Fixed target size m (0: uniform in [1, n])")
      ->capture_default_str();
  sweep->add_option("--init", sweep_args.init, "Automaton initialization")->capture_default_str()
      ->check(CLI::IsMember({"boundary-exclude", "boundary-include", "uniform", "fifty-fifty"}));
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0: all cores)")->capture_default_str();
  sweep->add_option("--out", sweep_args.out, "CSV destination (default stdout)");

  TrialArgs trial_args;
  auto* trial = app.add_subcommand("trial", "Train one clause on a random target and print it");
  trial->add_option("--n", trial_args.n, "Feature count")->capture_default_str()->check(CLI::Range(1, 20));
  trial->add_option("--p", trial_args.p, "Inclusion probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  trial->add_option("--epochs", trial_args.epochs, "Epochs")->capture_default_str();
  trial->add_option("--states-half", trial_args.half_size, "Automaton half size N")->capture_default_str()
      ->check(CLI::PositiveNumber);
  trial->add_option("--seed", trial_args.seed, "Trial seed")->capture_default_str();
  trial->add_flag("--shuffle", trial_args.shuffle, "Reshuffle samples every epoch");
  trial->add_option("--target-size", trial_args.target_size, "Fixed target size m (0: uniform in [1, n])")
      ->capture_default_str();
  trial->add_option("--init", trial_args.init, "Automaton initialization")->capture_default_str()
      ->check(CLI::IsMember({"boundary-exclude", "boundary-include", "uniform", "fifty-fifty"}));
  trial->add_option("--snapshot", trial_args.snapshot, "Write the trained machine to this file");

  std::size_t max_n = 6;
  auto* verify = app.add_subcommand("verify-theory", "Exhaustive checks of the convergence analysis");
  verify->add_option("--max-n", max_n, "Largest feature count")->capture_default_str()->check(CLI::Range(1, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sweep) return run_sweep(sweep_args);
    if (*trial) return run_single_trial(trial_args);
    if (*verify) return run_verify_theory(max_n);
  } catch (const pcl::invalid_parameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pcl::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
