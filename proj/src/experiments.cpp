#include "pcl/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "pcl/errors.hpp"
#include "pcl/theory.hpp"

namespace pcl {

TargetConjunction random_target(std::size_t n, Rng& rng, TargetSizePolicy policy) {
  check_feature_count(n);
  std::size_t m = 0;
  if (policy.fixed) {
    m = *policy.fixed;
    if (m < 1 || m > n)
      throw invalid_parameter("fixed target size " + std::to_string(m) + " outside [1, " + std::to_string(n) + "]");
  } else {
    m = static_cast<std::size_t>(rng.uniform_int(1, n));
  }
  // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
  std::vector<std::size_t> variables(n);
  std::iota(variables.begin(), variables.end(), std::size_t{0});
  IncludeMask mask(n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(i, n - 1));
    std::swap(variables[i], variables[j]);
    const bool negated = rng.uniform_int(0, 1) == 1;
    mask.insert({variables[i], negated});
  }
  return TargetConjunction(mask);
}

TrialOutcome run_trial(const TrialParams& params, std::uint64_t seed) {
  if (params.n > kMaxEnumerationFeatures)
    throw resource_error("a trial trains on all 2^n samples; n must be <= " +
                         std::to_string(kMaxEnumerationFeatures));
  Rng rng(seed);
  TargetConjunction target = random_target(params.n, rng, params.target_size);
  const std::vector<Sample> dataset = labeled_truth_table(target);
  const double p = params.p;
  PclMachine machine(params.n, std::span(&p, 1), params.half_size, params.init, rng);
  machine.train_epochs(dataset, params.epochs, rng, {.shuffle = params.shuffle});
  const PclClause& clause = machine.clauses().front();
  return {target, clause, clause.mask(), converged_to(clause, target)};
}

void ExperimentConfig::validate() const {
  if (n_values.empty() || p_values.empty() || epoch_grid.empty())
    throw invalid_parameter("sweep grids must not be empty");
  if (trials < 1) throw invalid_parameter("trials must be >= 1");
  if (half_size < 1) throw invalid_parameter("automaton half size must be >= 1");
  for (const auto n : n_values) {
    if (n < 1 || n > kMaxEnumerationFeatures)
      throw invalid_parameter("feature count " + std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxEnumerationFeatures) + "]");
    if (target_size.fixed && (*target_size.fixed < 1 || *target_size.fixed > n))
      throw invalid_parameter("fixed target size does not fit n=" + std::to_string(n));
  }
  for (const auto p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("inclusion probability " + format_probability(p) + " outside [0, 1]");
  }
}

ExperimentConfig preset(std::string_view name) {
  ExperimentConfig config;
  config.epoch_grid.clear();
  for (std::uint64_t e = 100; e <= 1000; e += 100) config.epoch_grid.push_back(e);
  if (name == "figure3a") {
    config.n_values = {2, 3, 4, 5, 6, 7, 8};
    config.p_values = {0.75};
  } else if (name == "figure3b") {
    config.n_values = {4};
    config.p_values = {0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 1.0};
  } else {
    throw invalid_parameter("unknown preset '" + std::string(name) + "' (expected figure3a or figure3b)");
  }
  return config;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t p_index, std::uint64_t epochs,
                         std::uint64_t trial) {
  return derive_seed(master, {n, p_index, epochs, trial});
}

SweepResult sweep(const ExperimentConfig& config) {
  config.validate();

  struct Cell {
    std::size_t n;
    std::size_t p_index;
    double p;
    std::uint64_t epochs;
  };
  std::vector<Cell> cells;
  for (const auto n : config.n_values)
    for (std::size_t pi = 0; pi < config.p_values.size(); ++pi)
      for (const auto epochs : config.epoch_grid) cells.push_back({n, pi, config.p_values[pi], epochs});
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.n, a.p, a.epochs) < std::tie(b.n, b.p, b.epochs);
  });

  const std::uint64_t total = cells.size() * config.trials;
  std::vector<std::uint8_t> success(total, 0);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t item = next++; item < total; item = next++) {
      const Cell& cell = cells[item / config.trials];
      const std::uint64_t trial = item % config.trials;
      TrialParams params{.n = cell.n,
                         .p = cell.p,
                         .epochs = cell.epochs,
                         .half_size = config.half_size,
                         .shuffle = config.shuffle,
                         .init = config.init,
                         .target_size = config.target_size};
      success[item] = run_trial(params, trial_seed(config.master_seed, cell.n, cell.p_index, cell.epochs, trial)).success;
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepResult result;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto begin = success.begin() + static_cast<std::ptrdiff_t>(c * config.trials);
    const auto count = std::count(begin, begin + static_cast<std::ptrdiff_t>(config.trials), 1);
    result.rows.push_back({cells[c].n, cells[c].p, cells[c].epochs, config.trials,
                           static_cast<std::uint64_t>(count), config.master_seed});
  }
  return result;
}

std::string format_probability(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

namespace {

constexpr std::string_view kCsvHeader = "n,p,epochs,trials,successes,seed";

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size())
    throw invalid_parameter("csv line " + std::to_string(line) + ": bad field '" + std::string(field) + "'");
  return value;
}

}  // namespace

void emit_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : result.rows) {
    out << r.n << ',' << format_probability(r.p) << ',' << r.epochs << ',' << r.trials << ',' << r.successes << ','
        << r.seed << '\n';
  }
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  emit_csv(result, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

SweepResult parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw invalid_parameter("csv: missing or wrong header");
  SweepResult result;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos; rest.remove_prefix(comma + 1))
      fields.push_back(rest.substr(0, comma));
    fields.push_back(rest);
    if (fields.size() != 6) throw invalid_parameter("csv line " + std::to_string(number) + ": expected 6 fields");
    SweepRow row;
    row.n = parse_field<std::size_t>(fields[0], number);
    row.p = parse_field<double>(fields[1], number);
    row.epochs = parse_field<std::uint64_t>(fields[2], number);
    row.trials = parse_field<std::uint64_t>(fields[3], number);
    row.successes = parse_field<std::uint64_t>(fields[4], number);
    row.seed = parse_field<std::uint64_t>(fields[5], number);
    if (row.successes > row.trials)
      throw invalid_parameter("csv line " + std::to_string(number) + ": successes exceed trials");
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace pcl
