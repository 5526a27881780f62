#include "pcl/pcl_machine.hpp"

#include <string>

#include "pcl/errors.hpp"

namespace pcl {

double reward_probability(Label label, bool literal_value, Action action, double p) noexcept {
  const bool include = action == Action::Include;
  if (label == Label::Positive) {
    if (literal_value) return include ? p : 1.0 - p;
    return include ? 0.0 : 1.0;
  }
  if (literal_value) return include ? 1.0 - p : p;
  return include ? p : 1.0 - p;
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("inclusion probability " + std::to_string(p) + " outside [0, 1]");
}

void check_width(const PclClause& clause, const Input& x) {
  if (x.n != clause.features())
    throw invalid_parameter("sample has " + std::to_string(x.n) + " features, clause expects " +
                            std::to_string(clause.features()));
}

void feedback(PclClause& clause, const Sample& sample, Rng& rng) {
  const std::uint64_t values = literal_values(sample.x);
  for (std::size_t k = 0; k < clause.automata.size(); ++k) {
    Automaton& automaton = clause.automata[k];
    const double reward = reward_probability(sample.label, (values >> k) & 1U, automaton.action(), clause.p);
    if (rng.uniform01() < reward)
      automaton.reward();
    else
      automaton.penalize();
  }
}

}  // namespace

PclClause PclClause::create(std::size_t n, double p, int half_size, InitPolicy init, Rng& rng) {
  check_feature_count(n);
  check_probability(p);
  PclClause clause;
  clause.p = p;
  clause.automata.reserve(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) clause.automata.push_back(new_automaton(half_size, init, rng));
  return clause;
}

IncludeMask PclClause::mask() const {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < automata.size(); ++k) {
    if (automata[k].includes()) bits |= 1ULL << k;
  }
  return IncludeMask(features(), bits);
}

void feedback_positive(PclClause& clause, const Sample& sample, Rng& rng) {
  if (!sample.positive()) throw contract_violation("feedback_positive called with a negative sample");
  check_width(clause, sample.x);
  feedback(clause, sample, rng);
}

void feedback_negative(PclClause& clause, const Sample& sample, Rng& rng) {
  if (sample.positive()) throw contract_violation("feedback_negative called with a positive sample");
  check_width(clause, sample.x);
  feedback(clause, sample, rng);
}

void apply_feedback(PclClause& clause, const Sample& sample, Rng& rng) {
  check_width(clause, sample.x);
  feedback(clause, sample, rng);
}

bool converged_to(const PclClause& clause, const TargetConjunction& target) {
  if (clause.features() != target.features())
    throw invalid_parameter("clause has " + std::to_string(clause.features()) + " features, target has " +
                            std::to_string(target.features()));
  return clause.mask() == target.mask();
}

PclMachine::PclMachine(std::size_t n, std::span<const double> probabilities, int half_size, InitPolicy init,
                       Rng& rng)
    : n_(n) {
  check_feature_count(n);
  if (probabilities.empty()) throw invalid_parameter("a PCL machine needs at least one clause");
  for (const double p : probabilities) clauses_.push_back(PclClause::create(n, p, half_size, init, rng));
}

PclMachine::PclMachine(std::size_t n, std::vector<PclClause> clauses) : n_(n), clauses_(std::move(clauses)) {
  check_feature_count(n);
  if (clauses_.empty()) throw invalid_parameter("a PCL machine needs at least one clause");
  for (const auto& c : clauses_) {
    if (c.automata.size() != 2 * n) throw invalid_parameter("clause does not have 2n automata");
    check_probability(c.p);
  }
}

void PclMachine::check_sample(const Sample& sample) const {
  if (sample.x.n != n_)
    throw invalid_parameter("sample has " + std::to_string(sample.x.n) + " features, machine expects " +
                            std::to_string(n_));
}

bool PclMachine::classify(const Input& x) const {
  for (const auto& clause : clauses_) {
    if (clause.eval(x)) return true;
  }
  return false;
}

void PclMachine::train_step(const Sample& sample, Rng& rng) {
  check_sample(sample);
  for (auto& clause : clauses_) feedback(clause, sample, rng);
}

TrainReport PclMachine::train_epochs(std::span<const Sample> dataset, std::uint64_t epochs, Rng& rng,
                                     TrainOptions options) {
  TrainReport report;
  if (epochs == 0) return report;
  if (dataset.empty()) {
    report.empty_dataset = true;
    return report;
  }
  for (const auto& s : dataset) check_sample(s);

  std::vector<Sample> order(dataset.begin(), dataset.end());
  for (std::uint64_t e = 0; e < epochs; ++e) {
    if (options.shuffle) shuffle(order.begin(), order.end(), rng);
    for (const auto& s : order) {
      for (auto& clause : clauses_) feedback(clause, s, rng);
    }
    report.steps += order.size();
  }
  return report;
}

}  // namespace pcl
