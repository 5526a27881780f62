#include "pcl/tm_machine.hpp"

#include <algorithm>
#include <string>

#include "pcl/errors.hpp"

namespace pcl {

IncludeMask TmClause::mask() const {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < automata.size(); ++k) {
    if (automata[k].includes()) bits |= 1ULL << k;
  }
  return IncludeMask(features(), bits);
}

double feedback_probability(int vote_sum, bool y, int margin) noexcept {
  const int clamped = std::clamp(vote_sum, -margin, margin);
  const int error = y ? margin - clamped : margin + clamped;
  return static_cast<double>(error) / (2.0 * margin);
}

void type_i_feedback(TmClause& clause, const Input& x, const TmParams& params, Rng& rng) {
  const std::uint64_t values = literal_values(x);
  const bool output = clause_eval(clause.mask(), x);
  const double low = 1.0 / params.specificity;
  const double high = (params.specificity - 1.0) / params.specificity;
  for (std::size_t k = 0; k < clause.automata.size(); ++k) {
    Automaton& a = clause.automata[k];
    const bool literal = (values >> k) & 1U;
    const double u = rng.uniform01();
    if (output && literal) {
      // Ia: reward Include, penalize Exclude; both move the state up.
      const double p = a.includes() && params.boost_true_positive ? 1.0 : high;
      if (u < p) a.increment();
    } else if (output) {
      // Included 0-literal would have forced output 0; only Exclude is reachable here.
      if (!a.includes() && u < low) a.decrement();
    } else if (u < low) {
      // Ib: penalize Include, reward Exclude; both move the state down.
      a.decrement();
    }
  }
}

void type_ii_feedback(TmClause& clause, const Input& x) {
  if (!clause_eval(clause.mask(), x)) return;
  const std::uint64_t values = literal_values(x);
  for (std::size_t k = 0; k < clause.automata.size(); ++k) {
    Automaton& a = clause.automata[k];
    if (!((values >> k) & 1U) && !a.includes()) a.penalize();
  }
}

TmMachine::TmMachine(std::size_t n, std::size_t clause_count, TmParams params, int half_size, InitPolicy init,
                     Rng& rng)
    : n_(n), params_(params) {
  check_feature_count(n);
  clauses_.reserve(clause_count);
  for (std::size_t j = 0; j < clause_count; ++j) {
    TmClause clause;
    clause.polarity = polarity_of(j);
    clause.automata.reserve(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) clause.automata.push_back(new_automaton(half_size, init, rng));
    clauses_.push_back(std::move(clause));
  }
  validate();
}

TmMachine::TmMachine(std::size_t n, std::vector<TmClause> clauses, TmParams params)
    : n_(n), clauses_(std::move(clauses)), params_(params) {
  check_feature_count(n);
  validate();
}

void TmMachine::validate() const {
  if (clauses_.empty() || clauses_.size() % 2 != 0)
    throw invalid_parameter("TM clause count must be even and positive, got " + std::to_string(clauses_.size()));
  if (params_.margin < 1) throw invalid_parameter("TM margin T must be >= 1");
  if (!(params_.specificity > 1.0)) throw invalid_parameter("TM specificity s must be > 1");
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    if (clauses_[j].automata.size() != 2 * n_) throw invalid_parameter("TM clause does not have 2n automata");
    if (clauses_[j].polarity != polarity_of(j)) throw invalid_parameter("TM clause polarity does not match its position");
  }
}

int TmMachine::vote_sum(const Input& x) const {
  int v = 0;
  for (const auto& clause : clauses_) {
    if (clause.eval(x)) v += clause.polarity == Polarity::Positive ? 1 : -1;
  }
  return v;
}

void TmMachine::train_step(const Sample& sample, Rng& rng) {
  if (sample.x.n != n_) throw invalid_parameter("sample feature count does not match the TM");
  const bool y = sample.positive();
  const double p = feedback_probability(vote_sum(sample.x), y, params_.margin);
  for (auto& clause : clauses_) {
    if (!(rng.uniform01() < p)) continue;
    const bool type_i = (clause.polarity == Polarity::Positive) == y;
    if (type_i)
      type_i_feedback(clause, sample.x, params_, rng);
    else
      type_ii_feedback(clause, sample.x);
  }
}

TrainReport TmMachine::train_epochs(std::span<const Sample> dataset, std::uint64_t epochs, Rng& rng,
                                    TrainOptions options) {
  TrainReport report;
  if (epochs == 0) return report;
  if (dataset.empty()) {
    report.empty_dataset = true;
    return report;
  }
  std::vector<Sample> order(dataset.begin(), dataset.end());
  for (std::uint64_t e = 0; e < epochs; ++e) {
    if (options.shuffle) shuffle(order.begin(), order.end(), rng);
    for (const auto& s : order) train_step(s, rng);
    report.steps += order.size();
  }
  return report;
}

double TmMachine::accuracy(std::span<const Sample> dataset) const {
  if (dataset.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& s : dataset) correct += classify(s.x) == s.positive();
  return static_cast<double>(correct) / static_cast<double>(dataset.size());
}

}  // namespace pcl
