#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pcl/automaton.hpp"
#include "pcl/literal.hpp"
#include "pcl/rng.hpp"
#include "pcl/target.hpp"

namespace pcl {

enum class Feedback : std::uint8_t { Reward, Penalty };

/// P(Reward) for one literal automaton under PCL feedback; P(Penalty) is the complement
/// (there is no inaction).
///
///                      positive sample          negative sample
///                   literal=1   literal=0    literal=1   literal=0
///   Include            p           0           1-p          p
///   Exclude           1-p          1            p          1-p
double reward_probability(Label label, bool literal_value, Action action, double p) noexcept;

// One conjunctive clause: an automaton per literal plus its inclusion probability.
struct PclClause {
  std::vector<Automaton> automata;  // 2n entries, indexed by Literal::index
  double p = 0.75;

  /// Throws invalid_parameter for p outside [0, 1] or an invalid feature count.
  static PclClause create(std::size_t n, double p, int half_size, InitPolicy init, Rng& rng);

  std::size_t features() const noexcept { return automata.size() / 2; }
  /// Literals whose automaton currently selects Include.
  IncludeMask mask() const;
  bool eval(const Input& x) const { return clause_eval(mask(), x); }

  friend bool operator==(const PclClause&, const PclClause&) = default;
};

/// Positive-sample feedback. Every literal draws exactly one uniform from `rng`, in
/// literal-index order, whether or not its cell is deterministic.
/// Throws contract_violation for a negative sample.
void feedback_positive(PclClause& clause, const Sample& sample, Rng& rng);

/// Negative-sample feedback, same draw discipline. Throws contract_violation for a positive sample.
void feedback_negative(PclClause& clause, const Sample& sample, Rng& rng);

/// Dispatches on the sample label.
void apply_feedback(PclClause& clause, const Sample& sample, Rng& rng);

/// True iff the clause's mask equals the target exactly. Throws invalid_parameter on
/// a feature-count mismatch.
bool converged_to(const PclClause& clause, const TargetConjunction& target);

struct TrainOptions {
  bool shuffle = false;  // reshuffle the dataset at the start of every epoch
};

struct TrainReport {
  std::uint64_t steps = 0;
  bool empty_dataset = false;  // epochs > 0 were requested on an empty dataset; nothing ran
};

// A disjunction of PCL clauses sharing the same feature count.
class PclMachine {
 public:
  /// One clause per entry of `probabilities`.
  PclMachine(std::size_t n, std::span<const double> probabilities, int half_size, InitPolicy init,
             Rng& rng);
  /// Adopts existing clauses; throws invalid_parameter if empty or of mismatched size.
  PclMachine(std::size_t n, std::vector<PclClause> clauses);

  std::size_t features() const noexcept { return n_; }
  const std::vector<PclClause>& clauses() const noexcept { return clauses_; }
  std::vector<PclClause>& clauses() noexcept { return clauses_; }

  /// OR over the clauses' current masks.
  bool classify(const Input& x) const;

  /// Feedback to every clause, in clause order, each with its own p.
  void train_step(const Sample& sample, Rng& rng);

  /// `epochs` passes over `dataset` (in the given order unless options.shuffle).
  TrainReport train_epochs(std::span<const Sample> dataset, std::uint64_t epochs, Rng& rng,
                           TrainOptions options = {});

  friend bool operator==(const PclMachine&, const PclMachine&) = default;

 private:
  void check_sample(const Sample& sample) const;

  std::size_t n_;
  std::vector<PclClause> clauses_;
};

}  // namespace pcl
