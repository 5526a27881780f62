#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pcl/automaton.hpp"
#include "pcl/literal.hpp"
#include "pcl/pcl_machine.hpp"
#include "pcl/rng.hpp"

namespace pcl {

// Vanilla Tsetlin Machine used as a baseline next to PCL.
//
// Clauses alternate polarity: clause 1, 3, 5, ... (indices 0, 2, 4, ...) add
// their output to the vote sum, clause 2, 4, ... subtract it. The machine
// predicts 1 when the vote sum is >= 0.

enum class Polarity : std::uint8_t { Positive, Negative };

/// Polarity of the clause at zero-based position `index`.
constexpr Polarity polarity_of(std::size_t index) noexcept {
  return index % 2 == 0 ? Polarity::Positive : Polarity::Negative;
}

struct TmClause {
  std::vector<Automaton> automata;  // 2n entries, indexed by Literal::index
  Polarity polarity = Polarity::Positive;

  std::size_t features() const noexcept { return automata.size() / 2; }
  IncludeMask mask() const;
  bool eval(const Input& x) const { return clause_eval(mask(), x); }

  friend bool operator==(const TmClause&, const TmClause&) = default;
};

struct TmParams {
  int margin = 1;             // T
  double specificity = 3.9;   // s
  bool boost_true_positive = false;

  friend bool operator==(const TmParams&, const TmParams&) = default;
};

/// epsilon / 2T with epsilon = T - clamp(v) for y = 1 and T + clamp(v) for y = 0.
double feedback_probability(int vote_sum, bool y, int margin) noexcept;

/// Type I feedback (Ia when clause and literal are both 1, Ib otherwise).
/// Draws one uniform per literal in index order, including NA and inaction-only cells.
void type_i_feedback(TmClause& clause, const Input& x, const TmParams& params, Rng& rng);

/// Type II feedback: penalize excluded 0-valued literals of a clause that outputs 1. Deterministic.
void type_ii_feedback(TmClause& clause, const Input& x);

class TmMachine {
 public:
  /// Throws invalid_parameter unless clause_count is even and >= 2, margin >= 1, specificity > 1.
  TmMachine(std::size_t n, std::size_t clause_count, TmParams params, int half_size,
            InitPolicy init, Rng& rng);
  TmMachine(std::size_t n, std::vector<TmClause> clauses, TmParams params);

  std::size_t features() const noexcept { return n_; }
  const TmParams& params() const noexcept { return params_; }
  const std::vector<TmClause>& clauses() const noexcept { return clauses_; }
  std::vector<TmClause>& clauses() noexcept { return clauses_; }

  int vote_sum(const Input& x) const;
  bool classify(const Input& x) const { return vote_sum(x) >= 0; }

  /// One online update. Each clause draws its selection uniform first, then
  /// (if selected for Type I) one uniform per literal.
  void train_step(const Sample& sample, Rng& rng);
  TrainReport train_epochs(std::span<const Sample> dataset, std::uint64_t epochs, Rng& rng,
                           TrainOptions options = {});

  /// Fraction of `dataset` classified correctly.
  double accuracy(std::span<const Sample> dataset) const;

  friend bool operator==(const TmMachine&, const TmMachine&) = default;

 private:
  void validate() const;

  std::size_t n_;
  std::vector<TmClause> clauses_;
  TmParams params_;
};

}  // namespace pcl
