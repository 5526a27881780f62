#pragma once

// Computable side of the PCL convergence analysis: literal classes L1-L3,
// sample classes A1-A4, their frequencies over the full truth table, and the
// per-step reinforcement probabilities that drive each literal's automaton.
//
// Frequencies are exact integers. Probability functions are templates over
// the scalar so the same formulas run on double and on boost::rational.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/rational.hpp>

#include "pcl/errors.hpp"
#include "pcl/literal.hpp"
#include "pcl/target.hpp"

namespace pcl {

using Rational = boost::rational<std::int64_t>;

enum class LiteralClass : std::uint8_t { L1, L2, L3 };  // correct, negated-correct, irrelevant
enum class SampleClass : std::uint8_t { A1, A2, A3, A4 };

std::string_view to_string(LiteralClass c);
std::string_view to_string(SampleClass c);

inline constexpr std::size_t kMaxEnumerationFeatures = 20;

LiteralClass classify_literal(const TargetConjunction& target, Literal l);

/// (positive, literal 1) -> A1, (positive, 0) -> A2, (negative, 1) -> A3, (negative, 0) -> A4.
SampleClass classify_sample(const TargetConjunction& target, Literal l, const Input& x);

/// Counts of samples per class A1..A4 for one literal.
struct FrequencyRow {
  std::array<std::uint64_t, 4> counts{};

  std::uint64_t operator[](SampleClass c) const noexcept { return counts[static_cast<std::size_t>(c)]; }
  std::uint64_t total() const noexcept { return counts[0] + counts[1] + counts[2] + counts[3]; }

  friend bool operator==(const FrequencyRow&, const FrequencyRow&) = default;
};

/// Closed-form frequencies for a literal of class `lc` with n features and |C_T| = m.
///   L1: (2^{n-m}, 0, 2^n - 2^{n-m} - 2^{n-1}, 2^{n-1})
///   L2: (0, 2^{n-m}, 2^{n-1}, 2^n - 2^{n-m} - 2^{n-1})
///   L3: (2^{n-m-1}, 2^{n-m-1}, 2^{n-1} - 2^{n-m-1}, 2^{n-1} - 2^{n-m-1})
/// Throws invalid_parameter unless 1 <= m <= n <= 62; empty_class_error for L3 with m = n.
FrequencyRow freq_closed_form(std::size_t n, std::size_t m, LiteralClass lc);

/// Counts classify_sample over all 2^n inputs. Throws resource_error for n > 20.
FrequencyRow freq_enumerate(const TargetConjunction& target, Literal l);

/// Per-class frequencies of every literal class present (L3 omitted when m = n).
struct FrequencyTable {
  std::size_t n = 0;
  std::size_t m = 0;
  std::array<FrequencyRow, 3> rows{};
  bool has_l3 = false;

  const FrequencyRow& operator[](LiteralClass c) const noexcept { return rows[static_cast<std::size_t>(c)]; }
};

FrequencyTable frequency_table(std::size_t n, std::size_t m);

/// alpha_{i,j} = freq(i, j) / 2^n.
template <typename Scalar>
Scalar relative_frequency(const FrequencyRow& row, SampleClass c, std::size_t n) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return Rational(static_cast<std::int64_t>(row[c]), std::int64_t{1} << n);
  } else {
    return static_cast<Scalar>(row[c]) / static_cast<Scalar>(std::uint64_t{1} << n);
  }
}

/// alpha * p + (1 - alpha) * (1 - p).
template <typename Scalar>
Scalar lemma1_value(Scalar p, Scalar alpha) {
  const Scalar one(1);
  return alpha * p + (one - alpha) * (one - p);
}

template <typename Scalar>
bool lemma1_holds(Scalar p, Scalar alpha) {
  return lemma1_value(p, alpha) > Scalar(1) / Scalar(2);
}

/// Probability that one sample of class `c` reinforces Include (reward under Include,
/// equivalently penalty under Exclude). Exclude reinforcement is the complement.
template <typename Scalar>
Scalar include_reinforce_prob(SampleClass c, Scalar p) {
  switch (c) {
    case SampleClass::A1: return p;
    case SampleClass::A2: return Scalar(0);
    case SampleClass::A3: return Scalar(1) - p;
    case SampleClass::A4: return p;
  }
  return Scalar(0);
}

template <typename Scalar>
struct ReinforcementProbs {
  Scalar include_plus;  // P(I+)
  Scalar exclude_plus;  // P(E+)
};

/// Per-step reinforcement probabilities of a literal of class `lc` when samples are
/// drawn uniformly from the full truth table, written the way each case of the
/// convergence argument groups them:
///   L1 (alpha = a11 + a14): I+ = alpha p + (1-alpha)(1-p),  E+ = alpha (1-p) + (1-alpha) p
///   L2: E+ = a22 + a23 p + a24 (1-p),  I+ = a23 (1-p) + a24 p
///   L3: E+ = a31 (1-p) + 1/2,          I+ = (a31 + a34) p + a33 (1-p)
/// Throws empty_class_error for L3 with m = n.
template <typename Scalar>
ReinforcementProbs<Scalar> reinforcement_probs(LiteralClass lc, std::size_t n, std::size_t m, Scalar p) {
  const FrequencyRow row = freq_closed_form(n, m, lc);
  const auto a = [&](SampleClass c) { return relative_frequency<Scalar>(row, c, n); };
  const Scalar one(1);
  const Scalar q = one - p;
  using enum SampleClass;
  switch (lc) {
    case LiteralClass::L1: {
      const Scalar alpha = a(A1) + a(A4);
      return {alpha * p + (one - alpha) * q, alpha * q + (one - alpha) * p};
    }
    case LiteralClass::L2:
      return {a(A3) * q + a(A4) * p, a(A2) + a(A3) * p + a(A4) * q};
    case LiteralClass::L3:
      return {(a(A1) + a(A4)) * p + a(A3) * q, a(A1) * q + one / Scalar(2)};
  }
  return {Scalar(0), Scalar(0)};
}

/// 0.5 < p < 1.
constexpr bool theorem_condition(double p) noexcept { return p > 0.5 && p < 1.0; }

/// One named check of the theory suite.
struct TheoryCheck {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string detail;  // first counterexample, if any
};

/// Runs every exhaustive check for 1 <= n <= max_n: frequency cross-check, alpha identities,
/// include-majority biconditional on the 0.05 grid, and the theorem-direction inequalities
/// (exact rational arithmetic). Throws resource_error for max_n > 20.
std::vector<TheoryCheck> verify_theory(std::size_t max_n);

}  // namespace pcl
