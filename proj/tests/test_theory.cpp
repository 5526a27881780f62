#include <cmath>

#include "doctest.h"
#include "pcl/errors.hpp"
#include "pcl/pcl_machine.hpp"
#include "pcl/theory.hpp"
#include "reference.hpp"

using pcl::FrequencyRow;
using pcl::Input;
using pcl::Literal;
using pcl::LiteralClass;
using pcl::Rational;
using pcl::SampleClass;
using pcl::TargetConjunction;

namespace {

const TargetConjunction kExample(3, {Literal::pos(0), Literal::neg(1)});  // x1 AND NOT x2

// Brute-force class counts straight from the definitions, sharing nothing with the library.
FrequencyRow brute_force_counts(const TargetConjunction& t, Literal l) {
  const std::size_t n = t.features();
  std::vector<bool> include(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) include[k] = (t.mask().bits() >> k) & 1U;
  FrequencyRow row;
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
    const bool positive = reference::satisfies(include, bits, n);
    const bool value = reference::literal(bits, n, l.index(n));
    const int cls = positive ? (value ? 0 : 1) : (value ? 2 : 3);
    ++row.counts[static_cast<std::size_t>(cls)];
  }
  return row;
}

}  // namespace

TEST_SUITE("theory oracle") {
  TEST_CASE("labels of the worked example") {
    CHECK(pcl::label_sample(kExample, Input::from_values({1, 0, 0})) == pcl::Label::Positive);
    CHECK(pcl::label_sample(kExample, Input::from_values({1, 1, 0})) == pcl::Label::Negative);
    int positives = 0;
    for (const auto& x : pcl::all_inputs(3)) positives += pcl::label_sample(kExample, x) == pcl::Label::Positive;
    CHECK(positives == 2);
  }

  TEST_CASE("literal classes of the worked example") {
    CHECK(pcl::classify_literal(kExample, Literal::pos(0)) == LiteralClass::L1);
    CHECK(pcl::classify_literal(kExample, Literal::neg(1)) == LiteralClass::L1);
    CHECK(pcl::classify_literal(kExample, Literal::neg(0)) == LiteralClass::L2);
    CHECK(pcl::classify_literal(kExample, Literal::pos(1)) == LiteralClass::L2);
    CHECK(pcl::classify_literal(kExample, Literal::pos(2)) == LiteralClass::L3);
    CHECK(pcl::classify_literal(kExample, Literal::neg(2)) == LiteralClass::L3);
  }

  TEST_CASE("literal classes partition the literals") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::uint64_t code = 0; code < (1ULL << (2 * n)); ++code) {
        const pcl::IncludeMask mask(n, code);
        if (mask.empty() || mask.contradictory()) continue;
        const TargetConjunction t(mask);
        std::size_t counts[3] = {0, 0, 0};
        for (std::size_t k = 0; k < 2 * n; ++k)
          ++counts[static_cast<std::size_t>(pcl::classify_literal(t, Literal::from_index(k, n)))];
        REQUIRE(counts[0] == t.size());
        REQUIRE(counts[1] == t.size());
        REQUIRE(counts[2] == 2 * (n - t.size()));
      }
    }
  }

  TEST_CASE("sample classes of the worked example") {
    CHECK(pcl::classify_sample(kExample, Literal::pos(0), Input::from_values({1, 0, 1})) == SampleClass::A1);
    CHECK(pcl::classify_sample(kExample, Literal::pos(0), Input::from_values({1, 0, 0})) == SampleClass::A1);
    CHECK(pcl::classify_sample(kExample, Literal::pos(0), Input::from_values({0, 1, 1})) == SampleClass::A4);
    CHECK(pcl::classify_sample(kExample, Literal::pos(0), Input::from_values({1, 1, 0})) == SampleClass::A3);
    CHECK(pcl::freq_enumerate(kExample, Literal::pos(0))[SampleClass::A2] == 0);
  }

  TEST_CASE("closed-form frequencies") {
    CHECK(pcl::freq_closed_form(3, 2, LiteralClass::L1) == FrequencyRow{{2, 0, 2, 4}});
    CHECK(pcl::freq_enumerate(kExample, Literal::pos(0)) == FrequencyRow{{2, 0, 2, 4}});

    // (n=4, m=2, L3) frozen from the brute-force oracle.
    const TargetConjunction t4(4, {Literal::pos(0), Literal::neg(1)});
    CHECK(brute_force_counts(t4, Literal::pos(3)) == FrequencyRow{{2, 2, 6, 6}});
    CHECK(pcl::freq_closed_form(4, 2, LiteralClass::L3) == FrequencyRow{{2, 2, 6, 6}});

    for (std::size_t n = 1; n <= 10; ++n)
      for (std::size_t m = 1; m <= n; ++m) {
        const auto row = pcl::freq_closed_form(n, m, LiteralClass::L1);
        CHECK(pcl::relative_frequency<Rational>(row, SampleClass::A4, n) == Rational(1, 2));
        CHECK(pcl::relative_frequency<double>(row, SampleClass::A4, n) == 0.5);
      }
  }

  TEST_CASE("closed form equals enumeration for every target up to six features") {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::uint64_t combos = 1;
      for (std::size_t v = 0; v < n; ++v) combos *= 3;
      for (std::uint64_t code = 1; code < combos; ++code) {
        pcl::IncludeMask mask(n);
        std::uint64_t c = code;
        for (std::size_t v = 0; v < n; ++v, c /= 3) {
          if (c % 3 == 1) mask.insert(Literal::pos(v));
          if (c % 3 == 2) mask.insert(Literal::neg(v));
        }
        const TargetConjunction t(mask);
        for (std::size_t k = 0; k < 2 * n; ++k) {
          const Literal l = Literal::from_index(k, n);
          const auto counted = pcl::freq_enumerate(t, l);
          REQUIRE(counted == brute_force_counts(t, l));
          REQUIRE(counted == pcl::freq_closed_form(n, t.size(), pcl::classify_literal(t, l)));
          REQUIRE(counted.total() == (1ULL << n));
        }
      }
    }
  }

  TEST_CASE("frequency errors") {
    CHECK_THROWS_AS(pcl::freq_closed_form(3, 3, LiteralClass::L3), pcl::empty_class_error);
    CHECK_THROWS_AS(pcl::freq_closed_form(3, 0, LiteralClass::L1), pcl::invalid_parameter);
    CHECK_THROWS_AS(pcl::freq_closed_form(3, 4, LiteralClass::L1), pcl::invalid_parameter);
    const TargetConjunction wide(21, {Literal::pos(0)});
    CHECK_THROWS_AS(pcl::freq_enumerate(wide, Literal::pos(0)), pcl::resource_error);
    const auto table = pcl::frequency_table(3, 3);
    CHECK_FALSE(table.has_l3);
    CHECK(pcl::frequency_table(3, 2).has_l3);
  }

  TEST_CASE("include-majority inequality") {
    CHECK(pcl::lemma1_value(0.75, 0.75) == doctest::Approx(0.625));
    CHECK(pcl::lemma1_holds(0.75, 0.75));
    CHECK(pcl::lemma1_holds(0.25, 0.25));
    CHECK(pcl::lemma1_value(0.75, 0.25) == doctest::Approx(0.375));
    CHECK_FALSE(pcl::lemma1_holds(0.75, 0.25));
  }

  TEST_CASE("include-majority biconditional on a fine grid") {
    const Rational half(1, 2);
    for (std::int64_t a = 1; a < 100; ++a)
      for (std::int64_t b = 1; b < 100; ++b) {
        const Rational p(a, 100), alpha(b, 100);
        const bool expected = (p > half && alpha > half) || (p < half && alpha < half);
        REQUIRE(pcl::lemma1_holds(p, alpha) == expected);
      }
  }

  TEST_CASE("per-class include reinforcement") {
    CHECK(pcl::include_reinforce_prob(SampleClass::A2, 0.3) == 0.0);
    CHECK(pcl::include_reinforce_prob(SampleClass::A3, 0.75) == doctest::Approx(0.25));
    CHECK(pcl::include_reinforce_prob(SampleClass::A1, 0.75) == 0.75);
    CHECK(pcl::include_reinforce_prob(SampleClass::A4, 0.75) == 0.75);
  }

  TEST_CASE("per-class include reinforcement matches PCL feedback within 3 standard errors") {
    // x1 AND NOT x2 over three features; literal x3 (L3) visits every class.
    const double p = 0.75;
    const int draws = 10000;
    const Literal l = Literal::pos(2);
    for (auto cls : {SampleClass::A1, SampleClass::A2, SampleClass::A3, SampleClass::A4}) {
      Input chosen;
      for (const auto& x : pcl::all_inputs(3))
        if (pcl::classify_sample(kExample, l, x) == cls) chosen = x;
      const pcl::Sample sample{chosen, pcl::label_sample(kExample, chosen)};
      pcl::Rng rng(static_cast<std::uint64_t>(cls) + 40);
      int include_hits = 0, exclude_hits = 0;
      for (int i = 0; i < draws; ++i) {
        pcl::PclClause c{std::vector<pcl::Automaton>(6, pcl::Automaton(8, 12)), p};
        pcl::apply_feedback(c, sample, rng);
        include_hits += c.automata[l.index(3)].state() == 13;  // reward under Include
        pcl::PclClause e{std::vector<pcl::Automaton>(6, pcl::Automaton(8, 4)), p};
        pcl::apply_feedback(e, sample, rng);
        exclude_hits += e.automata[l.index(3)].state() == 5;  // penalty under Exclude
      }
      const double expected = pcl::include_reinforce_prob(cls, p);
      const double se = std::sqrt(expected * (1 - expected) / draws);
      CAPTURE(pcl::to_string(cls));
      CHECK(std::abs(include_hits / double(draws) - expected) <= 3 * se);
      CHECK(std::abs(exclude_hits / double(draws) - expected) <= 3 * se);
    }
  }

  TEST_CASE("reinforcement probabilities of an L1 literal") {
    const auto r = pcl::reinforcement_probs(LiteralClass::L1, 3, 2, 0.75);
    CHECK(r.include_plus == doctest::Approx(0.625));
    CHECK(r.exclude_plus == doctest::Approx(0.375));
    const auto exact = pcl::reinforcement_probs(LiteralClass::L1, 3, 2, Rational(3, 4));
    CHECK(exact.include_plus == Rational(5, 8));
    CHECK(exact.exclude_plus == Rational(3, 8));
  }

  TEST_CASE("L1 reinforcement replayed through PCL feedback over the truth table") {
    // Uniform sample from the 8 inputs, x1 automaton at an interior state.
    const auto data = pcl::labeled_truth_table(kExample);
    const auto k = Literal::pos(0).index(3);
    pcl::Rng rng(2718);
    const int draws = 20000;
    int include_plus = 0, exclude_plus = 0;
    for (int i = 0; i < draws; ++i) {
      const auto& s = data[rng.uniform_int(0, data.size() - 1)];
      pcl::PclClause inc{std::vector<pcl::Automaton>(6, pcl::Automaton(8, 12)), 0.75};
      pcl::apply_feedback(inc, s, rng);
      include_plus += inc.automata[k].state() == 13;
      pcl::PclClause exc{std::vector<pcl::Automaton>(6, pcl::Automaton(8, 4)), 0.75};
      pcl::apply_feedback(exc, s, rng);
      exclude_plus += exc.automata[k].state() == 3;
    }
    CHECK(std::abs(include_plus / double(draws) - 0.625) <= 0.02);
    CHECK(std::abs(exclude_plus / double(draws) - 0.375) <= 0.02);
  }

  TEST_CASE("direction of reinforcement for p in (0.5, 1)") {
    const Rational half(1, 2);
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t m = 1; m <= n; ++m)
        for (std::int64_t k = 11; k <= 19; ++k) {
          const Rational p(k, 20);
          const auto l1 = pcl::reinforcement_probs(LiteralClass::L1, n, m, p);
          REQUIRE(l1.include_plus > half);
          REQUIRE(half > l1.exclude_plus);
          const auto l2 = pcl::reinforcement_probs(LiteralClass::L2, n, m, p);
          REQUIRE(l2.exclude_plus > half);
          REQUIRE(half > l2.include_plus);
          if (m < n) {
            const auto l3 = pcl::reinforcement_probs(LiteralClass::L3, n, m, p);
            REQUIRE(l3.exclude_plus > half);
            REQUIRE(half > l3.include_plus);
          }
        }
  }

  TEST_CASE("irrelevant literals at p = 1") {
    for (std::size_t n = 2; n <= 6; ++n)
      for (std::size_t m = 1; m < n; ++m) {
        CHECK(pcl::reinforcement_probs(LiteralClass::L3, n, m, Rational(1)).exclude_plus == Rational(1, 2));
        CHECK(pcl::reinforcement_probs(LiteralClass::L3, n, m, 1.0).exclude_plus == 0.5);
      }
    CHECK_THROWS_AS(pcl::reinforcement_probs(LiteralClass::L3, 3, 3, 0.75), pcl::empty_class_error);
  }

  TEST_CASE("convergence condition") {
    CHECK(pcl::theorem_condition(0.75));
    CHECK_FALSE(pcl::theorem_condition(0.5));
    CHECK_FALSE(pcl::theorem_condition(1.0));
    CHECK_FALSE(pcl::theorem_condition(0.25));
  }

  TEST_CASE("verify_theory passes and rejects large bounds") {
    for (const auto& check : pcl::verify_theory(6)) {
      CAPTURE(check.name);
      CAPTURE(check.detail);
      CHECK(check.passed);
      CHECK(check.cases > 0);
    }
    CHECK_THROWS_AS(pcl::verify_theory(21), pcl::resource_error);
  }
}
