#include "pcl/theory.hpp"

#include <cmath>
#include <sstream>

#include "pcl/pcl_machine.hpp"

namespace pcl {

std::string_view to_string(LiteralClass c) {
  switch (c) {
    case LiteralClass::L1: return "L1";
    case LiteralClass::L2: return "L2";
    case LiteralClass::L3: return "L3";
  }
  return "?";
}

std::string_view to_string(SampleClass c) {
  switch (c) {
    case SampleClass::A1: return "A1";
    case SampleClass::A2: return "A2";
    case SampleClass::A3: return "A3";
    case SampleClass::A4: return "A4";
  }
  return "?";
}

LiteralClass classify_literal(const TargetConjunction& target, Literal l) {
  if (l.variable >= target.features()) throw invalid_parameter("literal " + l.name() + " out of range");
  if (target.contains(l)) return LiteralClass::L1;
  if (target.contains(l.complement())) return LiteralClass::L2;
  return LiteralClass::L3;
}

SampleClass classify_sample(const TargetConjunction& target, Literal l, const Input& x) {
  if (x.n != target.features()) throw invalid_parameter("input width does not match the target");
  const bool positive = label_sample(target, x) == Label::Positive;
  const bool value = literal_value(x, l);
  if (positive) return value ? SampleClass::A1 : SampleClass::A2;
  return value ? SampleClass::A3 : SampleClass::A4;
}

FrequencyRow freq_closed_form(std::size_t n, std::size_t m, LiteralClass lc) {
  if (m < 1 || m > n || n > 62)
    throw invalid_parameter("need 1 <= m <= n <= 62, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  const auto pow2 = [](std::size_t e) { return std::uint64_t{1} << e; };
  const std::uint64_t all = pow2(n);
  const std::uint64_t half = pow2(n - 1);
  const std::uint64_t positives = pow2(n - m);
  switch (lc) {
    case LiteralClass::L1: return {{positives, 0, all - positives - half, half}};
    case LiteralClass::L2: return {{0, positives, half, all - positives - half}};
    case LiteralClass::L3: {
      if (m == n) throw empty_class_error("there are no L3 literals when m = n");
      const std::uint64_t quarter = pow2(n - m - 1);
      return {{quarter, quarter, half - quarter, half - quarter}};
    }
  }
  throw invalid_parameter("unknown literal class");
}

FrequencyRow freq_enumerate(const TargetConjunction& target, Literal l) {
  const std::size_t n = target.features();
  if (n > kMaxEnumerationFeatures)
    throw resource_error("enumeration over 2^" + std::to_string(n) + " samples exceeds the bound of 2^" +
                         std::to_string(kMaxEnumerationFeatures));
  if (l.variable >= n) throw invalid_parameter("literal " + l.name() + " out of range");
  FrequencyRow row;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    ++row.counts[static_cast<std::size_t>(classify_sample(target, l, Input::from_index(i, n)))];
  }
  return row;
}

FrequencyTable frequency_table(std::size_t n, std::size_t m) {
  FrequencyTable table;
  table.n = n;
  table.m = m;
  table.rows[0] = freq_closed_form(n, m, LiteralClass::L1);
  table.rows[1] = freq_closed_form(n, m, LiteralClass::L2);
  table.has_l3 = m < n;
  if (table.has_l3) table.rows[2] = freq_closed_form(n, m, LiteralClass::L3);
  return table;
}

namespace {

// Targets checked at size n: every non-contradictory conjunction while that
// stays small, otherwise one per m (first m variables, alternating polarity).
constexpr std::size_t kExhaustiveTargetFeatures = 8;

std::vector<TargetConjunction> targets_for(std::size_t n) {
  std::vector<TargetConjunction> targets;
  if (n <= kExhaustiveTargetFeatures) {
    // Base-3 digit per variable: absent, positive, negated.
    std::uint64_t combos = 1;
    for (std::size_t v = 0; v < n; ++v) combos *= 3;
    for (std::uint64_t code = 1; code < combos; ++code) {
      IncludeMask mask(n);
      std::uint64_t c = code;
      for (std::size_t v = 0; v < n; ++v, c /= 3) {
        if (c % 3 == 1) mask.insert(Literal::pos(v));
        if (c % 3 == 2) mask.insert(Literal::neg(v));
      }
      targets.emplace_back(mask);
    }
  } else {
    for (std::size_t m = 1; m <= n; ++m) {
      IncludeMask mask(n);
      for (std::size_t v = 0; v < m; ++v) mask.insert(v % 2 == 0 ? Literal::pos(v) : Literal::neg(v));
      targets.emplace_back(mask);
    }
  }
  return targets;
}

// Grid {k/20 : k = 1..19}.
std::vector<Rational> twentieths(std::int64_t from, std::int64_t to, bool skip_half) {
  std::vector<Rational> grid;
  for (std::int64_t k = from; k <= to; ++k) {
    if (skip_half && k == 10) continue;
    grid.emplace_back(k, 20);
  }
  return grid;
}

std::string show(const Rational& r) {
  std::ostringstream out;
  out << r.numerator() << '/' << r.denominator();
  return out.str();
}

struct CheckBuilder {
  TheoryCheck check;
  explicit CheckBuilder(std::string name) { check.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++check.cases;
    if (!ok) {
      if (check.failures == 0) check.detail = what;
      ++check.failures;
    }
  }
  TheoryCheck done() {
    check.passed = check.failures == 0;
    return std::move(check);
  }
};

}  // namespace

std::vector<TheoryCheck> verify_theory(std::size_t max_n) {
  if (max_n < 1) throw invalid_parameter("max_n must be >= 1");
  if (max_n > kMaxEnumerationFeatures)
    throw resource_error("verify_theory enumerates 2^n samples; max_n must be <= " +
                         std::to_string(kMaxEnumerationFeatures));
  std::vector<TheoryCheck> checks;
  const Rational half(1, 2);
  using enum SampleClass;

  {
    CheckBuilder c("frequency table: enumeration equals closed form");
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& target : targets_for(n)) {
        for (std::size_t k = 0; k < 2 * n; ++k) {
          const Literal l = Literal::from_index(k, n);
          const FrequencyRow counted = freq_enumerate(target, l);
          const FrequencyRow closed = freq_closed_form(n, target.size(), classify_literal(target, l));
          c.expect(counted == closed && counted.total() == (std::uint64_t{1} << n),
                   "n=" + std::to_string(n) + " target=" + to_string(target.mask()) + " literal=" + l.name());
        }
      }
    }
    checks.push_back(c.done());
  }

  {
    CheckBuilder c("alpha identities: a14 = a23 = a31 + a33 = 1/2");
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (std::size_t m = 1; m <= n; ++m) {
        const auto where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        const auto l1 = freq_closed_form(n, m, LiteralClass::L1);
        const auto l2 = freq_closed_form(n, m, LiteralClass::L2);
        c.expect(relative_frequency<Rational>(l1, A4, n) == half, where + " a14");
        c.expect(relative_frequency<Rational>(l2, A3, n) == half, where + " a23");
        if (m < n) {
          const auto l3 = freq_closed_form(n, m, LiteralClass::L3);
          c.expect(relative_frequency<Rational>(l3, A1, n) + relative_frequency<Rational>(l3, A3, n) == half,
                   where + " a31+a33");
        }
      }
    }
    checks.push_back(c.done());
  }

  {
    CheckBuilder c("include-majority inequality on the 0.05 grid");
    const auto grid = twentieths(1, 19, true);
    for (const auto& p : grid) {
      for (const auto& alpha : grid) {
        const bool expected = (p > half && alpha > half) || (p < half && alpha < half);
        const bool exact = lemma1_holds(p, alpha);
        const bool approx = lemma1_holds(boost::rational_cast<double>(p), boost::rational_cast<double>(alpha));
        c.expect(exact == expected && approx == expected, "p=" + show(p) + " alpha=" + show(alpha));
      }
    }
    checks.push_back(c.done());
  }

  {
    CheckBuilder c("theorem direction for 0.55 <= p <= 0.95");
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (std::size_t m = 1; m <= n; ++m) {
        for (const auto& p : twentieths(11, 19, false)) {
          const auto where = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + show(p);
          const auto l1 = reinforcement_probs(LiteralClass::L1, n, m, p);
          c.expect(l1.include_plus > half && half > l1.exclude_plus, where + " L1");
          const auto l2 = reinforcement_probs(LiteralClass::L2, n, m, p);
          c.expect(l2.exclude_plus > half && half > l2.include_plus, where + " L2");
          if (m < n) {
            const auto l3 = reinforcement_probs(LiteralClass::L3, n, m, p);
            c.expect(l3.exclude_plus > half && half > l3.include_plus, where + " L3");
          }
        }
      }
    }
    checks.push_back(c.done());
  }

  {
    CheckBuilder c("irrelevant literals lose their exclusion bias at p = 1");
    for (std::size_t n = 2; n <= max_n; ++n) {
      for (std::size_t m = 1; m < n; ++m) {
        const auto l3 = reinforcement_probs(LiteralClass::L3, n, m, Rational(1));
        c.expect(l3.exclude_plus == half, "n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
    checks.push_back(c.done());
  }

  {
    CheckBuilder c("reinforcement probabilities are complementary");
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (std::size_t m = 1; m <= n; ++m) {
        for (const auto& p : twentieths(0, 20, false)) {
          for (auto lc : {LiteralClass::L1, LiteralClass::L2, LiteralClass::L3}) {
            if (lc == LiteralClass::L3 && m == n) continue;
            const auto r = reinforcement_probs(lc, n, m, p);
            c.expect(r.include_plus + r.exclude_plus == Rational(1),
                     "n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + show(p) + " " +
                         std::string(to_string(lc)));
          }
        }
      }
    }
    checks.push_back(c.done());
  }

  {
    // Include reinforcement = reward under Include = penalty under Exclude.
    CheckBuilder c("per-class summary agrees with the feedback tables");
    for (const auto& pr : twentieths(0, 20, false)) {
      const double p = boost::rational_cast<double>(pr);
      for (auto sc : {A1, A2, A3, A4}) {
        const Label label = sc == A1 || sc == A2 ? Label::Positive : Label::Negative;
        const bool value = sc == A1 || sc == A3;
        const double via_include = reward_probability(label, value, Action::Include, p);
        const double via_exclude = 1.0 - reward_probability(label, value, Action::Exclude, p);
        const double summary = include_reinforce_prob(sc, p);
        c.expect(via_include == summary && std::abs(via_exclude - summary) <= 1e-12,
                 std::string(to_string(sc)) + " p=" + show(pr));
      }
    }
    checks.push_back(c.done());
  }

  return checks;
}

}  // namespace pcl
