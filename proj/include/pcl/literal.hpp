#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pcl {

/// Masks pack 2n literals into 64 bits.
inline constexpr std::size_t kMaxFeatures = 32;

/// Throws invalid_parameter unless 1 <= n <= kMaxFeatures.
void check_feature_count(std::size_t n);

// A boolean assignment to n features. Bit v of `bits` holds x_{v+1}.
struct Input {
  std::uint64_t bits = 0;
  std::size_t n = 0;

  /// Builds from 0/1 values listed as (x_1, ..., x_n).
  static Input from_values(std::initializer_list<int> values);
  /// The i-th assignment of the lexicographic enumeration (x_1 is the most significant digit).
  static Input from_index(std::uint64_t index, std::size_t n);

  bool value(std::size_t variable) const noexcept { return (bits >> variable) & 1U; }

  friend bool operator==(const Input&, const Input&) = default;
};

/// All 2^n assignments in lexicographic order: (0,..,0), (0,..,0,1), ..., (1,..,1).
std::vector<Input> all_inputs(std::size_t n);

enum class Label : std::uint8_t { Negative, Positive };

struct Sample {
  Input x;
  Label label = Label::Negative;

  bool positive() const noexcept { return label == Label::Positive; }
  friend bool operator==(const Sample&, const Sample&) = default;
};

// Literal x_{variable+1} or its negation. Within a clause the literal's
// automaton sits at index() : x_1..x_n first, then not x_1..not x_n.
struct Literal {
  std::size_t variable = 0;
  bool negated = false;

  static constexpr Literal pos(std::size_t variable) { return {variable, false}; }
  static constexpr Literal neg(std::size_t variable) { return {variable, true}; }
  /// Inverse of index(); throws invalid_parameter if index >= 2n.
  static Literal from_index(std::size_t index, std::size_t n);

  constexpr std::size_t index(std::size_t n) const noexcept { return negated ? n + variable : variable; }
  constexpr Literal complement() const noexcept { return {variable, !negated}; }

  /// "x3" or "NOT x3".
  std::string name() const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Truth value of `l` on `x`; throws invalid_parameter if the variable is out of range.
bool literal_value(const Input& x, Literal l);

/// Truth values of all 2n literals packed as a mask (bit k = literal with index k).
inline std::uint64_t literal_values(const Input& x) noexcept {
  const std::uint64_t low = (1ULL << x.n) - 1;
  return (x.bits & low) | ((~x.bits & low) << x.n);
}

// Set of included literals over 2n literals.
class IncludeMask {
 public:
  IncludeMask() = default;
  explicit IncludeMask(std::size_t n, std::uint64_t bits = 0);
  IncludeMask(std::size_t n, std::initializer_list<Literal> literals);

  std::size_t features() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Literal l) const noexcept { return (bits_ >> l.index(n_)) & 1U; }
  void insert(Literal l);
  void erase(Literal l);
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }

  /// True if some variable appears with both polarities.
  bool contradictory() const noexcept;

  std::vector<Literal> literals() const;

  friend bool operator==(const IncludeMask&, const IncludeMask&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Conjunction of the included literals; the empty mask is vacuously true.
inline bool clause_eval(const IncludeMask& mask, const Input& x) noexcept {
  return (mask.bits() & ~literal_values(x)) == 0;
}

/// "x1 AND NOT x2"; the empty conjunction prints as "TRUE".
std::string to_string(const IncludeMask& mask);

}  // namespace pcl
