#include "pcl/literal.hpp"

#include "pcl/errors.hpp"

namespace pcl {

void check_feature_count(std::size_t n) {
  if (n < 1 || n > kMaxFeatures)
    throw invalid_parameter("feature count " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxFeatures) + "]");
}

Input Input::from_values(std::initializer_list<int> values) {
  Input x;
  x.n = values.size();
  check_feature_count(x.n);
  std::size_t v = 0;
  for (const int value : values) {
    if (value != 0 && value != 1) throw invalid_parameter("input values must be 0 or 1");
    if (value) x.bits |= 1ULL << v;
    ++v;
  }
  return x;
}

Input Input::from_index(std::uint64_t index, std::size_t n) {
  check_feature_count(n);
  Input x;
  x.n = n;
  for (std::size_t v = 0; v < n; ++v) {
    if ((index >> (n - 1 - v)) & 1U) x.bits |= 1ULL << v;
  }
  return x;
}

std::vector<Input> all_inputs(std::size_t n) {
  check_feature_count(n);
  std::vector<Input> inputs;
  inputs.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) inputs.push_back(Input::from_index(i, n));
  return inputs;
}

Literal Literal::from_index(std::size_t index, std::size_t n) {
  if (index >= 2 * n)
    throw invalid_parameter("literal index " + std::to_string(index) + " outside [0, " + std::to_string(2 * n) + ")");
  return index < n ? pos(index) : neg(index - n);
}

std::string Literal::name() const {
  return (negated ? "NOT x" : "x") + std::to_string(variable + 1);
}

bool literal_value(const Input& x, Literal l) {
  if (l.variable >= x.n)
    throw invalid_parameter("literal " + l.name() + " out of range for " + std::to_string(x.n) + " features");
  return x.value(l.variable) != l.negated;
}

IncludeMask::IncludeMask(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_feature_count(n);
  const std::uint64_t valid = 2 * n == 64 ? ~0ULL : (1ULL << (2 * n)) - 1;
  if (bits & ~valid) throw invalid_parameter("mask has bits beyond 2n literals");
}

IncludeMask::IncludeMask(std::size_t n, std::initializer_list<Literal> literals) : IncludeMask(n) {
  for (const auto l : literals) insert(l);
}

void IncludeMask::insert(Literal l) {
  if (l.variable >= n_) throw invalid_parameter("literal " + l.name() + " out of range");
  bits_ |= 1ULL << l.index(n_);
}

void IncludeMask::erase(Literal l) {
  if (l.variable >= n_) throw invalid_parameter("literal " + l.name() + " out of range");
  bits_ &= ~(1ULL << l.index(n_));
}

bool IncludeMask::contradictory() const noexcept {
  if (n_ == 0) return false;
  const std::uint64_t low = (1ULL << n_) - 1;
  return ((bits_ & low) & (bits_ >> n_)) != 0;
}

std::vector<Literal> IncludeMask::literals() const {
  std::vector<Literal> out;
  for (std::size_t k = 0; k < 2 * n_; ++k) {
    if ((bits_ >> k) & 1U) out.push_back(Literal::from_index(k, n_));
  }
  return out;
}

std::string to_string(const IncludeMask& mask) {
  if (mask.empty()) return "TRUE";
  // Print by variable so x_j and NOT x_j sit next to each other.
  std::string out;
  for (std::size_t v = 0; v < mask.features(); ++v) {
    for (const auto l : {Literal::pos(v), Literal::neg(v)}) {
      if (!mask.contains(l)) continue;
      if (!out.empty()) out += " AND ";
      out += l.name();
    }
  }
  return out;
}

}  // namespace pcl
