#pragma once

#include <cstddef>

#include "pcl/literal.hpp"

namespace pcl {

// Ground-truth conjunction C_T of m literals over n features. Never
// contradictory, never empty.
class TargetConjunction {
 public:
  /// Throws invalid_parameter if the mask is empty or contradictory.
  explicit TargetConjunction(IncludeMask mask);
  TargetConjunction(std::size_t n, std::initializer_list<Literal> literals);

  const IncludeMask& mask() const noexcept { return mask_; }
  std::size_t features() const noexcept { return mask_.features(); }
  std::size_t size() const noexcept { return mask_.size(); }

  bool contains(Literal l) const noexcept { return mask_.contains(l); }

  friend bool operator==(const TargetConjunction&, const TargetConjunction&) = default;

 private:
  IncludeMask mask_;
};

/// Positive iff x satisfies every literal of the target.
Label label_sample(const TargetConjunction& target, const Input& x);

/// The 2^n samples labeled by the target, in lexicographic order.
std::vector<Sample> labeled_truth_table(const TargetConjunction& target);

}  // namespace pcl
