#include "pcl/target.hpp"

#include "pcl/errors.hpp"

namespace pcl {

TargetConjunction::TargetConjunction(IncludeMask mask) : mask_(mask) {
  if (mask_.empty()) throw invalid_parameter("target conjunction must contain at least one literal");
  if (mask_.contradictory()) throw invalid_parameter("target conjunction is contradictory: " + to_string(mask_));
}

TargetConjunction::TargetConjunction(std::size_t n, std::initializer_list<Literal> literals)
    : TargetConjunction(IncludeMask(n, literals)) {}

Label label_sample(const TargetConjunction& target, const Input& x) {
  return clause_eval(target.mask(), x) ? Label::Positive : Label::Negative;
}

std::vector<Sample> labeled_truth_table(const TargetConjunction& target) {
  std::vector<Sample> samples;
  for (const auto& x : all_inputs(target.features())) samples.push_back({x, label_sample(target, x)});
  return samples;
}

}  // namespace pcl
