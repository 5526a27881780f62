#pragma once

#include <stdexcept>
#include <string>

namespace pcl {

/// A parameter outside its documented domain (half size 0, literal index out of range, ...).
class invalid_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition, e.g. a negative sample passed to positive feedback.
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested a frequency row or probability for a literal class that has no members (L3 when m = n).
class empty_class_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration beyond the supported feature bound.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcl
