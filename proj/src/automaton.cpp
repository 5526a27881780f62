#include "pcl/automaton.hpp"

#include <string>

#include "pcl/errors.hpp"

namespace pcl {

std::string_view to_string(Action a) {
  return a == Action::Include ? "Include" : "Exclude";
}

std::string_view to_string(InitPolicy p) {
  switch (p) {
    case InitPolicy::BoundaryExclude: return "boundary-exclude";
    case InitPolicy::BoundaryInclude: return "boundary-include";
    case InitPolicy::UniformRandom: return "uniform";
    case InitPolicy::FiftyFifty: return "fifty-fifty";
  }
  return "?";
}

InitPolicy parse_init_policy(std::string_view name) {
  for (auto p : {InitPolicy::BoundaryExclude, InitPolicy::BoundaryInclude, InitPolicy::UniformRandom,
                 InitPolicy::FiftyFifty}) {
    if (to_string(p) == name) return p;
  }
  throw invalid_parameter("unknown init policy '" + std::string(name) + "'");
}

Automaton::Automaton(int half_size, int state) : half_size_(half_size), state_(state) {
  if (half_size < 1) throw invalid_parameter("automaton half size must be >= 1, got " + std::to_string(half_size));
  if (state < 1 || state > 2 * half_size)
    throw invalid_parameter("automaton state " + std::to_string(state) + " outside [1, " +
                            std::to_string(2 * half_size) + "]");
}

Automaton new_automaton(int half_size, InitPolicy policy, Rng& rng) {
  if (half_size < 1) throw invalid_parameter("automaton half size must be >= 1, got " + std::to_string(half_size));
  const auto n = static_cast<std::uint64_t>(half_size);
  switch (policy) {
    case InitPolicy::BoundaryExclude: return {half_size, half_size};
    case InitPolicy::BoundaryInclude: return {half_size, half_size + 1};
    case InitPolicy::UniformRandom: return {half_size, static_cast<int>(rng.uniform_int(1, 2 * n))};
    case InitPolicy::FiftyFifty: return {half_size, static_cast<int>(rng.uniform_int(n, n + 1))};
  }
  throw invalid_parameter("unknown init policy");
}

}  // namespace pcl
