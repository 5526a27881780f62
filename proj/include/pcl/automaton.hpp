#pragma once

#include <cstdint>
#include <string_view>

#include "pcl/rng.hpp"

namespace pcl {

enum class Action : std::uint8_t { Exclude, Include };

enum class InitPolicy : std::uint8_t {
  BoundaryExclude,  // state N
  BoundaryInclude,  // state N + 1
  UniformRandom,    // uniform over [1, 2N]
  FiftyFifty,       // uniform over {N, N + 1}
};

inline constexpr int kDefaultHalfSize = 8;
inline constexpr InitPolicy kDefaultInitPolicy = InitPolicy::FiftyFifty;

std::string_view to_string(Action a);
std::string_view to_string(InitPolicy p);
/// Parses the names printed by to_string(InitPolicy); throws invalid_parameter otherwise.
InitPolicy parse_init_policy(std::string_view name);

// Two-action Tsetlin automaton with 2N states.
//
// States 1..N select Exclude and N+1..2N select Include. A reward moves the
// state one step deeper into its current action (saturating at 1 and 2N); a
// penalty moves it one step toward the other action and crosses the boundary
// from N or N+1.
class Automaton {
 public:
  /// Throws invalid_parameter unless half_size >= 1 and state is in [1, 2 * half_size].
  Automaton(int half_size, int state);

  int state() const noexcept { return state_; }
  int half_size() const noexcept { return half_size_; }
  int num_states() const noexcept { return 2 * half_size_; }

  Action action() const noexcept {
    return state_ <= half_size_ ? Action::Exclude : Action::Include;
  }
  bool includes() const noexcept { return state_ > half_size_; }

  void reward() noexcept {
    if (includes()) {
      if (state_ < num_states()) ++state_;
    } else if (state_ > 1) {
      --state_;
    }
  }

  void penalize() noexcept {
    if (includes())
      --state_;
    else
      ++state_;
  }

  /// Moves one step toward Include (state + 1), saturating at 2N. Used by TM feedback matrices.
  void increment() noexcept {
    if (state_ < num_states()) ++state_;
  }
  /// Moves one step toward Exclude (state - 1), saturating at 1.
  void decrement() noexcept {
    if (state_ > 1) --state_;
  }

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  int half_size_;
  int state_;
};

/// Creates an automaton per `policy`. Draws from `rng` only for the random policies.
Automaton new_automaton(int half_size, InitPolicy policy, Rng& rng);

}  // namespace pcl
