#include <set>

#include "doctest.h"
#include "pcl/automaton.hpp"
#include "pcl/errors.hpp"

using pcl::Action;
using pcl::Automaton;
using pcl::InitPolicy;

TEST_SUITE("automaton") {
  TEST_CASE("initialization policies") {
    pcl::Rng rng(1);
    CHECK(pcl::new_automaton(3, InitPolicy::BoundaryExclude, rng).state() == 3);
    CHECK(pcl::new_automaton(3, InitPolicy::BoundaryInclude, rng).state() == 4);

    std::set<int> fifty, uniform, tiny;
    for (int i = 0; i < 2000; ++i) {
      fifty.insert(pcl::new_automaton(3, InitPolicy::FiftyFifty, rng).state());
      uniform.insert(pcl::new_automaton(3, InitPolicy::UniformRandom, rng).state());
      tiny.insert(pcl::new_automaton(1, InitPolicy::UniformRandom, rng).state());
    }
    CHECK(fifty == std::set<int>{3, 4});
    CHECK(uniform == std::set<int>{1, 2, 3, 4, 5, 6});
    CHECK(tiny == std::set<int>{1, 2});
  }

  TEST_CASE("zero half size is rejected") {
    pcl::Rng rng(1);
    CHECK_THROWS_AS(pcl::new_automaton(0, InitPolicy::FiftyFifty, rng), pcl::invalid_parameter);
    CHECK_THROWS_AS(Automaton(0, 1), pcl::invalid_parameter);
    CHECK_THROWS_AS(Automaton(3, 7), pcl::invalid_parameter);
    CHECK_THROWS_AS(Automaton(3, 0), pcl::invalid_parameter);
  }

  TEST_CASE("action regions") {
    CHECK(Automaton(3, 3).action() == Action::Exclude);
    CHECK(Automaton(3, 4).action() == Action::Include);
    CHECK(Automaton(1, 2).action() == Action::Include);
    CHECK(Automaton(1, 1).action() == Action::Exclude);
  }

  TEST_CASE("reward deepens the current action") {
    Automaton a(3, 3);
    a.reward();
    CHECK(a.state() == 2);
    Automaton bottom(3, 1);
    bottom.reward();
    CHECK(bottom.state() == 1);
    Automaton top(3, 6);
    top.reward();
    CHECK(top.state() == 6);
  }

  TEST_CASE("penalty moves toward the boundary and crosses it") {
    Automaton a(3, 3);
    a.penalize();
    CHECK(a.state() == 4);
    CHECK(a.action() == Action::Include);
    Automaton b(3, 4);
    b.penalize();
    CHECK(b.state() == 3);
    CHECK(b.action() == Action::Exclude);
    Automaton c(3, 1);
    c.penalize();
    CHECK(c.state() == 2);
  }

  TEST_CASE("transition properties hold for every state") {
    for (int half = 1; half <= 10; ++half) {
      CAPTURE(half);
      for (int s = 1; s <= 2 * half; ++s) {
        CAPTURE(s);
        const Automaton start(half, s);
        Automaton rewarded = start;
        rewarded.reward();
        Automaton penalized = start;
        penalized.penalize();

        CHECK(rewarded.state() >= 1);
        CHECK(rewarded.state() <= 2 * half);
        CHECK(penalized.state() >= 1);
        CHECK(penalized.state() <= 2 * half);

        CHECK((rewarded == start) == (s == 1 || s == 2 * half));
        CHECK(rewarded.action() == start.action());

        const bool boundary = s == half || s == half + 1;
        CHECK((penalized.action() != start.action()) == boundary);
      }

      // Repeated penalties oscillate around the boundary; the top is reached
      // by penalties while excluded and rewards once included.
      Automaton walker(half, 1);
      for (int i = 0; i < 2 * half - 1; ++i) walker.penalize();
      CHECK((walker.state() == half || walker.state() == half + 1));
      Automaton climber(half, 1);
      for (int i = 0; i < 2 * half - 1; ++i) {
        if (climber.includes())
          climber.reward();
        else
          climber.penalize();
      }
      CHECK(climber.state() == 2 * half);
    }
  }

  TEST_CASE("policy names round-trip") {
    for (auto p : {InitPolicy::BoundaryExclude, InitPolicy::BoundaryInclude, InitPolicy::UniformRandom,
                   InitPolicy::FiftyFifty}) {
      CHECK(pcl::parse_init_policy(pcl::to_string(p)) == p);
    }
    CHECK_THROWS_AS(pcl::parse_init_policy("random"), pcl::invalid_parameter);
  }
}
