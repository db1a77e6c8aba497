#include <algorithm>
#include <set>
#include <vector>

#include "ctk/indivisibility.hpp"
#include "ctk/oracle.hpp"
#include "ctk/stepseq.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "support.hpp"

using namespace ctk;
using ctk_tests::seq;
using ctk_tests::walkthrough_alphabet;

TEST_CASE("equivalence classes within a step") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();

  // In (a b c): a and c are glued (joint members of sin both ways via the
  // strict part), while b separates from both.
  StepPartition abc = step_equiv_classes(alphabet, Step::of({0, 1, 2}));
  CHECK(abc.classes == std::vector<Step>{Step::of({1}), Step::of({0, 2})});

  // A singleton has a single class.
  CHECK(step_equiv_classes(alphabet, Step::of({3})).classes == std::vector<Step>{Step::of({3})});

  // (a c d): d reaches c (wdp d c), c reaches a (ssm), a reaches d (wdp a d):
  // one cycle, one class.
  CHECK(step_equiv_classes(alphabet, Step::of({0, 2, 3})).classes.size() == 1);

  CHECK_THROWS_AS((void)step_equiv_classes(alphabet, Step::of({1, 3})), Error);  // not a step
}

TEST_CASE("the indivisible steps of the walkthrough alphabet") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  std::vector<Step> indiv = indiv_alphabet(alphabet);
  std::vector<std::string> names;
  for (const Step& step : indiv) names.push_back(format_step(alphabet, step));
  CHECK(names == std::vector<std::string>{"(a)", "(b)", "(c)", "(d)", "(a c)", "(a c d)"});

  for (const Step& step : enumerate_steps(alphabet)) {
    CHECK(is_indivisible(alphabet, step) ==
          std::binary_search(indiv.begin(), indiv.end(), step));
  }
}

TEST_CASE("indivisibility agrees with the oracle") {
  // A step is indivisible exactly when its one-step sequence is alone in its
  // equivalence class among sequences starting with a split.
  ctk_tests::Rng rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    ComtraceAlphabet alphabet = ctk_tests::random_alphabet(rng);
    for (const Step& step : enumerate_steps(alphabet)) {
      bool oracle_says = enumerate_class(alphabet, {step}).size() == 1;
      if (step.size() <= 1) {
        CHECK(is_indivisible(alphabet, step));
      } else if (is_indivisible(alphabet, step)) {
        // Indivisible multi-member steps admit no equivalent splitting.
        CHECK(oracle_says);
      } else {
        CHECK_FALSE(oracle_says);
      }
    }
  }
}

TEST_CASE("lifted independence of indivisible steps") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  CHECK(indiv_independent(alphabet, Step::of({0}), Step::of({1})));       // a ind b
  CHECK_FALSE(indiv_independent(alphabet, Step::of({0}), Step::of({3})));  // a wdp d
  CHECK_FALSE(indiv_independent(alphabet, Step::of({0, 2}), Step::of({1})));  // c sin b
  CHECK_FALSE(indiv_independent(alphabet, Step::of({0}), Step::of({0})));
  CHECK_THROWS_WITH_AS(indiv_independent(alphabet, Step::of({0, 1}), Step::of({3})),
                       doctest::Contains("NotIndivisible"), Error);
}

TEST_CASE("dividing a step") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  auto [first, rest] = divide_step(alphabet, Step::of({0, 1, 2}));
  CHECK(first == Step::of({1}));
  CHECK(rest == Step::of({0, 2}));
  CHECK_THROWS_WITH_AS(divide_step(alphabet, Step::of({0, 2})),
                       doctest::Contains("AlreadyIndivisible"), Error);

  // Every division must itself be a valid two-step equivalent sequence.
  ctk_tests::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    ComtraceAlphabet random = ctk_tests::random_alphabet(rng);
    for (const Step& step : enumerate_steps(random)) {
      if (is_indivisible(random, step)) continue;
      auto [b, c] = divide_step(random, step);
      CHECK(oracle_equivalent(random, {step}, {b, c}));
    }
  }
}

TEST_CASE("minlex refinement of a single step") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  CHECK(minlex_step(alphabet, Step::of({0, 1})) == seq("(a)(b)"));
  CHECK(minlex_step(alphabet, Step::of({0, 2, 3})) == seq("(acd)"));
  CHECK(minlex_step(alphabet, Step::of({0, 1, 2})) == seq("(b)(ac)"));

  // minlex_step yields the least member of the oracle class that consists of
  // indivisible steps, and is itself equivalent to the input step.
  ctk_tests::Rng rng(2718);
  for (int trial = 0; trial < 150; ++trial) {
    ComtraceAlphabet random = ctk_tests::random_alphabet(rng);
    for (const Step& step : enumerate_steps(random)) {
      StepSequence refined = minlex_step(random, step);
      CHECK(oracle_equivalent(random, {step}, refined));
      for (const Step& part : refined) CHECK(is_indivisible(random, part));
      // No equivalent all-indivisible sequence is smaller.
      for (const StepSequence& member : enumerate_class(random, {step})) {
        bool all_indivisible = std::all_of(
            member.begin(), member.end(),
            [&](const Step& part) { return is_indivisible(random, part); });
        if (all_indivisible) CHECK(compare_sequences(refined, member) <= 0);
      }
    }
  }
}

TEST_CASE("splitting a sequence into indivisible steps") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  CHECK(split(alphabet, seq("(d)(ab)")) == seq("(d)(a)(b)"));
  CHECK(split(alphabet, seq("(abc)(acd)")) == seq("(b)(ac)(acd)"));
  CHECK(split(alphabet, {}) == StepSequence{});

  ctk_tests::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    ComtraceAlphabet random = ctk_tests::random_alphabet(rng);
    StepSequence sequence = ctk_tests::random_sequence(rng, random);
    StepSequence refined = split(random, sequence);
    CHECK(oracle_equivalent(random, sequence, refined));
    for (const Step& part : refined) CHECK(is_indivisible(random, part));
  }
}
