#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

#include "ctk/indivisibility.hpp"
#include "ctk/oracle.hpp"
#include "ctk/projection.hpp"
#include "ctk/reconstruct.hpp"
#include "ctk/stepseq.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "support.hpp"

using namespace ctk;
using ctk_tests::seq;
using ctk_tests::walkthrough_alphabet;

namespace {

ProjectionSet walkthrough_set() {
  return projection_representation(walkthrough_alphabet(), seq("(d)(ab)"));
}

StepSequence rebuilt(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                     const Strategy& strategy,
                     std::vector<ReconstructionStage>* stages = nullptr) {
  ReconstructResult result = reconstruct(alphabet, set, strategy, stages);
  REQUIRE(std::holds_alternative<StepSequence>(result));
  return std::get<StepSequence>(result);
}

NotRealizable failed(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                     const Strategy& strategy) {
  ReconstructResult result = reconstruct(alphabet, set, strategy);
  REQUIRE(std::holds_alternative<NotRealizable>(result));
  return std::get<NotRealizable>(result);
}

}  // namespace

TEST_CASE("possibility analysis of the walkthrough family") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  const ActionId a = 0, d = 3;
  ProjectionSet set = walkthrough_set();

  ConditionAnalysis analysis = conditionally_possible(alphabet, set);
  CHECK(analysis.cpa == std::vector<ActionId>{a, d});
  CHECK(analysis.cnd == std::vector<std::pair<ActionId, ActionId>>{{a, d}});

  CHECK(possible_actions(alphabet, set) == std::vector<ActionId>{a, d});

  std::vector<Step> allowed = allowed_first_steps(alphabet, set);
  CHECK(allowed == std::vector<Step>{Step::of({d}), Step::of({a, d})});
  CHECK(is_allowed_first_step(alphabet, set, Step::of({d})));
  CHECK(is_allowed_first_step(alphabet, set, Step::of({0, 3})));
  CHECK_FALSE(is_allowed_first_step(alphabet, set, Step::of({a})));
  CHECK_FALSE(is_allowed_first_step(alphabet, set, Step::of({1})));
  CHECK_FALSE(is_allowed_first_step(alphabet, set, Step()));
}

TEST_CASE("analysis of an empty family") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  ProjectionSet empty(alphabet);
  CHECK(conditionally_possible(alphabet, empty).cpa.empty());
  CHECK(possible_actions(alphabet, empty).empty());
  CHECK_THROWS_WITH_AS(allowed_first_steps(alphabet, empty),
                       doctest::Contains("EmptyPossibleSet"), Error);
}

TEST_CASE("extracting a first step") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  ProjectionSet set = walkthrough_set();

  // Taking out (d) must leave exactly the projections of (a b).
  ProjectionSet after = extract(alphabet, set, Step::of({3}));
  CHECK(projection_sets_equal(after, projection_representation(alphabet, seq("(ab)"))));

  // Taking out (a d) must leave exactly the projections of (b).
  ProjectionSet after2 = extract(alphabet, set, Step::of({0, 3}));
  CHECK(projection_sets_equal(after2, projection_representation(alphabet, seq("(b)"))));

  CHECK_THROWS_WITH_AS(extract(alphabet, set, Step::of({0})),
                       doctest::Contains("NotAllowedStep"), Error);
}

TEST_CASE("extraction commutes with projection on random sequences") {
  ctk_tests::Rng rng(8080);
  for (int trial = 0; trial < 300; ++trial) {
    ComtraceAlphabet alphabet = ctk_tests::random_alphabet(rng);
    StepSequence sequence = ctk_tests::random_sequence(rng, alphabet);
    if (sequence.empty()) continue;
    ProjectionSet set = projection_representation(alphabet, sequence);
    // The actual first step is always allowed, and extracting it leaves the
    // projections of the tail.
    REQUIRE(is_allowed_first_step(alphabet, set, sequence.front()));
    ProjectionSet rest = extract(alphabet, set, sequence.front());
    StepSequence tail(sequence.begin() + 1, sequence.end());
    CHECK(projection_sets_equal(rest, projection_representation(alphabet, tail)));
  }
}

TEST_CASE("rebuilding the walkthrough family under both strategies") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();

  std::vector<ReconstructionStage> stages;
  CHECK(rebuilt(alphabet, walkthrough_set(), Strategy::foata(), &stages) == seq("(ad)(b)"));
  REQUIRE(stages.size() == 2);
  CHECK(stages[0].stage == 1);
  CHECK(stages[0].possible == std::vector<ActionId>{0, 3});
  CHECK(stages[0].chosen == Step::of({0, 3}));
  CHECK(stages[1].possible == std::vector<ActionId>{1});
  CHECK(stages[1].chosen == Step::of({1}));

  CHECK(rebuilt(alphabet, walkthrough_set(), Strategy::minlex()) == seq("(d)(a)(b)"));

  // A custom chooser may pick any allowed step.  Taking all of M mirrors the
  // greedy-maximal strategy; taking the least class that can be serialised
  // before the rest mirrors the least-sequence strategy.
  Strategy take_all = Strategy::custom(
      [](const ChoiceContext& context) { return context.possible; });
  CHECK(rebuilt(alphabet, walkthrough_set(), take_all) == seq("(ad)(b)"));
  Strategy least_sink = Strategy::custom([](const ChoiceContext& context) {
    for (const Step& cls : context.classes) {
      bool sink = true;
      for (ActionId x : cls) {
        for (ActionId y : context.possible) {
          if (!cls.contains(y) && !context.alphabet.ser(x, y)) sink = false;
        }
      }
      if (sink) return cls;
    }
    return context.classes.front();
  });
  CHECK(rebuilt(alphabet, walkthrough_set(), least_sink) == seq("(d)(a)(b)"));

  // Picking a non-allowed step is an error, not a NotRealizable result.  Here
  // (a) alone cannot come first: its entry against d demands d first-or-with.
  Strategy take_bad = Strategy::custom([](const ChoiceContext& context) {
    return Step::of({context.possible.members().front()});
  });
  CHECK_THROWS_WITH_AS(reconstruct(alphabet, walkthrough_set(), take_bad),
                       doctest::Contains("NotAllowedStep"), Error);
}

TEST_CASE("rebuilding an altered family that is still realizable") {
  // Swapping the {b, d} entry from "d b" to "b d" yields the projections of
  // (b)(a d): the family stays realizable, with a different class.
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  ProjectionSet altered = parse_projection_set(alphabet,
                                               "proj a a : a\n"
                                               "proj b b : b\n"
                                               "proj d d : d\n"
                                               "proj a c : a\n"
                                               "proj b c : b\n"
                                               "proj a d : d a\n"
                                               "proj b d : b d\n"
                                               "proj c d : d\n");
  CHECK(projection_sets_equal(altered, projection_representation(alphabet, seq("(b)(ad)"))));

  std::vector<ReconstructionStage> stages;
  CHECK(rebuilt(alphabet, altered, Strategy::foata(), &stages) == seq("(b)(ad)"));
  REQUIRE(stages.size() == 2);
  CHECK(stages[0].possible == std::vector<ActionId>{1});
  CHECK(stages[1].possible == std::vector<ActionId>{0, 3});
  CHECK(rebuilt(alphabet, altered, Strategy::minlex()) == seq("(b)(d)(a)"));

  std::vector<StepSequence> cls = enumerate_class(alphabet, seq("(b)(ad)"));
  CHECK(cls == std::vector<StepSequence>{seq("(b)(d)(a)"), seq("(b)(ad)")});
}

TEST_CASE("a family with circular ordering constraints is not realizable") {
  // Entrywise the family is consistent (every count matches), but the pair
  // entries demand a before d, d before c and c before a: no first action.
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  ProjectionSet bad = parse_projection_set(alphabet,
                                           "proj a a : a\n"
                                           "proj c c : c\n"
                                           "proj d d : d\n"
                                           "proj a d : a d\n"
                                           "proj c d : d c\n"
                                           "proj a c : c a\n"
                                           "proj b c : c\n"
                                           "proj b d : d\n");
  NotRealizable failure = failed(alphabet, bad, Strategy::foata());
  CHECK(failure.stage == 1);
  CHECK(failure.reason.find("no action can begin") != std::string::npos);
  CHECK(failure.remaining.total_symbols() == bad.total_symbols());
  CHECK(failed(alphabet, bad, Strategy::minlex()).stage == 1);
}

TEST_CASE("realizability can fail midway") {
  // b is forced first everywhere; behind it hides the same circular core, so
  // the dead end only surfaces at the second stage.
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  ProjectionSet bad = parse_projection_set(alphabet,
                                           "proj a a : a\n"
                                           "proj b b : b\n"
                                           "proj c c : c\n"
                                           "proj d d : d\n"
                                           "proj a d : a d\n"
                                           "proj c d : d c\n"
                                           "proj a c : c a\n"
                                           "proj b c : b c\n"
                                           "proj b d : b d\n");
  std::vector<ReconstructionStage> stages;
  ReconstructResult result = reconstruct(alphabet, bad, Strategy::minlex(), &stages);
  REQUIRE(std::holds_alternative<NotRealizable>(result));
  NotRealizable failure = std::get<NotRealizable>(result);
  CHECK(failure.stage == 2);
  REQUIRE(stages.size() == 2);
  CHECK(stages[0].chosen == Step::of({1}));
  CHECK(stages[1].chosen.empty());
  CHECK(failure.remaining.total_symbols() == 11);
}

TEST_CASE("structurally inconsistent families fail the sanity pass") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();

  // The unary entry for a says one occurrence, but the {a, c} entry mentions
  // a twice.
  ProjectionSet miscount = parse_projection_set(alphabet,
                                                "proj a a : a\n"
                                                "proj a c : a a\n");
  NotRealizable failure = failed(alphabet, miscount, Strategy::foata());
  CHECK(failure.stage == 0);
  CHECK(failure.reason.find("MalformedProjectionSet") != std::string::npos);

  // A joint mark counts towards both members; here it cannot be balanced.
  ProjectionSet unbalanced = parse_projection_set(alphabet,
                                                  "proj a a : a\n"
                                                  "proj c c : c\n"
                                                  "proj a c : !\n"
                                                  "proj a d : a a\n"
                                                  "proj d d : d\n");
  CHECK(failed(alphabet, unbalanced, Strategy::foata()).stage == 0);
}

TEST_CASE("round trip: projection then reconstruction is the identity on classes") {
  ctk_tests::Rng rng(27182818);
  for (int trial = 0; trial < 300; ++trial) {
    ComtraceAlphabet alphabet = ctk_tests::random_alphabet(rng);
    StepSequence sequence = ctk_tests::random_sequence(rng, alphabet);
    ProjectionSet set = projection_representation(alphabet, sequence);

    StepSequence via_foata = rebuilt(alphabet, set, Strategy::foata());
    StepSequence via_minlex = rebuilt(alphabet, set, Strategy::minlex());
    CHECK(oracle_equivalent(alphabet, sequence, via_foata));
    CHECK(oracle_equivalent(alphabet, sequence, via_minlex));
  }
}

TEST_CASE("canonical forms are the extremes of the equivalence class") {
  const ComtraceAlphabet& alphabet = walkthrough_alphabet();
  CHECK(foata(alphabet, seq("(d)(a)(b)")) == seq("(ad)(b)"));
  CHECK(minlex(alphabet, seq("(ad)(b)")) == seq("(d)(a)(b)"));
  CHECK(foata(alphabet, {}) == StepSequence{});
  CHECK(minlex(alphabet, {}) == StepSequence{});

  ctk_tests::Rng rng(16180);
  for (int trial = 0; trial < 200; ++trial) {
    ComtraceAlphabet random = ctk_tests::random_alphabet(rng);
    StepSequence sequence = ctk_tests::random_sequence(rng, random);
    std::vector<StepSequence> cls = enumerate_class(random, sequence);
    CHECK(minlex(random, sequence) == cls.front());
    CHECK(foata(random, sequence) == cls.back());

    // Canonical forms are class invariants: every member maps to the same one.
    const StepSequence& other = cls[trial % cls.size()];
    CHECK(foata(random, other) == cls.back());
    CHECK(minlex(random, other) == cls.front());

    // Minlex consists of indivisible steps.
    for (const Step& step : cls.front()) CHECK(is_indivisible(random, step));
  }
}

TEST_CASE("foata steps cannot donate a prefix to their successor") {
  // Characterisation of the greedy-maximal form: no nonempty suffix of the
  // next step... rather, no part of a later step can be merged into the
  // previous one.  Concretely: for consecutive steps (A)(B) of a foata form,
  // there is no nonempty C <= B with (A)(B) equivalent to (A u C)(B - C).
  ctk_tests::Rng rng(33550336);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    ComtraceAlphabet alphabet = ctk_tests::random_alphabet(rng);
    StepSequence sequence = ctk_tests::random_sequence(rng, alphabet);
    StepSequence canonical = foata(alphabet, sequence);
    for (std::size_t i = 0; i + 1 < canonical.size(); ++i) {
      const Step& next = canonical[i + 1];
      auto members = next.members();
      int n = next.size();
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<ActionId> donated, kept;
        for (int j = 0; j < n; ++j) {
          if (mask & (1 << j)) donated.push_back(members[j]);
          else kept.push_back(members[j]);
        }
        std::vector<ActionId> merged(canonical[i].begin(), canonical[i].end());
        merged.insert(merged.end(), donated.begin(), donated.end());
        std::sort(merged.begin(), merged.end());
        if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) continue;
        Step grown{merged};
        if (!is_step(alphabet, grown)) continue;
        StepSequence candidate(canonical.begin(), canonical.begin() + i);
        candidate.push_back(grown);
        if (!kept.empty()) candidate.push_back(Step{kept});
        candidate.insert(candidate.end(), canonical.begin() + i + 2, canonical.end());
        CHECK_FALSE(oracle_equivalent(alphabet, canonical, candidate));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);  // the trials actually exercised the property
}
