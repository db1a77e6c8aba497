#include <algorithm>
#include <vector>

#include "ctk/mztrace.hpp"
#include "ctk/oracle.hpp"
#include "ctk/reconstruct.hpp"
#include "ctk/stepseq.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "support.hpp"

using namespace ctk;

namespace {

const ConcurrentAlphabet& ring_alphabet() {
  static const ConcurrentAlphabet alphabet =
      ConcurrentAlphabet::validate({{"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}}});
  return alphabet;
}

Word w(const std::string& text) { return parse_word(ring_alphabet(), text); }

/// The class of a word trace, via the embedding: all singleton-step members
/// of the comtrace class, flattened back to words.
std::vector<Word> word_class(const ConcurrentAlphabet& alphabet, const Word& word) {
  ComtraceAlphabet embedded = comtrace_embedding(alphabet);
  std::vector<Word> result;
  for (const StepSequence& member : enumerate_class(embedded, singleton_steps(word))) {
    if (std::all_of(member.begin(), member.end(),
                    [](const Step& step) { return step.size() == 1; })) {
      result.push_back(lex_linearization(member));
    }
  }
  return result;
}

}  // namespace

TEST_CASE("concurrent alphabet validation and file format") {
  ConcurrentAlphabet alphabet = parse_concurrent_alphabet(
      "# independence only\nactions a b c d\nind a c\nind b d\n");
  CHECK(alphabet.size() == 4);
  CHECK(alphabet.independent(0, 2));
  CHECK(alphabet.independent(2, 0));
  CHECK(alphabet.dependent(0, 1));
  CHECK(alphabet.dependent(1, 1));

  ConcurrentAlphabet reparsed = parse_concurrent_alphabet(format_concurrent_alphabet(alphabet));
  CHECK(reparsed.ind_relation() == alphabet.ind_relation());

  CHECK_THROWS_WITH_AS(parse_concurrent_alphabet("actions a b\nsim a b\n"),
                       doctest::Contains("not a concurrent alphabet"), Error);
  CHECK_THROWS_WITH_AS(ConcurrentAlphabet::validate({{"a"}, {{"a", "a"}}}),
                       doctest::Contains("ReflexivePair"), Error);
  CHECK_THROWS_WITH_AS(ConcurrentAlphabet::validate({{"a", "a"}, {}}),
                       doctest::Contains("DuplicateAction"), Error);
}

TEST_CASE("word parsing") {
  const ConcurrentAlphabet& alphabet = ring_alphabet();
  CHECK(parse_word(alphabet, "abba") == Word{0, 1, 1, 0});
  CHECK(parse_word(alphabet, "a b b a") == Word{0, 1, 1, 0});
  CHECK(parse_word(alphabet, "").empty());
  CHECK(format_word(alphabet, Word{0, 1, 1, 0, 0, 2, 3}) == "abbaacd");
  CHECK_THROWS_AS(parse_word(alphabet, "abx"), Error);

  ConcurrentAlphabet wide = ConcurrentAlphabet::validate({{"up", "down"}, {}});
  CHECK(parse_word(wide, "up down up") == Word{0, 1, 0});
  CHECK(format_word(wide, Word{1, 0}) == "down up");
  CHECK_THROWS_AS(parse_word(wide, "updown"), Error);
}

TEST_CASE("word-trace equivalence") {
  const ConcurrentAlphabet& alphabet = ring_alphabet();
  CHECK(trace_equivalent(alphabet, w("abbaacd"), w("abbcaad")));
  CHECK(trace_equivalent(alphabet, w("ac"), w("ca")));
  CHECK_FALSE(trace_equivalent(alphabet, w("ab"), w("ba")));
  CHECK_FALSE(trace_equivalent(alphabet, w("a"), w("aa")));
  CHECK(trace_equivalent(alphabet, {}, {}));
}

TEST_CASE("word-trace normal forms") {
  const ConcurrentAlphabet& alphabet = ring_alphabet();

  std::vector<Word> blocks = trace_foata_blocks(alphabet, w("abbaacd"));
  CHECK(blocks == std::vector<Word>{w("a"), w("b"), w("b"), w("ac"), w("a"), w("d")});
  CHECK(trace_foata(alphabet, w("abbaacd")) == w("abbacad"));
  CHECK(trace_foata(alphabet, w("abbcaad")) == w("abbacad"));
  CHECK(trace_minlex(alphabet, w("abbcaad")) == w("abbaacd"));
  CHECK(trace_minlex(alphabet, w("abbaacd")) == w("abbaacd"));
  CHECK(trace_foata(alphabet, {}).empty());
  CHECK(trace_minlex(alphabet, {}).empty());
}

TEST_CASE("word-trace laws on random words") {
  ctk_tests::Rng rng(1111);
  for (int trial = 0; trial < 300; ++trial) {
    ConcurrentAlphabet alphabet = ctk_tests::random_concurrent_alphabet(rng);
    Word word = ctk_tests::random_word(rng, alphabet);
    std::vector<Word> cls = word_class(alphabet, word);

    // Normal forms are invariants of the class and members of it.
    Word least = trace_minlex(alphabet, word);
    Word canon = trace_foata(alphabet, word);
    CHECK(std::find(cls.begin(), cls.end(), least) != cls.end());
    CHECK(std::find(cls.begin(), cls.end(), canon) != cls.end());
    CHECK(*std::min_element(cls.begin(), cls.end()) == least);
    for (const Word& member : cls) {
      CHECK(trace_equivalent(alphabet, word, member));
      CHECK(trace_foata(alphabet, member) == canon);
      CHECK(trace_minlex(alphabet, member) == least);
    }

    // Projection equality is exactly class membership.
    Word other = ctk_tests::random_word(rng, alphabet);
    bool in_class = std::find(cls.begin(), cls.end(), other) != cls.end();
    CHECK(trace_equivalent(alphabet, word, other) == in_class);
  }
}

TEST_CASE("step traces over a concurrent alphabet") {
  const ConcurrentAlphabet& alphabet = ring_alphabet();
  ComtraceAlphabet embedded = comtrace_embedding(alphabet);

  // The embedding makes independence double as simultaneity and
  // serialisability in both directions.
  CHECK(embedded.sim(0, 2));
  CHECK(embedded.ser(0, 2));
  CHECK(embedded.ser(2, 0));
  CHECK_FALSE(embedded.sim(0, 1));
  CHECK(embedded.relations().sin.pairs().empty());

  StepSequence u = parse_stepseq(embedded, "(ac)(b)");
  StepSequence v = parse_stepseq(embedded, "(c)(a)(b)");
  CHECK(steptrace_equivalent(alphabet, u, v));
  CHECK_FALSE(steptrace_equivalent(alphabet, u, parse_stepseq(embedded, "(b)(ac)")));
  CHECK(steptrace_foata(alphabet, v) == u);
  CHECK(steptrace_minlex(alphabet, u) == parse_stepseq(embedded, "(a)(c)(b)"));
  CHECK(projection_sets_equal(steptrace_projections(alphabet, u),
                              projection_representation(embedded, u)));
}

TEST_CASE("word operations agree with the step machinery on singleton embeddings") {
  ctk_tests::Rng rng(2222);
  for (int trial = 0; trial < 300; ++trial) {
    ConcurrentAlphabet alphabet = ctk_tests::random_concurrent_alphabet(rng);
    ComtraceAlphabet embedded = comtrace_embedding(alphabet);
    Word u = ctk_tests::random_word(rng, alphabet);
    Word v = ctk_tests::random_word(rng, alphabet);

    CHECK(trace_equivalent(alphabet, u, v) ==
          equivalent(embedded, singleton_steps(u), singleton_steps(v)));

    // The word normal forms are the flattened step normal forms.
    StepSequence canon = foata(embedded, singleton_steps(u));
    CHECK(trace_foata(alphabet, u) == lex_linearization(canon));
    std::vector<Word> blocks = trace_foata_blocks(alphabet, u);
    REQUIRE(blocks.size() == canon.size());
    for (std::size_t i = 0; i < canon.size(); ++i) {
      CHECK(Step(blocks[i]) == canon[i]);
    }
    StepSequence least = minlex(embedded, singleton_steps(u));
    CHECK(trace_minlex(alphabet, u) == lex_linearization(least));
  }
}

TEST_CASE("radical alphabets collapse to concurrent ones") {
  ComtraceAlphabet radical = ComtraceAlphabet::validate(
      {{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}}});
  CHECK(is_radical(radical));
  CHECK_FALSE(is_radical(ctk_tests::walkthrough_alphabet()));

  ConcurrentAlphabet collapsed = radical_bridge(radical);
  CHECK(collapsed.independent(0, 1));
  CHECK(collapsed.independent(1, 2));
  CHECK_FALSE(collapsed.independent(0, 2));
  CHECK_THROWS_WITH_AS(radical_bridge(ctk_tests::walkthrough_alphabet()),
                       doctest::Contains("NotRadical"), Error);

  // Over a radical alphabet the step operations coincide with the word-trace
  // operations of the collapsed alphabet.
  ctk_tests::Rng rng(3333);
  for (int trial = 0; trial < 300; ++trial) {
    ComtraceAlphabet alphabet = ctk_tests::random_radical_alphabet(rng);
    if (!is_radical(alphabet)) continue;
    ConcurrentAlphabet bridge = radical_bridge(alphabet);
    StepSequence u = ctk_tests::random_sequence(rng, alphabet);
    StepSequence v = ctk_tests::random_sequence(rng, alphabet);
    CHECK(equivalent(alphabet, u, v) == steptrace_equivalent(bridge, u, v));
    CHECK(foata(alphabet, u) == steptrace_foata(bridge, u));
    CHECK(minlex(alphabet, u) == steptrace_minlex(bridge, u));
  }
}
