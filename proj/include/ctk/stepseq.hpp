#ifndef CTK_STEPSEQ_HPP
#define CTK_STEPSEQ_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctk/alphabet.hpp"

namespace ctk {

/// A step: a finite set of actions, kept sorted by action order.  Whether the
/// set is a *valid* step (a nonempty sim-clique) depends on the alphabet and
/// is checked by is_step / require_step.
///
/// operator<=> implements the canonical step order: smaller steps first, equal
/// sizes ordered by their least differing member.
class Step {
public:
  Step() = default;
  explicit Step(std::vector<ActionId> members);
  static Step of(std::initializer_list<ActionId> members);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(ActionId a) const;
  std::span<const ActionId> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend std::strong_ordering operator<=>(const Step& lhs, const Step& rhs);
  friend bool operator==(const Step&, const Step&) = default;

private:
  std::vector<ActionId> members_;
};

using StepSequence = std::vector<Step>;
using Word = std::vector<ActionId>;

inline constexpr std::size_t kDefaultStepCap = std::size_t{1} << 20;

/// True iff A is nonempty and pairwise simultaneous under the alphabet.
bool is_step(const ComtraceAlphabet& alphabet, const Step& step);

/// Throws not_a_step (with the offending pair) unless is_step holds.
void require_step(const ComtraceAlphabet& alphabet, const Step& step);

/// Validates every step of the sequence.
void require_sequence(const ComtraceAlphabet& alphabet, const StepSequence& sequence);

/// All valid steps (nonempty sim-cliques), sorted by step order.  Throws
/// cap_exceeded if there are more than `cap`.
std::vector<Step> enumerate_steps(const ComtraceAlphabet& alphabet,
                                  std::size_t cap = kDefaultStepCap);

/// Action order = listing order of the alphabet.
std::strong_ordering compare_actions(const ComtraceAlphabet& alphabet, ActionId a, ActionId b);

/// Step order: by size, then by least differing member.
std::strong_ordering compare_steps(const Step& lhs, const Step& rhs);

/// Sequence order: positional extension of the step order; a proper prefix
/// precedes every extension of itself.
std::strong_ordering compare_sequences(const StepSequence& lhs, const StepSequence& rhs);

/// Step sequence literals: zero or more '(' name... ')' groups.  Members of a
/// step are whitespace-separated; when every action name is a single
/// character the whitespace may be omitted, so "(ab)" parses.  A repeated
/// action inside a group is a parse_error; an unknown name is unknown_action;
/// a non-simultaneous pair is not_a_step.  The empty text is the empty
/// sequence (lambda).
StepSequence parse_stepseq(const ComtraceAlphabet& alphabet, std::string_view text);

std::string format_step(const ComtraceAlphabet& alphabet, const Step& step);

/// Formats as "(a d)(b)"; the empty sequence formats as "".
std::string format_stepseq(const ComtraceAlphabet& alphabet, const StepSequence& sequence);

StepSequence concat(StepSequence lhs, const StepSequence& rhs);

/// Set of actions occurring in the sequence, sorted.
std::vector<ActionId> action_alphabet(const StepSequence& sequence);

/// Set of distinct steps occurring in the sequence, sorted by step order.
std::vector<Step> step_alphabet(const StepSequence& sequence);

/// Number of steps containing `a` (each step is a set, so this is the number
/// of occurrences of the action).
std::size_t occurrences(const StepSequence& sequence, ActionId a);

std::size_t total_occurrences(const StepSequence& sequence);

/// Flattens each step into its members in action order: the canonical
/// linearisation of a step sequence into a word.
Word lex_linearization(const StepSequence& sequence);

/// The word viewed as a sequence of singleton steps.  Inverse of
/// lex_linearization exactly on sequences whose steps are all singletons.
StepSequence singleton_steps(const Word& word);

}  // namespace ctk

#endif
