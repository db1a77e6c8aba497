#ifndef CTK_PROJECTION_HPP
#define CTK_PROJECTION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctk/stepseq.hpp"

namespace ctk {

/// Entry symbol standing for "both actions happened in one inseparable step"
/// (only meaningful for strictly simultaneous pairs).  Serialised as '!'.
inline constexpr ActionId kBottom = -1;

/// The family of pairwise projections of a step sequence: one entry per
/// unordered pair {a, b} of non-independent actions (a = b allowed), each a
/// sequence over the actions plus kBottom.  Entries for untracked
/// (independent) pairs do not exist; entries never written are the empty
/// sequence.
///
/// Two step sequences are congruent exactly when their projection families
/// are equal entrywise, which is what makes this the workhorse of the fast
/// equivalence test and of reconstruction.
class ProjectionSet {
public:
  ProjectionSet() = default;
  explicit ProjectionSet(const ComtraceAlphabet& alphabet);

  int width() const { return width_; }

  /// Whether {a, b} has an entry (i.e. the pair is not independent).
  bool tracked(ActionId a, ActionId b) const;

  /// Entry for {a, b}; throws independent_pair for untracked pairs.
  std::span<const ActionId> entry(ActionId a, ActionId b) const;

  /// Appends a symbol to the entry for {a, b}.
  void append(ActionId a, ActionId b, ActionId symbol);

  bool empty() const { return total_symbols_ == 0; }
  std::size_t total_symbols() const { return total_symbols_; }

  /// All tracked pairs (a <= b), sorted.
  std::vector<std::pair<ActionId, ActionId>> tracked_pairs() const;

private:
  friend bool projection_sets_equal(const ProjectionSet&, const ProjectionSet&);

  std::size_t slot(ActionId a, ActionId b) const;

  int width_ = 0;
  std::vector<char> tracked_;
  std::vector<std::vector<ActionId>> entries_;
  std::size_t total_symbols_ = 0;
};

/// The fragment that step A contributes to the entry of the pair {a, b}:
///   - neither in A:  empty
///   - only a in A:   [a]        (symmetrically [b])
///   - both in A:     [kBottom]  when the pair is strictly simultaneous,
///                    [b, a]     when a can only wait for b (a weakly depends
///                               on b), and [a, b] in the mirrored case.
/// Throws independent_pair when {a, b} is independent.
std::vector<ActionId> project_step(const ComtraceAlphabet& alphabet, const Step& step, ActionId a,
                                   ActionId b);

/// Streaming construction of the projection family, O(k) work per action
/// occurrence: each action consults only its non-independent partners, and a
/// per-entry "last step" stamp makes two-symbol fragments atomic without
/// re-scanning the step.
class ProjectionBuilder {
public:
  explicit ProjectionBuilder(const ComtraceAlphabet& alphabet);

  void push_step(const Step& step);

  /// The representation of the sequence pushed so far.
  const ProjectionSet& current() const { return set_; }
  ProjectionSet take() { return std::move(set_); }

private:
  const ComtraceAlphabet* alphabet_;
  ProjectionSet set_;
  std::size_t step_index_ = 0;
  std::vector<std::size_t> in_step_;       // per action: index of the last step containing it
  std::vector<std::size_t> entry_stamp_;   // per pair slot: last step that wrote a joint fragment
};

/// The projection representation of a whole sequence.
ProjectionSet projection_representation(const ComtraceAlphabet& alphabet,
                                        const StepSequence& sequence);

/// Congruence test in O(n * k): equality of projection representations.
bool equivalent(const ComtraceAlphabet& alphabet, const StepSequence& lhs,
                const StepSequence& rhs);

/// Entrywise equality.  Throws alphabet_mismatch when the two families are
/// shaped by different alphabets.
bool projection_sets_equal(const ProjectionSet& lhs, const ProjectionSet& rhs);

/// Text format, one entry per line, empty entries omitted:
///   proj a d : d a
///   proj a a : a
///   proj a c : !
/// '#' starts a comment.  Parsing checks that the pair is tracked, that the
/// symbols belong to the pair (or are '!' on a strictly simultaneous pair).
ProjectionSet parse_projection_set(const ComtraceAlphabet& alphabet, std::string_view text);
std::string format_projection_set(const ComtraceAlphabet& alphabet, const ProjectionSet& set);

}  // namespace ctk

#endif
