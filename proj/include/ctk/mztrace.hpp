#ifndef CTK_MZTRACE_HPP
#define CTK_MZTRACE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctk/projection.hpp"
#include "ctk/stepseq.hpp"

namespace ctk {

struct ConcurrentAlphabetDescription {
  std::vector<std::string> actions;
  std::vector<std::pair<std::string, std::string>> ind;  // unordered pairs
};

/// An alphabet with a single symmetric irreflexive independence relation:
/// the word-trace baseline that the step machinery generalises.
class ConcurrentAlphabet {
public:
  static ConcurrentAlphabet validate(const ConcurrentAlphabetDescription& description);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& actions() const { return names_; }
  const std::string& name(ActionId a) const;
  ActionId id(std::string_view name) const;
  std::optional<ActionId> find(std::string_view name) const;

  bool independent(ActionId a, ActionId b) const;
  bool dependent(ActionId a, ActionId b) const { return !independent(a, b); }
  const BitRelation& ind_relation() const { return ind_; }

  bool all_single_char_names() const { return all_single_char_; }
  ActionId check(ActionId a) const;

private:
  ConcurrentAlphabet() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ActionId> index_;
  BitRelation ind_;
  bool all_single_char_ = true;
};

/// Text format: like the step alphabet format but with 'ind a b' lines
/// instead of sim/ser.
ConcurrentAlphabet parse_concurrent_alphabet(std::string_view text);
std::string format_concurrent_alphabet(const ConcurrentAlphabet& alphabet);

/// Words: names separated by whitespace; when every name is a single
/// character the whitespace may be omitted ("abbaacd").
Word parse_word(const ConcurrentAlphabet& alphabet, std::string_view text);
std::string format_word(const ConcurrentAlphabet& alphabet, const Word& word);

/// Word-trace congruence: equality of the projections onto every dependent
/// pair.  This is the conceptual baseline; it is implemented directly on
/// words so it can serve as an independent check of the step machinery.
bool trace_equivalent(const ConcurrentAlphabet& alphabet, const Word& lhs, const Word& rhs);

/// Projections of a word onto its dependent pairs (entries over the two
/// actions only; there are no joint marks at the word level).
ProjectionSet trace_projections(const ConcurrentAlphabet& alphabet, const Word& word);

/// Greatest-parallel normal form of a word trace: each letter lands in the
/// earliest block after every earlier dependent letter, blocks are sorted.
std::vector<Word> trace_foata_blocks(const ConcurrentAlphabet& alphabet, const Word& word);
Word trace_foata(const ConcurrentAlphabet& alphabet, const Word& word);

/// Least equivalent word: greedily moves the least currently-movable letter
/// to the front.
Word trace_minlex(const ConcurrentAlphabet& alphabet, const Word& word);

/// The step alphabet a concurrent alphabet embeds into: simultaneity and
/// serialisability both equal to independence.  Sequences over it behave
/// exactly like step traces over the concurrent alphabet.
ComtraceAlphabet comtrace_embedding(const ConcurrentAlphabet& alphabet);

/// Step-trace operations over a concurrent alphabet, delegated through the
/// embedding.  Steps must be cliques of the independence relation.
bool steptrace_equivalent(const ConcurrentAlphabet& alphabet, const StepSequence& lhs,
                          const StepSequence& rhs);
StepSequence steptrace_foata(const ConcurrentAlphabet& alphabet, const StepSequence& sequence);
StepSequence steptrace_minlex(const ConcurrentAlphabet& alphabet, const StepSequence& sequence);
ProjectionSet steptrace_projections(const ConcurrentAlphabet& alphabet,
                                    const StepSequence& sequence);

/// A step alphabet is radical when nothing is simultaneous-but-unserialisable:
/// then simultaneity carries no information beyond independence.
bool is_radical(const ComtraceAlphabet& alphabet);

/// The concurrent alphabet a radical step alphabet collapses to (independence
/// = simultaneity).  Throws not_radical otherwise.
ConcurrentAlphabet radical_bridge(const ComtraceAlphabet& alphabet);

}  // namespace ctk

#endif
