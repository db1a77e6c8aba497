#ifndef CTK_ALPHABET_HPP
#define CTK_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctk/errors.hpp"

namespace ctk {

/// Actions are indices into the alphabet's action list.  The listing order is
/// the total order used everywhere ties have to be broken, so an id comparison
/// *is* the action comparison.
using ActionId = std::int32_t;

/// Dense k x k boolean relation over action ids.
class BitRelation {
public:
  BitRelation() = default;
  explicit BitRelation(int size) : size_(size), bits_(static_cast<std::size_t>(size) * size, 0) {}

  int size() const { return size_; }

  bool contains(ActionId a, ActionId b) const {
    return bits_[static_cast<std::size_t>(a) * size_ + b] != 0;
  }

  void insert(ActionId a, ActionId b) { bits_[static_cast<std::size_t>(a) * size_ + b] = 1; }

  /// All ordered pairs in the relation, row-major (so sorted by listing order).
  std::vector<std::pair<ActionId, ActionId>> pairs() const;

  bool operator==(const BitRelation&) const = default;

private:
  int size_ = 0;
  std::vector<char> bits_;
};

/// The five relations derived from (sim, ser):
///   dep = all pairs minus sim        (reflexive: every action depends on itself)
///   ind = ser intersected with its converse   (order and stepping both free)
///   sin = sim minus ser              (simultaneous but not serialisable this way)
///   ssm = sin minus converse of ser  (strictly simultaneous: only joint steps)
///   wdp = sin minus converse of sin  (weakly dependent: serialisable one way only)
struct DerivedRelations {
  BitRelation dep, ind, sin, ssm, wdp;
};

/// Unvalidated alphabet description, e.g. as read from a file.
struct AlphabetDescription {
  std::vector<std::string> actions;
  std::vector<std::pair<std::string, std::string>> sim;  // unordered pairs
  std::vector<std::pair<std::string, std::string>> ser;  // ordered pairs
};

/// A validated alphabet (Sigma, sim, ser) with sim irreflexive and symmetric
/// and ser a subset of sim.  The derived relations are computed eagerly at
/// validation time and the object is immutable afterwards.
class ComtraceAlphabet {
public:
  /// Checks well-formedness and builds the alphabet.  Throws Error with code
  /// duplicate_action, reflexive_pair, ser_not_in_sim, unknown_action or
  /// parse_error (bad action name).
  static ComtraceAlphabet validate(const AlphabetDescription& description);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& actions() const { return names_; }
  const std::string& name(ActionId a) const;

  /// Resolves a name; throws unknown_action.
  ActionId id(std::string_view name) const;
  std::optional<ActionId> find(std::string_view name) const;

  bool sim(ActionId a, ActionId b) const { return sim_.contains(check(a), check(b)); }
  bool ser(ActionId a, ActionId b) const { return ser_.contains(check(a), check(b)); }
  bool dep(ActionId a, ActionId b) const { return derived_.dep.contains(check(a), check(b)); }
  bool ind(ActionId a, ActionId b) const { return derived_.ind.contains(check(a), check(b)); }
  bool sin(ActionId a, ActionId b) const { return derived_.sin.contains(check(a), check(b)); }
  bool ssm(ActionId a, ActionId b) const { return derived_.ssm.contains(check(a), check(b)); }
  bool wdp(ActionId a, ActionId b) const { return derived_.wdp.contains(check(a), check(b)); }

  const BitRelation& sim_relation() const { return sim_; }
  const BitRelation& ser_relation() const { return ser_; }
  const DerivedRelations& relations() const { return derived_; }

  /// Actions that are not independent of `a` (self included): the pairs whose
  /// projection entries mention `a`.
  const std::vector<ActionId>& partners(ActionId a) const;

  bool all_single_char_names() const { return all_single_char_; }

  /// Bounds-checks an id; throws unknown_action.
  ActionId check(ActionId a) const;

private:
  ComtraceAlphabet() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ActionId> index_;
  BitRelation sim_, ser_;
  DerivedRelations derived_;
  std::vector<std::vector<ActionId>> partners_;
  bool all_single_char_ = true;
};

/// The derived relations of a validated alphabet (already cached inside it).
const DerivedRelations& derive_relations(const ComtraceAlphabet& alphabet);

/// Text format:
///   actions a b c d     (exactly one line; listing order = action order)
///   sim a b             (one unordered pair per line)
///   ser d a             (one ordered pair per line)
/// '#' starts a comment; blank lines are ignored.
ComtraceAlphabet parse_comtrace_alphabet(std::string_view text);
AlphabetDescription parse_alphabet_description(std::string_view text);
std::string format_comtrace_alphabet(const ComtraceAlphabet& alphabet);

/// True iff `name` matches [A-Za-z][A-Za-z0-9_]*.
bool is_valid_action_name(std::string_view name);

}  // namespace ctk

#endif
