#include "ctk/stepseq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ctk {

Step::Step(std::vector<ActionId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("step members must be distinct");
  }
}

Step Step::of(std::initializer_list<ActionId> members) {
  return Step(std::vector<ActionId>(members));
}

bool Step::contains(ActionId a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::strong_ordering operator<=>(const Step& lhs, const Step& rhs) {
  if (auto cmp = lhs.members_.size() <=> rhs.members_.size(); cmp != 0) return cmp;
  // Equal sizes: the first differing member is the least element of the
  // symmetric difference on each side, so plain lexicographic order on the
  // sorted member lists realises the min(A\B) vs min(B\A) rule.
  return std::lexicographical_compare_three_way(lhs.members_.begin(), lhs.members_.end(),
                                                rhs.members_.begin(), rhs.members_.end());
}

bool is_step(const ComtraceAlphabet& alphabet, const Step& step) {
  if (step.empty()) return false;
  auto members = step.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    alphabet.check(members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!alphabet.sim(members[i], members[j])) return false;
    }
  }
  return true;
}

void require_step(const ComtraceAlphabet& alphabet, const Step& step) {
  if (step.empty()) fail(Errc::not_a_step, "a step must be nonempty");
  auto members = step.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    alphabet.check(members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!alphabet.sim(members[i], members[j])) {
        fail(Errc::not_a_step, "actions '" + alphabet.name(members[i]) + "' and '" +
                                   alphabet.name(members[j]) + "' are not simultaneous");
      }
    }
  }
}

void require_sequence(const ComtraceAlphabet& alphabet, const StepSequence& sequence) {
  for (const Step& step : sequence) require_step(alphabet, step);
}

namespace {

void extend_cliques(const ComtraceAlphabet& alphabet, std::vector<ActionId>& clique,
                    ActionId next, std::size_t cap, std::vector<Step>& out) {
  for (ActionId a = next; a < alphabet.size(); ++a) {
    bool compatible = std::all_of(clique.begin(), clique.end(),
                                  [&](ActionId b) { return alphabet.sim(a, b); });
    if (!compatible) continue;
    clique.push_back(a);
    if (out.size() >= cap) {
      fail(Errc::cap_exceeded, "more than " + std::to_string(cap) + " steps");
    }
    out.push_back(Step(clique));
    extend_cliques(alphabet, clique, a + 1, cap, out);
    clique.pop_back();
  }
}

}  // namespace

std::vector<Step> enumerate_steps(const ComtraceAlphabet& alphabet, std::size_t cap) {
  std::vector<Step> out;
  std::vector<ActionId> clique;
  extend_cliques(alphabet, clique, 0, cap, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering compare_actions(const ComtraceAlphabet& alphabet, ActionId a, ActionId b) {
  return alphabet.check(a) <=> alphabet.check(b);
}

std::strong_ordering compare_steps(const Step& lhs, const Step& rhs) { return lhs <=> rhs; }

std::strong_ordering compare_sequences(const StepSequence& lhs, const StepSequence& rhs) {
  // vector's lexicographic order with the size tie-break is exactly the
  // positional order with the proper-prefix rule.
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& message) {
  fail(Errc::parse_error, "at offset " + std::to_string(pos) + ": " + message);
}

}  // namespace

StepSequence parse_stepseq(const ComtraceAlphabet& alphabet, std::string_view text) {
  const bool single_char = alphabet.all_single_char_names();
  StepSequence sequence;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') parse_fail(i, "expected '('");
    ++i;
    std::vector<ActionId> members;
    while (true) {
      skip_ws();
      if (i >= text.size()) parse_fail(i, "unterminated step");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      std::string name;
      if (single_char) {
        name = text[i];
        ++i;
      } else {
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != ')' && text[i] != '(') {
          ++i;
        }
        name = std::string(text.substr(start, i - start));
      }
      if (!is_valid_action_name(name)) parse_fail(start, "invalid action name '" + name + "'");
      auto found = alphabet.find(name);
      if (!found) fail(Errc::unknown_action, "action '" + name + "'");
      if (std::find(members.begin(), members.end(), *found) != members.end()) {
        parse_fail(start, "action '" + name + "' repeated within a step");
      }
      members.push_back(*found);
    }
    if (members.empty()) parse_fail(i, "empty step");
    Step step{std::move(members)};
    require_step(alphabet, step);
    sequence.push_back(std::move(step));
    skip_ws();
  }
  return sequence;
}

std::string format_step(const ComtraceAlphabet& alphabet, const Step& step) {
  std::string out = "(";
  bool first = true;
  for (ActionId a : step) {
    if (!first) out += ' ';
    out += alphabet.name(a);
    first = false;
  }
  out += ')';
  return out;
}

std::string format_stepseq(const ComtraceAlphabet& alphabet, const StepSequence& sequence) {
  std::string out;
  for (const Step& step : sequence) out += format_step(alphabet, step);
  return out;
}

StepSequence concat(StepSequence lhs, const StepSequence& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

std::vector<ActionId> action_alphabet(const StepSequence& sequence) {
  std::vector<ActionId> out;
  for (const Step& step : sequence) out.insert(out.end(), step.begin(), step.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Step> step_alphabet(const StepSequence& sequence) {
  std::vector<Step> out = sequence;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t occurrences(const StepSequence& sequence, ActionId a) {
  std::size_t count = 0;
  for (const Step& step : sequence) count += step.contains(a) ? 1 : 0;
  return count;
}

std::size_t total_occurrences(const StepSequence& sequence) {
  std::size_t count = 0;
  for (const Step& step : sequence) count += step.members().size();
  return count;
}

Word lex_linearization(const StepSequence& sequence) {
  Word word;
  for (const Step& step : sequence) word.insert(word.end(), step.begin(), step.end());
  return word;
}

StepSequence singleton_steps(const Word& word) {
  StepSequence sequence;
  sequence.reserve(word.size());
  for (ActionId a : word) sequence.push_back(Step::of({a}));
  return sequence;
}

}  // namespace ctk
