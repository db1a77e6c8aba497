#include "ctk/mztrace.hpp"

#include <algorithm>
#include <cctype>

#include "ctk/reconstruct.hpp"
#include "textio.hpp"

namespace ctk {

ConcurrentAlphabet ConcurrentAlphabet::validate(
    const ConcurrentAlphabetDescription& description) {
  ConcurrentAlphabet alphabet;
  for (const std::string& name : description.actions) {
    if (!is_valid_action_name(name)) {
      fail(Errc::parse_error, "invalid action name '" + name + "'");
    }
    if (alphabet.index_.contains(name)) {
      fail(Errc::duplicate_action, "action '" + name + "' listed twice");
    }
    alphabet.index_.emplace(name, static_cast<ActionId>(alphabet.names_.size()));
    alphabet.names_.push_back(name);
    if (name.size() != 1) alphabet.all_single_char_ = false;
  }
  alphabet.ind_ = BitRelation(alphabet.size());
  for (const auto& [x, y] : description.ind) {
    auto a = alphabet.find(x);
    auto b = alphabet.find(y);
    if (!a) fail(Errc::unknown_action, "action '" + x + "'");
    if (!b) fail(Errc::unknown_action, "action '" + y + "'");
    if (*a == *b) fail(Errc::reflexive_pair, "ind pair (" + x + ", " + y + ")");
    alphabet.ind_.insert(*a, *b);
    alphabet.ind_.insert(*b, *a);
  }
  return alphabet;
}

const std::string& ConcurrentAlphabet::name(ActionId a) const { return names_[check(a)]; }

ActionId ConcurrentAlphabet::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  fail(Errc::unknown_action, "action '" + std::string(name) + "'");
}

std::optional<ActionId> ConcurrentAlphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ConcurrentAlphabet::independent(ActionId a, ActionId b) const {
  return ind_.contains(check(a), check(b));
}

ActionId ConcurrentAlphabet::check(ActionId a) const {
  if (a < 0 || a >= size()) {
    fail(Errc::unknown_action, "action id " + std::to_string(a) + " out of range");
  }
  return a;
}

ConcurrentAlphabet parse_concurrent_alphabet(std::string_view text) {
  ConcurrentAlphabetDescription description;
  bool seen_actions = false;
  for (const detail::Line& line : detail::tokenize_lines(text)) {
    const std::string& keyword = line.tokens.front();
    if (keyword == "actions") {
      if (seen_actions) {
        fail(Errc::parse_error, detail::where(line) + ": repeated 'actions' line");
      }
      seen_actions = true;
      description.actions.assign(line.tokens.begin() + 1, line.tokens.end());
    } else if (keyword == "ind") {
      if (line.tokens.size() != 3) {
        fail(Errc::parse_error, detail::where(line) + ": 'ind' needs two actions");
      }
      description.ind.emplace_back(line.tokens[1], line.tokens[2]);
    } else if (keyword == "sim" || keyword == "ser") {
      fail(Errc::parse_error,
           detail::where(line) + ": '" + keyword +
               "' lines describe a simultaneity/serialisability alphabet, not a "
               "concurrent alphabet");
    } else {
      fail(Errc::parse_error, detail::where(line) + ": unknown keyword '" + keyword + "'");
    }
  }
  if (!seen_actions) fail(Errc::parse_error, "missing 'actions' line");
  return ConcurrentAlphabet::validate(description);
}

std::string format_concurrent_alphabet(const ConcurrentAlphabet& alphabet) {
  std::string out = "actions";
  for (const std::string& name : alphabet.actions()) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (auto [a, b] : alphabet.ind_relation().pairs()) {
    if (a < b) out += "ind " + alphabet.name(a) + ' ' + alphabet.name(b) + '\n';
  }
  return out;
}

Word parse_word(const ConcurrentAlphabet& alphabet, std::string_view text) {
  Word word;
  std::size_t i = 0;
  const bool single_char = alphabet.all_single_char_names();
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::string name;
    if (single_char) {
      name = text[i++];
    } else {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      name = std::string(text.substr(start, i - start));
    }
    word.push_back(alphabet.id(name));
  }
  return word;
}

std::string format_word(const ConcurrentAlphabet& alphabet, const Word& word) {
  std::string out;
  const bool single_char = alphabet.all_single_char_names();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_char && i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

ProjectionSet trace_projections(const ConcurrentAlphabet& alphabet, const Word& word) {
  // Shape the family exactly like the embedding would: entries on dependent
  // pairs only.
  ProjectionSet set(comtrace_embedding(alphabet));
  for (ActionId x : word) {
    alphabet.check(x);
    for (ActionId b = 0; b < alphabet.size(); ++b) {
      if (alphabet.dependent(x, b)) set.append(x, b, x);
    }
  }
  return set;
}

bool trace_equivalent(const ConcurrentAlphabet& alphabet, const Word& lhs, const Word& rhs) {
  return projection_sets_equal(trace_projections(alphabet, lhs),
                               trace_projections(alphabet, rhs));
}

std::vector<Word> trace_foata_blocks(const ConcurrentAlphabet& alphabet, const Word& word) {
  // level(x) = 1 + max level among earlier dependent letters; letters of one
  // level are pairwise independent and form a block.
  std::vector<std::size_t> letter_level(static_cast<std::size_t>(alphabet.size()), 0);
  std::vector<Word> blocks;
  for (ActionId x : word) {
    alphabet.check(x);
    std::size_t level = 0;
    for (ActionId b = 0; b < alphabet.size(); ++b) {
      if (alphabet.dependent(x, b)) level = std::max(level, letter_level[b]);
    }
    ++level;
    letter_level[x] = level;
    if (blocks.size() < level) blocks.resize(level);
    blocks[level - 1].push_back(x);
  }
  for (Word& block : blocks) std::sort(block.begin(), block.end());
  return blocks;
}

Word trace_foata(const ConcurrentAlphabet& alphabet, const Word& word) {
  Word out;
  for (const Word& block : trace_foata_blocks(alphabet, word)) {
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Word trace_minlex(const ConcurrentAlphabet& alphabet, const Word& word) {
  Word rest = word;
  for (ActionId x : rest) alphabet.check(x);
  Word out;
  out.reserve(word.size());
  while (!rest.empty()) {
    // A letter occurrence can move to the front iff no earlier occurrence
    // depends on it; pick the least such letter.
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) {
        movable = alphabet.independent(rest[j], rest[i]);
      }
      if (movable && (best == rest.size() || rest[i] < rest[best])) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

ComtraceAlphabet comtrace_embedding(const ConcurrentAlphabet& alphabet) {
  AlphabetDescription description;
  description.actions = alphabet.actions();
  for (auto [a, b] : alphabet.ind_relation().pairs()) {
    if (a < b) description.sim.emplace_back(alphabet.name(a), alphabet.name(b));
    description.ser.emplace_back(alphabet.name(a), alphabet.name(b));
  }
  return ComtraceAlphabet::validate(description);
}

bool steptrace_equivalent(const ConcurrentAlphabet& alphabet, const StepSequence& lhs,
                          const StepSequence& rhs) {
  ComtraceAlphabet embedding = comtrace_embedding(alphabet);
  return equivalent(embedding, lhs, rhs);
}

StepSequence steptrace_foata(const ConcurrentAlphabet& alphabet, const StepSequence& sequence) {
  ComtraceAlphabet embedding = comtrace_embedding(alphabet);
  return foata(embedding, sequence);
}

StepSequence steptrace_minlex(const ConcurrentAlphabet& alphabet, const StepSequence& sequence) {
  ComtraceAlphabet embedding = comtrace_embedding(alphabet);
  return minlex(embedding, sequence);
}

ProjectionSet steptrace_projections(const ConcurrentAlphabet& alphabet,
                                    const StepSequence& sequence) {
  ComtraceAlphabet embedding = comtrace_embedding(alphabet);
  return projection_representation(embedding, sequence);
}

bool is_radical(const ComtraceAlphabet& alphabet) {
  for (ActionId a = 0; a < alphabet.size(); ++a) {
    for (ActionId b = 0; b < alphabet.size(); ++b) {
      if (alphabet.sin(a, b)) return false;
    }
  }
  return true;
}

ConcurrentAlphabet radical_bridge(const ComtraceAlphabet& alphabet) {
  if (!is_radical(alphabet)) {
    fail(Errc::not_radical,
         "some pair is simultaneous but not serialisable both ways; independence "
         "does not determine this alphabet");
  }
  ConcurrentAlphabetDescription description;
  description.actions = alphabet.actions();
  for (auto [a, b] : alphabet.sim_relation().pairs()) {
    if (a < b) description.ind.emplace_back(alphabet.name(a), alphabet.name(b));
  }
  return ConcurrentAlphabet::validate(description);
}

}  // namespace ctk
