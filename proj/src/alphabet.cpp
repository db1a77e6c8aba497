#include "ctk/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "textio.hpp"

namespace ctk {

std::vector<std::pair<ActionId, ActionId>> BitRelation::pairs() const {
  std::vector<std::pair<ActionId, ActionId>> result;
  for (ActionId a = 0; a < size_; ++a) {
    for (ActionId b = 0; b < size_; ++b) {
      if (contains(a, b)) result.emplace_back(a, b);
    }
  }
  return result;
}

bool is_valid_action_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

ComtraceAlphabet ComtraceAlphabet::validate(const AlphabetDescription& description) {
  ComtraceAlphabet alphabet;
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
  const int k = alphabet.size();
  alphabet.sim_ = BitRelation(k);
  alphabet.ser_ = BitRelation(k);

  auto resolve = [&](const std::string& name) {
    auto it = alphabet.index_.find(name);
    if (it == alphabet.index_.end()) fail(Errc::unknown_action, "action '" + name + "'");
    return it->second;
  };
  for (const auto& [x, y] : description.sim) {
    ActionId a = resolve(x), b = resolve(y);
    if (a == b) fail(Errc::reflexive_pair, "sim pair (" + x + ", " + y + ")");
    alphabet.sim_.insert(a, b);
    alphabet.sim_.insert(b, a);  // sim is symmetric by definition
  }
  for (const auto& [x, y] : description.ser) {
    ActionId a = resolve(x), b = resolve(y);
    if (a == b) fail(Errc::reflexive_pair, "ser pair (" + x + ", " + y + ")");
    if (!alphabet.sim_.contains(a, b)) {
      fail(Errc::ser_not_in_sim, "ser pair (" + x + ", " + y + ") is not in sim");
    }
    alphabet.ser_.insert(a, b);
  }

  DerivedRelations& d = alphabet.derived_;
  d.dep = BitRelation(k);
  d.ind = BitRelation(k);
  d.sin = BitRelation(k);
  d.ssm = BitRelation(k);
  d.wdp = BitRelation(k);
  for (ActionId a = 0; a < k; ++a) {
    for (ActionId b = 0; b < k; ++b) {
      const bool sim = alphabet.sim_.contains(a, b);
      const bool ser_ab = alphabet.ser_.contains(a, b);
      const bool ser_ba = alphabet.ser_.contains(b, a);
      if (!sim) d.dep.insert(a, b);
      if (ser_ab && ser_ba) d.ind.insert(a, b);
      if (sim && !ser_ab) {
        d.sin.insert(a, b);
        if (!ser_ba) d.ssm.insert(a, b);
        if (ser_ba) d.wdp.insert(a, b);  // sin one way only
      }
    }
  }

  alphabet.partners_.resize(k);
  for (ActionId a = 0; a < k; ++a) {
    for (ActionId b = 0; b < k; ++b) {
      if (!d.ind.contains(a, b)) alphabet.partners_[a].push_back(b);
    }
  }
  return alphabet;
}

const std::string& ComtraceAlphabet::name(ActionId a) const { return names_[check(a)]; }

ActionId ComtraceAlphabet::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  fail(Errc::unknown_action, "action '" + std::string(name) + "'");
}

std::optional<ActionId> ComtraceAlphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<ActionId>& ComtraceAlphabet::partners(ActionId a) const {
  return partners_[check(a)];
}

ActionId ComtraceAlphabet::check(ActionId a) const {
  if (a < 0 || a >= size()) {
    fail(Errc::unknown_action, "action id " + std::to_string(a) + " out of range");
  }
  return a;
}

const DerivedRelations& derive_relations(const ComtraceAlphabet& alphabet) {
  return alphabet.relations();
}

AlphabetDescription parse_alphabet_description(std::string_view text) {
  AlphabetDescription description;
  bool seen_actions = false;
  for (const detail::Line& line : detail::tokenize_lines(text)) {
    const std::string& keyword = line.tokens.front();
    if (keyword == "actions") {
      if (seen_actions) {
        fail(Errc::parse_error, detail::where(line) + ": repeated 'actions' line");
      }
      seen_actions = true;
      description.actions.assign(line.tokens.begin() + 1, line.tokens.end());
    } else if (keyword == "sim" || keyword == "ser") {
      if (line.tokens.size() != 3) {
        fail(Errc::parse_error, detail::where(line) + ": '" + keyword + "' needs two actions");
      }
      auto& target = keyword == "sim" ? description.sim : description.ser;
      target.emplace_back(line.tokens[1], line.tokens[2]);
    } else if (keyword == "ind") {
      fail(Errc::parse_error, detail::where(line) +
                                  ": 'ind' lines describe a concurrent alphabet, not a "
                                  "simultaneity/serialisability alphabet");
    } else {
      fail(Errc::parse_error, detail::where(line) + ": unknown keyword '" + keyword + "'");
    }
  }
  if (!seen_actions) fail(Errc::parse_error, "missing 'actions' line");
  return description;
}

ComtraceAlphabet parse_comtrace_alphabet(std::string_view text) {
  return ComtraceAlphabet::validate(parse_alphabet_description(text));
}

std::string format_comtrace_alphabet(const ComtraceAlphabet& alphabet) {
  std::string out = "actions";
  for (const std::string& name : alphabet.actions()) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (auto [a, b] : alphabet.sim_relation().pairs()) {
    if (a < b) out += "sim " + alphabet.name(a) + ' ' + alphabet.name(b) + '\n';
  }
  for (auto [a, b] : alphabet.ser_relation().pairs()) {
    out += "ser " + alphabet.name(a) + ' ' + alphabet.name(b) + '\n';
  }
  return out;
}

}  // namespace ctk
