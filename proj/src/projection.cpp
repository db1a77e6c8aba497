#include "ctk/projection.hpp"

#include <algorithm>
#include <limits>

#include "textio.hpp"

namespace ctk {

namespace {

constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

}  // namespace

ProjectionSet::ProjectionSet(const ComtraceAlphabet& alphabet)
    : width_(alphabet.size()),
      tracked_(static_cast<std::size_t>(width_) * (width_ + 1) / 2, 0),
      entries_(tracked_.size()) {
  for (ActionId a = 0; a < width_; ++a) {
    for (ActionId b = a; b < width_; ++b) {
      if (!alphabet.ind(a, b)) tracked_[slot(a, b)] = 1;
    }
  }
}

std::size_t ProjectionSet::slot(ActionId a, ActionId b) const {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b) * (b + 1) / 2 + a;
}

bool ProjectionSet::tracked(ActionId a, ActionId b) const {
  if (a < 0 || b < 0 || a >= width_ || b >= width_) {
    fail(Errc::unknown_action, "action id out of range");
  }
  return tracked_[slot(a, b)] != 0;
}

std::span<const ActionId> ProjectionSet::entry(ActionId a, ActionId b) const {
  if (!tracked(a, b)) {
    fail(Errc::independent_pair, "independent pairs have no projection entry");
  }
  return entries_[slot(a, b)];
}

void ProjectionSet::append(ActionId a, ActionId b, ActionId symbol) {
  if (!tracked(a, b)) {
    fail(Errc::independent_pair, "independent pairs have no projection entry");
  }
  entries_[slot(a, b)].push_back(symbol);
  ++total_symbols_;
}

std::vector<std::pair<ActionId, ActionId>> ProjectionSet::tracked_pairs() const {
  std::vector<std::pair<ActionId, ActionId>> out;
  for (ActionId a = 0; a < width_; ++a) {
    for (ActionId b = a; b < width_; ++b) {
      if (tracked_[slot(a, b)]) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<ActionId> project_step(const ComtraceAlphabet& alphabet, const Step& step, ActionId a,
                                   ActionId b) {
  require_step(alphabet, step);
  if (alphabet.ind(a, b)) {
    fail(Errc::independent_pair, "pair (" + alphabet.name(a) + ", " + alphabet.name(b) +
                                     ") is independent and has no projection");
  }
  const bool has_a = step.contains(a);
  const bool has_b = step.contains(b);
  if (a == b) return has_a ? std::vector<ActionId>{a} : std::vector<ActionId>{};
  if (has_a && has_b) {
    if (alphabet.ssm(a, b)) return {kBottom};
    // Joint occurrence of a weakly dependent pair: the fragment lists the
    // action that the other one waits for first.
    if (alphabet.wdp(a, b)) return {b, a};
    return {a, b};  // (b, a) in wdp; dep pairs cannot share a step
  }
  if (has_a) return {a};
  if (has_b) return {b};
  return {};
}

ProjectionBuilder::ProjectionBuilder(const ComtraceAlphabet& alphabet)
    : alphabet_(&alphabet),
      set_(alphabet),
      in_step_(static_cast<std::size_t>(alphabet.size()), kNever),
      entry_stamp_(static_cast<std::size_t>(alphabet.size()) * (alphabet.size() + 1) / 2,
                   kNever) {}

void ProjectionBuilder::push_step(const Step& step) {
  const ComtraceAlphabet& alphabet = *alphabet_;
  require_step(alphabet, step);
  const std::size_t now = step_index_++;
  for (ActionId a : step) in_step_[a] = now;
  for (ActionId a : step) {
    for (ActionId b : alphabet.partners(a)) {
      if (b == a) {
        set_.append(a, a, a);
        continue;
      }
      if (in_step_[b] != now) {
        set_.append(a, b, a);  // partner absent from this step
        continue;
      }
      // Joint fragment: emit it atomically the first time one of the two
      // actions reaches the entry in this step, skip the second time.
      const ActionId lo = std::min(a, b), hi = std::max(a, b);
      const std::size_t s = static_cast<std::size_t>(hi) * (hi + 1) / 2 + lo;
      if (entry_stamp_[s] == now) continue;
      entry_stamp_[s] = now;
      if (alphabet.ssm(a, b)) {
        set_.append(a, b, kBottom);
      } else if (alphabet.wdp(a, b)) {
        set_.append(a, b, b);
        set_.append(a, b, a);
      } else {
        set_.append(a, b, a);
        set_.append(a, b, b);
      }
    }
  }
}

ProjectionSet projection_representation(const ComtraceAlphabet& alphabet,
                                        const StepSequence& sequence) {
  ProjectionBuilder builder(alphabet);
  for (const Step& step : sequence) builder.push_step(step);
  return builder.take();
}

bool equivalent(const ComtraceAlphabet& alphabet, const StepSequence& lhs,
                const StepSequence& rhs) {
  return projection_sets_equal(projection_representation(alphabet, lhs),
                               projection_representation(alphabet, rhs));
}

bool projection_sets_equal(const ProjectionSet& lhs, const ProjectionSet& rhs) {
  if (lhs.width_ != rhs.width_ || lhs.tracked_ != rhs.tracked_) {
    fail(Errc::alphabet_mismatch, "projection families shaped by different alphabets");
  }
  return lhs.entries_ == rhs.entries_;
}

ProjectionSet parse_projection_set(const ComtraceAlphabet& alphabet, std::string_view text) {
  ProjectionSet set(alphabet);
  std::vector<char> seen(static_cast<std::size_t>(alphabet.size()) * (alphabet.size() + 1) / 2,
                         0);
  for (const detail::Line& line : detail::tokenize_lines(text)) {
    if (line.tokens.front() != "proj") {
      fail(Errc::parse_error, detail::where(line) + ": expected 'proj'");
    }
    if (line.tokens.size() < 4 || line.tokens[3] != ":") {
      fail(Errc::parse_error, detail::where(line) + ": expected 'proj <a> <b> : <symbols>'");
    }
    const ActionId a = alphabet.id(line.tokens[1]);
    const ActionId b = alphabet.id(line.tokens[2]);
    if (alphabet.ind(a, b)) {
      fail(Errc::independent_pair, detail::where(line) + ": pair (" + alphabet.name(a) + ", " +
                                       alphabet.name(b) + ") is independent");
    }
    const ActionId lo = std::min(a, b), hi = std::max(a, b);
    const std::size_t key = static_cast<std::size_t>(hi) * (hi + 1) / 2 + lo;
    if (seen[key]) {
      fail(Errc::parse_error, detail::where(line) + ": duplicate entry for {" +
                                  alphabet.name(lo) + ", " + alphabet.name(hi) + "}");
    }
    seen[key] = 1;
    for (std::size_t i = 4; i < line.tokens.size(); ++i) {
      const std::string& token = line.tokens[i];
      if (token == "!") {
        if (!alphabet.ssm(a, b)) {
          fail(Errc::bottom_on_non_ssm_pair,
               detail::where(line) + ": '!' is only valid on strictly simultaneous pairs");
        }
        set.append(a, b, kBottom);
        continue;
      }
      const ActionId sym = alphabet.id(token);
      if (sym != a && sym != b) {
        fail(Errc::parse_error, detail::where(line) + ": symbol '" + token +
                                    "' does not belong to the pair {" + alphabet.name(lo) +
                                    ", " + alphabet.name(hi) + "}");
      }
      set.append(a, b, sym);
    }
  }
  return set;
}

std::string format_projection_set(const ComtraceAlphabet& alphabet, const ProjectionSet& set) {
  std::string out;
  for (auto [a, b] : set.tracked_pairs()) {
    auto entry = set.entry(a, b);
    if (entry.empty()) continue;
    out += "proj " + alphabet.name(a) + ' ' + alphabet.name(b) + " :";
    for (ActionId sym : entry) {
      out += ' ';
      out += sym == kBottom ? "!" : alphabet.name(sym);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ctk
