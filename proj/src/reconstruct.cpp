#include "ctk/reconstruct.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "classgraph.hpp"

namespace ctk {

namespace {

std::size_t pair_slot(ActionId a, ActionId b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b) * (b + 1) / 2 + a;
}

/// A projection family with a per-entry read position, so that extraction is
/// O(1) per entry instead of copying suffixes around.
struct Cursor {
  const ComtraceAlphabet& alphabet;
  const ProjectionSet& base;
  std::vector<std::size_t> offset;
  std::size_t consumed = 0;

  Cursor(const ComtraceAlphabet& alphabet_, const ProjectionSet& base_)
      : alphabet(alphabet_),
        base(base_),
        offset(static_cast<std::size_t>(base_.width()) * (base_.width() + 1) / 2, 0) {
    if (base.width() != alphabet.size()) {
      fail(Errc::alphabet_mismatch, "projection family shaped by a different alphabet");
    }
  }

  std::span<const ActionId> rest(ActionId a, ActionId b) const {
    return base.entry(a, b).subspan(offset[pair_slot(a, b)]);
  }

  std::size_t remaining() const { return base.total_symbols() - consumed; }

  void drop(ActionId a, ActionId b, std::size_t count) {
    offset[pair_slot(a, b)] += count;
    consumed += count;
  }

  ProjectionSet materialize() const {
    ProjectionSet out(alphabet);
    for (auto [a, b] : base.tracked_pairs()) {
      for (ActionId sym : rest(a, b)) out.append(a, b, sym);
    }
    return out;
  }
};

ConditionAnalysis analyse(const Cursor& cursor) {
  const ComtraceAlphabet& alphabet = cursor.alphabet;
  ConditionAnalysis result;
  for (ActionId a = 0; a < alphabet.size(); ++a) {
    bool possible = true;
    for (ActionId b : alphabet.partners(a)) {
      auto entry = cursor.rest(a, b);
      const bool heads = !entry.empty() && entry.front() == a;
      if (b == a || alphabet.dep(a, b) || alphabet.wdp(b, a)) {
        // The entry must schedule a before anything else it mentions.
        possible = possible && heads;
      } else if (alphabet.wdp(a, b)) {
        // a may head the entry, or occur jointly with b in its first step,
        // in which case placing a requires placing b.
        const bool joint = entry.size() >= 2 && entry[0] == b && entry[1] == a;
        if (joint) result.cnd.emplace_back(a, b);
        possible = possible && (heads || joint);
      } else {  // ssm pair
        const bool joint = !entry.empty() && entry.front() == kBottom;
        if (joint) result.cnd.emplace_back(a, b);
        possible = possible && (heads || joint);
      }
    }
    if (possible) result.cpa.push_back(a);
  }
  std::sort(result.cnd.begin(), result.cnd.end());
  return result;
}

std::vector<ActionId> compute_possible(const ComtraceAlphabet& alphabet,
                                       const ConditionAnalysis& analysis,
                                       std::vector<ActionId>* impossible_out) {
  const int k = alphabet.size();
  std::vector<char> impossible(k, 1);
  for (ActionId a : analysis.cpa) impossible[a] = 0;
  // "a needs b": once b is impossible, so is a.
  std::vector<std::vector<ActionId>> needed_by(k);
  for (auto [a, b] : analysis.cnd) needed_by[b].push_back(a);
  std::deque<ActionId> queue;
  for (ActionId a = 0; a < k; ++a) {
    if (impossible[a]) queue.push_back(a);
  }
  while (!queue.empty()) {
    ActionId b = queue.front();
    queue.pop_front();
    for (ActionId a : needed_by[b]) {
      if (!impossible[a]) {
        impossible[a] = 1;
        queue.push_back(a);
      }
    }
  }
  std::vector<ActionId> possible;
  for (ActionId a = 0; a < k; ++a) {
    if (!impossible[a]) {
      possible.push_back(a);
    } else if (impossible_out) {
      impossible_out->push_back(a);
    }
  }
  return possible;
}

std::vector<ActionId> compute_possible(const Cursor& cursor,
                                       std::vector<ActionId>* impossible_out = nullptr) {
  return compute_possible(cursor.alphabet, analyse(cursor), impossible_out);
}

bool class_union_allowed(const detail::ClassGraph& graph, const std::vector<char>& chosen) {
  // Closed under outgoing edges: whatever a chosen class must not precede is
  // chosen as well.
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (!chosen[i]) continue;
    for (int j : graph.out[i]) {
      if (!chosen[j]) return false;
    }
  }
  return true;
}

bool allowed_on(const Cursor& cursor, const Step& step) {
  std::vector<ActionId> possible = compute_possible(cursor);
  if (step.empty()) return false;
  for (ActionId a : step) {
    if (!std::binary_search(possible.begin(), possible.end(), a)) return false;
  }
  detail::ClassGraph graph = detail::build_class_graph(cursor.alphabet, Step(possible));
  std::vector<char> chosen(graph.classes.size(), 0);
  for (std::size_t i = 0; i < graph.classes.size(); ++i) {
    const Step& cls = graph.classes[i];
    const bool first_in = step.contains(*cls.begin());
    for (ActionId x : cls) {
      if (step.contains(x) != first_in) return false;  // class torn apart
    }
    chosen[i] = first_in ? 1 : 0;
  }
  return class_union_allowed(graph, chosen);
}

void advance(Cursor& cursor, const Step& step) {
  const ComtraceAlphabet& alphabet = cursor.alphabet;
  for (ActionId a : step) {
    for (ActionId b : alphabet.partners(a)) {
      if (b == a) {
        cursor.drop(a, a, 1);
        continue;
      }
      if (step.contains(b)) {
        if (a > b) continue;  // handle each joint pair once
        cursor.drop(a, b, alphabet.ssm(a, b) ? 1 : 2);
      } else {
        cursor.drop(a, b, 1);
      }
    }
  }
}

/// Minimal structural discipline a projection family must satisfy to possibly
/// be the representation of anything; returns an explanation or "".
std::string malformed_reason(const ComtraceAlphabet& alphabet, const ProjectionSet& set) {
  for (auto [a, b] : set.tracked_pairs()) {
    auto entry = set.entry(a, b);
    std::size_t count_a = 0, count_b = 0, count_joint = 0;
    for (ActionId sym : entry) {
      if (sym == kBottom) {
        if (!alphabet.ssm(a, b)) {
          return "joint mark on pair {" + alphabet.name(a) + ", " + alphabet.name(b) +
                 "} which is not strictly simultaneous";
        }
        ++count_joint;
      } else if (sym == a) {
        ++count_a;
      } else if (sym == b) {
        ++count_b;
      } else {
        return "symbol '" + (sym >= 0 && sym < alphabet.size() ? alphabet.name(sym) : "?") +
               "' outside pair {" + alphabet.name(a) + ", " + alphabet.name(b) + "}";
      }
    }
    if (a == b) continue;
    const std::size_t occ_a = set.entry(a, a).size();
    const std::size_t occ_b = set.entry(b, b).size();
    if (count_a + count_joint != occ_a || count_b + count_joint != occ_b) {
      return "entry {" + alphabet.name(a) + ", " + alphabet.name(b) +
             "} mentions the actions a different number of times than their own entries";
    }
  }
  return "";
}

Step choose_step(const Strategy& strategy, const Cursor& cursor, const Step& possible,
                 const detail::ClassGraph& graph) {
  switch (strategy.kind()) {
    case Strategy::Kind::foata:
      return possible;  // all of M: trivially closed
    case Strategy::Kind::minlex: {
      std::vector<char> alive(graph.classes.size(), 1);
      for (std::size_t i = 0; i < graph.classes.size(); ++i) {
        // Classes are sorted, and any allowed union is at least as large as
        // its own least class, so the first serialisable-before-the-rest
        // class is the least allowed step.
        if (graph.is_sink(static_cast<int>(i), alive)) return graph.classes[i];
      }
      throw std::logic_error("class condensation without a sink");
    }
    case Strategy::Kind::custom: {
      ChoiceContext context{cursor.alphabet, possible, graph.classes};
      Step step = strategy.chooser()(context);
      if (!allowed_on(cursor, step)) {
        fail(Errc::not_allowed_step,
             "strategy chose " + format_step(cursor.alphabet, step) +
                 ", which cannot begin the remaining projections");
      }
      return step;
    }
  }
  throw std::logic_error("unknown strategy");
}

}  // namespace

ConditionAnalysis conditionally_possible(const ComtraceAlphabet& alphabet,
                                         const ProjectionSet& set) {
  return analyse(Cursor(alphabet, set));
}

std::vector<ActionId> possible_actions(const ComtraceAlphabet& alphabet,
                                       const ProjectionSet& set) {
  return compute_possible(Cursor(alphabet, set));
}

std::vector<Step> allowed_first_steps(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                                      std::size_t cap) {
  Cursor cursor(alphabet, set);
  std::vector<ActionId> possible = compute_possible(cursor);
  if (possible.empty()) {
    fail(Errc::empty_possible_set, "no action can begin the remaining projections");
  }
  detail::ClassGraph graph = detail::build_class_graph(alphabet, Step(possible));
  const std::size_t m = graph.classes.size();
  if (m >= 63 || (std::uint64_t{1} << m) - 1 > cap) {
    fail(Errc::cap_exceeded, "more than " + std::to_string(cap) + " candidate steps");
  }
  std::vector<Step> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<char> chosen(m, 0);
    for (std::size_t i = 0; i < m; ++i) chosen[i] = (mask >> i) & 1 ? 1 : 0;
    if (!class_union_allowed(graph, chosen)) continue;
    std::vector<ActionId> members;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) members.insert(members.end(), graph.classes[i].begin(),
                                    graph.classes[i].end());
    }
    out.push_back(Step(std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_allowed_first_step(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                           const Step& step) {
  return allowed_on(Cursor(alphabet, set), step);
}

ProjectionSet extract(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                      const Step& step) {
  Cursor cursor(alphabet, set);
  if (!allowed_on(cursor, step)) {
    fail(Errc::not_allowed_step, "step " + format_step(alphabet, step) +
                                     " cannot begin the remaining projections");
  }
  advance(cursor, step);
  return cursor.materialize();
}

ReconstructResult reconstruct(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                              const Strategy& strategy,
                              std::vector<ReconstructionStage>* stages) {
  if (std::string reason = malformed_reason(alphabet, set); !reason.empty()) {
    return NotRealizable{0, "MalformedProjectionSet: " + reason, set};
  }
  Cursor cursor(alphabet, set);
  StepSequence result;
  std::size_t stage = 0;
  while (cursor.remaining() > 0) {
    ++stage;
    ReconstructionStage record;
    record.stage = stage;
    record.analysis = analyse(cursor);
    std::vector<ActionId> possible =
        compute_possible(alphabet, record.analysis, &record.impossible);
    record.possible = possible;
    if (possible.empty()) {
      if (stages) stages->push_back(std::move(record));
      return NotRealizable{stage, "no action can begin the remaining projections",
                           cursor.materialize()};
    }
    Step possible_step{std::move(possible)};
    detail::ClassGraph graph = detail::build_class_graph(alphabet, possible_step);
    Step chosen = choose_step(strategy, cursor, possible_step, graph);
    record.chosen = chosen;
    if (stages) stages->push_back(std::move(record));
    advance(cursor, chosen);
    result.push_back(std::move(chosen));
  }
  return result;
}

namespace {

StepSequence rebuild(const ComtraceAlphabet& alphabet, const StepSequence& sequence,
                     const Strategy& strategy) {
  require_sequence(alphabet, sequence);
  ReconstructResult result =
      reconstruct(alphabet, projection_representation(alphabet, sequence), strategy);
  if (auto* rebuilt = std::get_if<StepSequence>(&result)) return std::move(*rebuilt);
  // The projections of a valid sequence are realizable by construction.
  throw std::logic_error("reconstruction failed on a genuine representation: " +
                         std::get<NotRealizable>(result).reason);
}

}  // namespace

StepSequence foata(const ComtraceAlphabet& alphabet, const StepSequence& sequence) {
  return rebuild(alphabet, sequence, Strategy::foata());
}

StepSequence minlex(const ComtraceAlphabet& alphabet, const StepSequence& sequence) {
  return rebuild(alphabet, sequence, Strategy::minlex());
}

}  // namespace ctk
