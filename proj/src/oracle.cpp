#include "ctk/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

namespace ctk {

namespace {

bool cross_serialisable(const ComtraceAlphabet& alphabet, const Step& lhs, const Step& rhs) {
  for (ActionId a : lhs) {
    for (ActionId b : rhs) {
      if (!alphabet.ser(a, b)) return false;
    }
  }
  return true;
}

Step merge(const Step& lhs, const Step& rhs) {
  std::vector<ActionId> members(lhs.begin(), lhs.end());
  members.insert(members.end(), rhs.begin(), rhs.end());
  return Step(std::move(members));
}

/// All rewrites of `sequence` by one join or one split.
std::vector<StepSequence> neighbours(const ComtraceAlphabet& alphabet,
                                     const StepSequence& sequence) {
  std::vector<StepSequence> out;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    if (!cross_serialisable(alphabet, sequence[i], sequence[i + 1])) continue;
    StepSequence joined(sequence.begin(), sequence.begin() + i);
    joined.push_back(merge(sequence[i], sequence[i + 1]));
    joined.insert(joined.end(), sequence.begin() + i + 2, sequence.end());
    out.push_back(std::move(joined));
  }
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto members = sequence[i].members();
    const std::size_t n = members.size();
    if (n < 2) continue;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      std::vector<ActionId> first, second;
      for (std::size_t j = 0; j < n; ++j) {
        ((mask >> j) & 1 ? first : second).push_back(members[j]);
      }
      Step head{std::move(first)}, tail{std::move(second)};
      if (!cross_serialisable(alphabet, head, tail)) continue;
      StepSequence split(sequence.begin(), sequence.begin() + i);
      split.push_back(std::move(head));
      split.push_back(std::move(tail));
      split.insert(split.end(), sequence.begin() + i + 1, sequence.end());
      out.push_back(std::move(split));
    }
  }
  return out;
}

}  // namespace

std::vector<StepSequence> enumerate_class(const ComtraceAlphabet& alphabet,
                                          const StepSequence& sequence, std::size_t cap) {
  require_sequence(alphabet, sequence);
  std::set<StepSequence> seen{sequence};
  std::deque<const StepSequence*> frontier{&*seen.begin()};
  while (!frontier.empty()) {
    const StepSequence& current = *frontier.front();
    frontier.pop_front();
    for (StepSequence& next : neighbours(alphabet, current)) {
      auto [it, inserted] = seen.insert(std::move(next));
      if (!inserted) continue;
      if (seen.size() > cap) {
        fail(Errc::cap_exceeded, "congruence class larger than " + std::to_string(cap));
      }
      frontier.push_back(&*it);
    }
  }
  return {seen.begin(), seen.end()};
}

bool oracle_equivalent(const ComtraceAlphabet& alphabet, const StepSequence& lhs,
                       const StepSequence& rhs, std::size_t cap) {
  require_sequence(alphabet, rhs);
  std::vector<StepSequence> cls = enumerate_class(alphabet, lhs, cap);
  return std::binary_search(cls.begin(), cls.end(), rhs);
}

}  // namespace ctk
