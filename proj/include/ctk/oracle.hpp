#ifndef CTK_ORACLE_HPP
#define CTK_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "ctk/stepseq.hpp"

namespace ctk {

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

/// The full congruence class of a sequence, computed by exhaustive rewriting:
/// joining two adjacent steps whose cross pairs are all serialisable, and
/// splitting one step into two such halves.  Exponential and deliberately
/// slow-but-certain; the fast path (projection equality) is checked against
/// it, never the other way round.  Sorted by sequence order, so the first
/// element is the least equivalent sequence and the last is the greatest.
/// Throws cap_exceeded if the class has more than `cap` members.
std::vector<StepSequence> enumerate_class(const ComtraceAlphabet& alphabet,
                                          const StepSequence& sequence,
                                          std::size_t cap = kDefaultClassCap);

/// Ground-truth congruence test: membership of `rhs` in the enumerated class
/// of `lhs`.
bool oracle_equivalent(const ComtraceAlphabet& alphabet, const StepSequence& lhs,
                       const StepSequence& rhs, std::size_t cap = kDefaultClassCap);

}  // namespace ctk

#endif
