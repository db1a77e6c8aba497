#ifndef CTK_INDIVISIBILITY_HPP
#define CTK_INDIVISIBILITY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ctk/stepseq.hpp"

namespace ctk {

/// The equivalence classes of a step under the "must stay together" relation:
/// the strongly connected components of the directed graph on the step's
/// members with an edge x -> y whenever (x, y) is in sin.  Classes are sorted
/// by step order.
struct StepPartition {
  std::vector<Step> classes;
};

StepPartition step_equiv_classes(const ComtraceAlphabet& alphabet, const Step& step);

/// A step is indivisible iff it has exactly one class, i.e. it cannot be
/// written as (B)(C) with B x C serialisable.
bool is_indivisible(const ComtraceAlphabet& alphabet, const Step& step);

/// All indivisible steps, sorted by step order.
std::vector<Step> indiv_alphabet(const ComtraceAlphabet& alphabet,
                                 std::size_t cap = kDefaultStepCap);

/// Lifted independence on indivisible steps: A and B are independent iff
/// every cross pair is independent.  Throws not_indivisible if either
/// argument is divisible.
bool indiv_independent(const ComtraceAlphabet& alphabet, const Step& a, const Step& b);

/// One division A = (B)(C) with B x C serialisable, choosing for B the least
/// eligible class in step order.  Throws already_indivisible when no division
/// exists.
std::pair<Step, Step> divide_step(const ComtraceAlphabet& alphabet, const Step& step);

/// The least sequence (in sequence order) equivalent to the single-step
/// sequence (A): repeatedly emits the least class that can be serialised
/// before the rest.  Every emitted step is indivisible.
StepSequence minlex_step(const ComtraceAlphabet& alphabet, const Step& step);

/// Refines every step of the sequence with minlex_step and concatenates the
/// results: an equivalent sequence consisting of indivisible steps only.
StepSequence split(const ComtraceAlphabet& alphabet, const StepSequence& sequence);

}  // namespace ctk

#endif
