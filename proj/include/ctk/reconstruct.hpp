#ifndef CTK_RECONSTRUCT_HPP
#define CTK_RECONSTRUCT_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ctk/projection.hpp"
#include "ctk/stepseq.hpp"

namespace ctk {

/// Result of the possibility analysis of a projection family:
///  - cpa: actions whose every entry lets them stand in the first step,
///    possibly conditionally;
///  - cnd: pairs (a, b) meaning "a can only be placed first if b is placed
///    simultaneously" (a weakly-dependent joint prefix, or a strictly
///    simultaneous prefix mark).
struct ConditionAnalysis {
  std::vector<ActionId> cpa;
  std::vector<std::pair<ActionId, ActionId>> cnd;
};

ConditionAnalysis conditionally_possible(const ComtraceAlphabet& alphabet,
                                         const ProjectionSet& set);

/// The set M of actions that can actually appear in the first step: the
/// conditionally possible actions minus the least set closed under "a needs b
/// and b is impossible".
std::vector<ActionId> possible_actions(const ComtraceAlphabet& alphabet,
                                       const ProjectionSet& set);

/// Every step that can begin a sequence with the given projections: the
/// nonempty unions of equivalence classes of M that are closed under the
/// "must not be serialised before" edges.  Throws empty_possible_set when M
/// is empty, cap_exceeded when there are more than `cap` such steps.
std::vector<Step> allowed_first_steps(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                                      std::size_t cap = kDefaultStepCap);

bool is_allowed_first_step(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                           const Step& step);

/// Removes the contribution of `step` from the front of every entry: one
/// symbol for a pair with one member in the step (or a strictly simultaneous
/// joint mark), two symbols for a weakly dependent pair with both members in
/// the step.  Throws not_allowed_step unless `step` is an allowed first step.
ProjectionSet extract(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                      const Step& step);

/// Per-stage record kept when tracing a reconstruction run.
struct ReconstructionStage {
  std::size_t stage = 0;  // 1-based
  ConditionAnalysis analysis;
  std::vector<ActionId> impossible;
  std::vector<ActionId> possible;
  Step chosen;  // empty when the stage failed
};

/// Failure value: the stage at which reconstruction got stuck, why, and the
/// entries that survived.
struct NotRealizable {
  std::size_t stage = 0;
  std::string reason;
  ProjectionSet remaining;
};

using ReconstructResult = std::variant<StepSequence, NotRealizable>;

/// What a custom strategy sees at each stage.
struct ChoiceContext {
  const ComtraceAlphabet& alphabet;
  const Step& possible;               // M as a step
  const std::vector<Step>& classes;   // its classes, sorted by step order
};

/// How to choose among the allowed first steps at each stage:
///  - foata: take all of M (greedy-maximal; yields the greatest equivalent
///    sequence, whose steps cannot donate a prefix to their successor);
///  - minlex: take the least class that can be serialised before the rest
///    (yields the least equivalent sequence, all steps indivisible);
///  - custom: any caller-supplied chooser; it must return an allowed step,
///    otherwise reconstruct throws not_allowed_step.
class Strategy {
public:
  enum class Kind { foata, minlex, custom };
  using Chooser = std::function<Step(const ChoiceContext&)>;

  static Strategy foata() { return Strategy(Kind::foata, {}); }
  static Strategy minlex() { return Strategy(Kind::minlex, {}); }
  static Strategy custom(Chooser chooser) { return Strategy(Kind::custom, std::move(chooser)); }

  Kind kind() const { return kind_; }
  const Chooser& chooser() const { return chooser_; }

private:
  Strategy(Kind kind, Chooser chooser) : kind_(kind), chooser_(std::move(chooser)) {}

  Kind kind_;
  Chooser chooser_;
};

/// Rebuilds a step sequence whose projection family equals `set`, one step
/// per stage, or reports NotRealizable.  A sanity pass rejects families that
/// are structurally inconsistent (symbols outside the pair, joint marks on
/// the wrong pairs, per-pair symbol counts disagreeing with the occurrence
/// counts) before the stage loop runs.  If `stages` is non-null each stage's
/// analysis is appended to it.
ReconstructResult reconstruct(const ComtraceAlphabet& alphabet, const ProjectionSet& set,
                              const Strategy& strategy,
                              std::vector<ReconstructionStage>* stages = nullptr);

/// Greatest sequence equivalent to `sequence` (greedy-maximal steps).
StepSequence foata(const ComtraceAlphabet& alphabet, const StepSequence& sequence);

/// Least sequence equivalent to `sequence` (all steps indivisible).
StepSequence minlex(const ComtraceAlphabet& alphabet, const StepSequence& sequence);

}  // namespace ctk

#endif
