#ifndef CTK_ENI_HPP
#define CTK_ENI_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctk/alphabet.hpp"
#include "ctk/stepseq.hpp"

namespace ctk::eni {

using PlaceId = std::int32_t;
using TransId = std::int32_t;

/// A marking as a sorted set of marked places.
using Marking = std::vector<PlaceId>;

struct NetDescription {
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  std::vector<std::pair<std::string, std::string>> flow;     // src -> dst
  std::vector<std::pair<std::string, std::string>> inhibit;  // place, transition
  std::vector<std::string> marking;
};

/// An elementary net with inhibitor arcs: places, transitions, a flow
/// relation, inhibitor arcs from places to transitions, and an initial
/// marking.  Steps of transitions (reusing the Step value type, with ids
/// meaning transitions in declaration order) fire simultaneously.
class Net {
public:
  static Net validate(const NetDescription& description);

  int place_count() const { return static_cast<int>(place_names_.size()); }
  int transition_count() const { return static_cast<int>(transition_names_.size()); }
  const std::vector<std::string>& place_names() const { return place_names_; }
  const std::vector<std::string>& transition_names() const { return transition_names_; }
  const std::string& place_name(PlaceId p) const;
  const std::string& transition_name(TransId t) const;
  PlaceId place(std::string_view name) const;      // throws unknown_node
  TransId transition(std::string_view name) const;  // throws unknown_node

  std::span<const PlaceId> preset(TransId t) const;   // input places
  std::span<const PlaceId> postset(TransId t) const;  // output places
  std::span<const PlaceId> inhset(TransId t) const;   // inhibitor places

  std::span<const TransId> place_preset(PlaceId p) const;   // producing transitions
  std::span<const TransId> place_postset(PlaceId p) const;  // consuming transitions

  const Marking& initial_marking() const { return initial_marking_; }

private:
  Net() = default;

  std::vector<std::string> place_names_;
  std::vector<std::string> transition_names_;
  std::vector<std::vector<PlaceId>> preset_, postset_, inhset_;
  std::vector<std::vector<TransId>> place_preset_, place_postset_;
  Marking initial_marking_;
};

/// Firing discipline for steps.  The permissive default demands disjoint
/// presets only; the strict variant also demands pairwise disjoint postsets.
struct FiringRule {
  bool disjoint_postsets = false;
};

/// A step S is enabled at M iff every preset place is marked, no postset
/// place is marked, no inhibitor place is marked, and the presets (and with
/// the strict rule, postsets) of its transitions are pairwise disjoint.
bool step_enabled(const Net& net, const Marking& marking, const Step& step,
                  FiringRule rule = {});

/// Successor marking (M minus presets) plus postsets; throws step_not_enabled.
Marking fire(const Net& net, const Marking& marking, const Step& step, FiringRule rule = {});

/// All steps enabled at the marking, sorted by step order.
std::vector<Step> enabled_steps(const Net& net, const Marking& marking, FiringRule rule = {},
                                std::size_t cap = kDefaultStepCap);

/// Every firing sequence of at most `max_steps` steps from the initial
/// marking (the empty sequence included), sorted by sequence order.  The cap
/// bounds the number of sequences.
std::vector<StepSequence> enumerate_executions(const Net& net, int max_steps,
                                               FiringRule rule = {},
                                               std::size_t cap = kDefaultStepCap);

/// The alphabet of the net's concurrency structure, over the transitions in
/// declaration order: two transitions are simultaneous when their
/// neighbourhoods do not interfere and neither inhibits what the other
/// consumes; a simultaneous pair serialises as "a before b" when a's output
/// does not feed or block b.  The derived relations recomputed from
/// (sim, ser) are cross-checked against their direct formulas.
ComtraceAlphabet derive_alphabet(const Net& net);

/// Text format, '#' comments:
///   places p1 p2 ...
///   transitions a b ...
///   flow p1 -> a        (one arc per line, one endpoint of each kind)
///   inhibit p2 a
///   marking p1 p6 p8
Net parse_net(std::string_view text);
std::string format_net(const Net& net);
std::string format_marking(const Net& net, const Marking& marking);

/// Steps / step sequences over the transition names.  Sequences here are
/// *not* validated against any simultaneity relation: firing legality is the
/// net's business, the algebra's cliques are not consulted.
StepSequence parse_transition_sequence(const Net& net, std::string_view text);
std::string format_transition_sequence(const Net& net, const StepSequence& sequence);

}  // namespace ctk::eni

#endif
