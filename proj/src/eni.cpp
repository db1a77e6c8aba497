#include "ctk/eni.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "textio.hpp"

namespace ctk::eni {

namespace {

void sort_unique(std::vector<std::int32_t>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

}  // namespace

Net Net::validate(const NetDescription& description) {
  Net net;
  enum class Kind { place, transition };
  std::map<std::string, std::pair<Kind, std::int32_t>> index;
  auto declare = [&](const std::string& name, Kind kind, std::int32_t id) {
    if (!is_valid_action_name(name)) {
      fail(Errc::parse_error, "invalid node name '" + name + "'");
    }
    if (!index.emplace(name, std::make_pair(kind, id)).second) {
      fail(Errc::duplicate_node, "node '" + name + "' declared twice");
    }
  };
  for (const std::string& name : description.places) {
    declare(name, Kind::place, static_cast<std::int32_t>(net.place_names_.size()));
    net.place_names_.push_back(name);
  }
  for (const std::string& name : description.transitions) {
    declare(name, Kind::transition, static_cast<std::int32_t>(net.transition_names_.size()));
    net.transition_names_.push_back(name);
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) fail(Errc::unknown_node, "node '" + name + "'");
    return it->second;
  };

  net.preset_.resize(net.transition_names_.size());
  net.postset_.resize(net.transition_names_.size());
  net.inhset_.resize(net.transition_names_.size());
  net.place_preset_.resize(net.place_names_.size());
  net.place_postset_.resize(net.place_names_.size());
  for (const auto& [src, dst] : description.flow) {
    auto [src_kind, src_id] = lookup(src);
    auto [dst_kind, dst_id] = lookup(dst);
    if (src_kind == dst_kind) {
      fail(Errc::parse_error,
           "flow arc " + src + " -> " + dst + " must connect a place and a transition");
    }
    if (src_kind == Kind::place) {
      net.preset_[dst_id].push_back(src_id);
      net.place_postset_[src_id].push_back(dst_id);
    } else {
      net.postset_[src_id].push_back(dst_id);
      net.place_preset_[dst_id].push_back(src_id);
    }
  }
  for (const auto& [place, transition] : description.inhibit) {
    auto [place_kind, place_id] = lookup(place);
    auto [trans_kind, trans_id] = lookup(transition);
    if (place_kind != Kind::place || trans_kind != Kind::transition) {
      fail(Errc::parse_error,
           "inhibitor arc " + place + " -o " + transition + " must point from a place to a "
           "transition");
    }
    net.inhset_[trans_id].push_back(place_id);
  }
  for (auto* family : {&net.preset_, &net.postset_, &net.inhset_}) {
    for (auto& ids : *family) sort_unique(ids);
  }
  for (auto* family : {&net.place_preset_, &net.place_postset_}) {
    for (auto& ids : *family) sort_unique(ids);
  }
  for (const std::string& name : description.marking) {
    auto [kind, id] = lookup(name);
    if (kind != Kind::place) {
      fail(Errc::parse_error, "marking mentions transition '" + name + "'");
    }
    net.initial_marking_.push_back(id);
  }
  sort_unique(net.initial_marking_);
  return net;
}

const std::string& Net::place_name(PlaceId p) const {
  if (p < 0 || p >= place_count()) fail(Errc::unknown_node, "place id out of range");
  return place_names_[p];
}

const std::string& Net::transition_name(TransId t) const {
  if (t < 0 || t >= transition_count()) fail(Errc::unknown_node, "transition id out of range");
  return transition_names_[t];
}

PlaceId Net::place(std::string_view name) const {
  auto it = std::find(place_names_.begin(), place_names_.end(), name);
  if (it == place_names_.end()) fail(Errc::unknown_node, "place '" + std::string(name) + "'");
  return static_cast<PlaceId>(it - place_names_.begin());
}

TransId Net::transition(std::string_view name) const {
  auto it = std::find(transition_names_.begin(), transition_names_.end(), name);
  if (it == transition_names_.end()) {
    fail(Errc::unknown_node, "transition '" + std::string(name) + "'");
  }
  return static_cast<TransId>(it - transition_names_.begin());
}

std::span<const PlaceId> Net::preset(TransId t) const {
  transition_name(t);
  return preset_[t];
}

std::span<const PlaceId> Net::postset(TransId t) const {
  transition_name(t);
  return postset_[t];
}

std::span<const PlaceId> Net::inhset(TransId t) const {
  transition_name(t);
  return inhset_[t];
}

std::span<const TransId> Net::place_preset(PlaceId p) const {
  place_name(p);
  return place_preset_[p];
}

std::span<const TransId> Net::place_postset(PlaceId p) const {
  place_name(p);
  return place_postset_[p];
}

namespace {

std::vector<char> marking_mask(const Net& net, const Marking& marking) {
  std::vector<char> mask(static_cast<std::size_t>(net.place_count()), 0);
  for (PlaceId p : marking) {
    net.place_name(p);
    mask[p] = 1;
  }
  return mask;
}

bool transition_fireable(const Net& net, const std::vector<char>& mask, TransId t) {
  for (PlaceId p : net.preset(t)) {
    if (!mask[p]) return false;
  }
  for (PlaceId p : net.postset(t)) {
    if (mask[p]) return false;
  }
  for (PlaceId p : net.inhset(t)) {
    if (mask[p]) return false;
  }
  return true;
}

bool spans_disjoint(std::span<const PlaceId> lhs, std::span<const PlaceId> rhs) {
  auto l = lhs.begin();
  auto r = rhs.begin();
  while (l != lhs.end() && r != rhs.end()) {
    if (*l < *r) {
      ++l;
    } else if (*r < *l) {
      ++r;
    } else {
      return false;
    }
  }
  return true;
}

bool pair_compatible(const Net& net, TransId a, TransId b, FiringRule rule) {
  if (!spans_disjoint(net.preset(a), net.preset(b))) return false;
  if (rule.disjoint_postsets && !spans_disjoint(net.postset(a), net.postset(b))) return false;
  return true;
}

}  // namespace

bool step_enabled(const Net& net, const Marking& marking, const Step& step, FiringRule rule) {
  if (step.empty()) return false;
  std::vector<char> mask = marking_mask(net, marking);
  const auto members = step.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!transition_fireable(net, mask, members[i])) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!pair_compatible(net, members[i], members[j], rule)) return false;
    }
  }
  return true;
}

Marking fire(const Net& net, const Marking& marking, const Step& step, FiringRule rule) {
  if (!step_enabled(net, marking, step, rule)) {
    fail(Errc::step_not_enabled,
         "step " + format_transition_sequence(net, {step}) + " is not enabled at " +
             format_marking(net, marking));
  }
  std::vector<char> mask = marking_mask(net, marking);
  for (TransId t : step) {
    for (PlaceId p : net.preset(t)) mask[p] = 0;
  }
  for (TransId t : step) {
    for (PlaceId p : net.postset(t)) mask[p] = 1;
  }
  Marking result;
  for (PlaceId p = 0; p < net.place_count(); ++p) {
    if (mask[p]) result.push_back(p);
  }
  return result;
}

namespace {

void extend_compatible(const Net& net, const std::vector<TransId>& fireable,
                       std::vector<TransId>& clique, std::size_t next, FiringRule rule,
                       std::size_t cap, std::vector<Step>& out) {
  for (std::size_t i = next; i < fireable.size(); ++i) {
    const TransId t = fireable[i];
    bool compatible = std::all_of(clique.begin(), clique.end(),
                                  [&](TransId u) { return pair_compatible(net, u, t, rule); });
    if (!compatible) continue;
    clique.push_back(t);
    if (out.size() >= cap) {
      fail(Errc::cap_exceeded, "more than " + std::to_string(cap) + " enabled steps");
    }
    out.push_back(Step(std::vector<ActionId>(clique.begin(), clique.end())));
    extend_compatible(net, fireable, clique, i + 1, rule, cap, out);
    clique.pop_back();
  }
}

}  // namespace

std::vector<Step> enabled_steps(const Net& net, const Marking& marking, FiringRule rule,
                                std::size_t cap) {
  std::vector<char> mask = marking_mask(net, marking);
  std::vector<TransId> fireable;
  for (TransId t = 0; t < net.transition_count(); ++t) {
    if (transition_fireable(net, mask, t)) fireable.push_back(t);
  }
  std::vector<Step> out;
  std::vector<TransId> clique;
  extend_compatible(net, fireable, clique, 0, rule, cap, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct ExecutionEnumerator {
  const Net& net;
  FiringRule rule;
  std::size_t cap;
  std::size_t produced = 0;
  std::map<std::pair<Marking, int>, std::vector<StepSequence>> memo;

  const std::vector<StepSequence>& run(const Marking& marking, int depth) {
    auto key = std::make_pair(marking, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<StepSequence> result{StepSequence{}};
    if (depth > 0) {
      for (const Step& step : enabled_steps(net, marking, rule, cap)) {
        Marking next = fire(net, marking, step, rule);
        for (const StepSequence& suffix : run(next, depth - 1)) {
          StepSequence sequence{step};
          sequence.insert(sequence.end(), suffix.begin(), suffix.end());
          result.push_back(std::move(sequence));
        }
      }
    }
    produced += result.size();
    if (produced > cap) {
      fail(Errc::cap_exceeded, "more than " + std::to_string(cap) + " executions");
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
  }
};

}  // namespace

std::vector<StepSequence> enumerate_executions(const Net& net, int max_steps, FiringRule rule,
                                               std::size_t cap) {
  if (max_steps < 0) throw std::invalid_argument("max_steps must be nonnegative");
  ExecutionEnumerator enumerator{net, rule, cap, 0, {}};
  std::vector<StepSequence> out = enumerator.run(net.initial_marking(), max_steps);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool intersects(std::span<const PlaceId> lhs, std::span<const PlaceId> rhs) {
  return !spans_disjoint(lhs, rhs);
}

std::vector<PlaceId> neighbourhood(const Net& net, TransId t) {
  std::vector<PlaceId> out(net.preset(t).begin(), net.preset(t).end());
  out.insert(out.end(), net.postset(t).begin(), net.postset(t).end());
  sort_unique(out);
  return out;
}

}  // namespace

ComtraceAlphabet derive_alphabet(const Net& net) {
  const int n = net.transition_count();
  AlphabetDescription description;
  description.actions = net.transition_names();
  BitRelation direct_sim(n), direct_ser(n);
  for (TransId a = 0; a < n; ++a) {
    for (TransId b = 0; b < n; ++b) {
      if (a == b) continue;
      const bool neighbourhoods_apart = spans_disjoint(neighbourhood(net, a),
                                                       neighbourhood(net, b));
      const bool no_inhibited_input = spans_disjoint(net.inhset(a), net.preset(b)) &&
                                      spans_disjoint(net.inhset(b), net.preset(a));
      if (neighbourhoods_apart && no_inhibited_input) {
        direct_sim.insert(a, b);
        if (spans_disjoint(net.postset(a), net.preset(b)) &&
            spans_disjoint(net.postset(a), net.inhset(b))) {
          direct_ser.insert(a, b);
        }
      }
    }
  }
  for (TransId a = 0; a < n; ++a) {
    for (TransId b = a + 1; b < n; ++b) {
      if (direct_sim.contains(a, b)) {
        description.sim.emplace_back(net.transition_name(a), net.transition_name(b));
      }
    }
  }
  for (auto [a, b] : direct_ser.pairs()) {
    description.ser.emplace_back(net.transition_name(a), net.transition_name(b));
  }
  ComtraceAlphabet alphabet = ComtraceAlphabet::validate(description);

  // The five derived relations admit direct formulas on the net; recompute
  // them and insist they agree with what (sim, ser) induces.
  const DerivedRelations& derived = alphabet.relations();
  for (TransId a = 0; a < n; ++a) {
    for (TransId b = 0; b < n; ++b) {
      bool dep, ind, ssm, wdp;
      if (a == b) {
        dep = true;
        ind = ssm = wdp = false;
      } else {
        dep = !direct_sim.contains(a, b);
        const bool a_blocks_b = intersects(net.postset(a), net.inhset(b));
        const bool b_blocks_a = intersects(net.postset(b), net.inhset(a));
        ind = !dep && !a_blocks_b && !b_blocks_a;
        ssm = !dep && a_blocks_b && b_blocks_a;
        wdp = !dep && a_blocks_b && !b_blocks_a;
      }
      if (derived.dep.contains(a, b) != dep || derived.ind.contains(a, b) != ind ||
          derived.ssm.contains(a, b) != ssm || derived.wdp.contains(a, b) != wdp) {
        throw std::logic_error("derived relations disagree with their direct net formulas");
      }
    }
  }
  return alphabet;
}

Net parse_net(std::string_view text) {
  NetDescription description;
  for (const detail::Line& line : detail::tokenize_lines(text)) {
    const std::string& keyword = line.tokens.front();
    if (keyword == "places") {
      description.places.insert(description.places.end(), line.tokens.begin() + 1,
                                line.tokens.end());
    } else if (keyword == "transitions") {
      description.transitions.insert(description.transitions.end(), line.tokens.begin() + 1,
                                     line.tokens.end());
    } else if (keyword == "flow") {
      if (line.tokens.size() != 4 || line.tokens[2] != "->") {
        fail(Errc::parse_error, detail::where(line) + ": expected 'flow <src> -> <dst>'");
      }
      description.flow.emplace_back(line.tokens[1], line.tokens[3]);
    } else if (keyword == "inhibit") {
      if (line.tokens.size() != 3) {
        fail(Errc::parse_error,
             detail::where(line) + ": expected 'inhibit <place> <transition>'");
      }
      description.inhibit.emplace_back(line.tokens[1], line.tokens[2]);
    } else if (keyword == "marking") {
      description.marking.insert(description.marking.end(), line.tokens.begin() + 1,
                                 line.tokens.end());
    } else {
      fail(Errc::parse_error, detail::where(line) + ": unknown keyword '" + keyword + "'");
    }
  }
  return Net::validate(description);
}

std::string format_net(const Net& net) {
  std::string out = "places";
  for (const std::string& name : net.place_names()) out += ' ' + name;
  out += "\ntransitions";
  for (const std::string& name : net.transition_names()) out += ' ' + name;
  out += '\n';
  for (TransId t = 0; t < net.transition_count(); ++t) {
    for (PlaceId p : net.preset(t)) {
      out += "flow " + net.place_name(p) + " -> " + net.transition_name(t) + '\n';
    }
    for (PlaceId p : net.postset(t)) {
      out += "flow " + net.transition_name(t) + " -> " + net.place_name(p) + '\n';
    }
    for (PlaceId p : net.inhset(t)) {
      out += "inhibit " + net.place_name(p) + ' ' + net.transition_name(t) + '\n';
    }
  }
  out += "marking";
  for (PlaceId p : net.initial_marking()) out += ' ' + net.place_name(p);
  out += '\n';
  return out;
}

std::string format_marking(const Net& net, const Marking& marking) {
  std::string out = "{";
  bool first = true;
  for (PlaceId p : marking) {
    if (!first) out += ", ";
    out += net.place_name(p);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

ComtraceAlphabet transition_universe(const Net& net) {
  // A permissive alphabet over the transitions: every set is a step, so the
  // literal grammar can be reused without imposing the algebra's cliques.
  AlphabetDescription description;
  description.actions = net.transition_names();
  for (TransId a = 0; a < net.transition_count(); ++a) {
    for (TransId b = a + 1; b < net.transition_count(); ++b) {
      description.sim.emplace_back(net.transition_name(a), net.transition_name(b));
    }
  }
  return ComtraceAlphabet::validate(description);
}

}  // namespace

StepSequence parse_transition_sequence(const Net& net, std::string_view text) {
  try {
    return parse_stepseq(transition_universe(net), text);
  } catch (const Error& error) {
    if (error.code() == Errc::unknown_action) {
      std::string what = error.what();
      if (std::size_t colon = what.find(": "); colon != std::string::npos) {
        what = what.substr(colon + 2);
      }
      fail(Errc::unknown_node, what);
    }
    throw;
  }
}

std::string format_transition_sequence(const Net& net, const StepSequence& sequence) {
  return format_stepseq(transition_universe(net), sequence);
}

}  // namespace ctk::eni
