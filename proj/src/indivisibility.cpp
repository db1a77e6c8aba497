#include "ctk/indivisibility.hpp"

#include <algorithm>

#include "classgraph.hpp"

namespace ctk {

StepPartition step_equiv_classes(const ComtraceAlphabet& alphabet, const Step& step) {
  require_step(alphabet, step);
  return StepPartition{detail::build_class_graph(alphabet, step).classes};
}

bool is_indivisible(const ComtraceAlphabet& alphabet, const Step& step) {
  return step_equiv_classes(alphabet, step).classes.size() == 1;
}

std::vector<Step> indiv_alphabet(const ComtraceAlphabet& alphabet, std::size_t cap) {
  std::vector<Step> out;
  for (Step& step : enumerate_steps(alphabet, cap)) {
    if (is_indivisible(alphabet, step)) out.push_back(std::move(step));
  }
  return out;
}

bool indiv_independent(const ComtraceAlphabet& alphabet, const Step& a, const Step& b) {
  for (const Step* step : {&a, &b}) {
    if (!is_indivisible(alphabet, *step)) {
      fail(Errc::not_indivisible, "step " + format_step(alphabet, *step) + " is divisible");
    }
  }
  for (ActionId x : a) {
    for (ActionId y : b) {
      if (!alphabet.ind(x, y)) return false;
    }
  }
  return true;
}

namespace {

Step union_of(const Step& a, const Step& b) {
  std::vector<ActionId> members(a.begin(), a.end());
  members.insert(members.end(), b.begin(), b.end());
  return Step(std::move(members));
}

}  // namespace

std::pair<Step, Step> divide_step(const ComtraceAlphabet& alphabet, const Step& step) {
  require_step(alphabet, step);
  detail::ClassGraph graph = detail::build_class_graph(alphabet, step);
  if (graph.classes.size() == 1) {
    fail(Errc::already_indivisible, "step " + format_step(alphabet, step) + " has no division");
  }
  std::vector<char> alive(graph.classes.size(), 1);
  for (std::size_t i = 0; i < graph.classes.size(); ++i) {
    // Classes are sorted, so the first class without a sin edge into the rest
    // is the least eligible one.
    if (graph.is_sink(static_cast<int>(i), alive)) {
      Step rest;
      for (std::size_t j = 0; j < graph.classes.size(); ++j) {
        if (j == i) continue;
        rest = union_of(rest, graph.classes[j]);
      }
      return {graph.classes[i], rest};
    }
  }
  // Unreachable: a finite acyclic condensation always has a sink.
  fail(Errc::already_indivisible, "no eligible class in " + format_step(alphabet, step));
}

StepSequence minlex_step(const ComtraceAlphabet& alphabet, const Step& step) {
  require_step(alphabet, step);
  detail::ClassGraph graph = detail::build_class_graph(alphabet, step);
  std::vector<char> alive(graph.classes.size(), 1);
  StepSequence out;
  for (std::size_t emitted = 0; emitted < graph.classes.size(); ++emitted) {
    for (std::size_t i = 0; i < graph.classes.size(); ++i) {
      if (alive[i] && graph.is_sink(static_cast<int>(i), alive)) {
        out.push_back(graph.classes[i]);
        alive[i] = 0;
        break;
      }
    }
  }
  return out;
}

StepSequence split(const ComtraceAlphabet& alphabet, const StepSequence& sequence) {
  StepSequence out;
  for (const Step& step : sequence) out = concat(std::move(out), minlex_step(alphabet, step));
  return out;
}

}  // namespace ctk
