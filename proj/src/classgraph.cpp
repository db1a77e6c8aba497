#include "classgraph.hpp"

#include <algorithm>

namespace ctk::detail {

bool ClassGraph::is_sink(int i, const std::vector<char>& alive) const {
  return std::none_of(out[i].begin(), out[i].end(), [&](int j) { return alive[j] != 0; });
}

ClassGraph build_class_graph(const ComtraceAlphabet& alphabet, const Step& step) {
  const auto members = step.members();
  const int n = static_cast<int>(members.size());

  // Mutual reachability in the sin digraph via transitive closure; the graphs
  // here are at most alphabet-sized, so the cubic closure is plenty.
  std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || alphabet.sin(members[i], members[j])) reach[i * n + j] = 1;
    }
  }
  for (int via = 0; via < n; ++via) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i * n + via]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[via * n + j]) reach[i * n + j] = 1;
      }
    }
  }

  std::vector<int> component(n, -1);
  std::vector<std::vector<ActionId>> groups;
  for (int i = 0; i < n; ++i) {
    if (component[i] >= 0) continue;
    component[i] = static_cast<int>(groups.size());
    groups.push_back({members[i]});
    for (int j = i + 1; j < n; ++j) {
      if (component[j] < 0 && reach[i * n + j] && reach[j * n + i]) {
        component[j] = component[i];
        groups[component[i]].push_back(members[j]);
      }
    }
  }

  ClassGraph graph;
  for (auto& group : groups) graph.classes.push_back(Step(std::move(group)));

  // Sort classes by step order while keeping track of where each one went.
  std::vector<int> perm(graph.classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return graph.classes[a] < graph.classes[b]; });
  std::vector<Step> sorted;
  std::vector<int> new_index(perm.size());
  for (std::size_t rank = 0; rank < perm.size(); ++rank) {
    sorted.push_back(graph.classes[perm[rank]]);
    new_index[perm[rank]] = static_cast<int>(rank);
  }
  graph.classes = std::move(sorted);

  graph.out.assign(graph.classes.size(), {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int ci = new_index[component[i]];
      int cj = new_index[component[j]];
      if (ci != cj && alphabet.sin(members[i], members[j])) {
        auto& edges = graph.out[ci];
        if (std::find(edges.begin(), edges.end(), cj) == edges.end()) edges.push_back(cj);
      }
    }
  }
  return graph;
}

}  // namespace ctk::detail
