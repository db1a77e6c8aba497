#ifndef CTK_SRC_CLASSGRAPH_HPP
#define CTK_SRC_CLASSGRAPH_HPP

// Internal: strongly connected components of sin restricted to a step, plus
// the condensation edges.  Shared by the indivisibility operations and the
// reconstruction procedure.

#include <vector>

#include "ctk/stepseq.hpp"

namespace ctk::detail {

struct ClassGraph {
  std::vector<Step> classes;          // sorted by step order
  std::vector<std::vector<int>> out;  // condensation: edge i -> j iff some
                                      // (x, y) in sin with x in classes[i],
                                      // y in classes[j], i != j
  /// True iff classes[i] can be serialised before the union of the other
  /// classes listed in `alive`, i.e. it has no outgoing edge into `alive`.
  bool is_sink(int i, const std::vector<char>& alive) const;
};

ClassGraph build_class_graph(const ComtraceAlphabet& alphabet, const Step& step);

}  // namespace ctk::detail

#endif
