#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minorforge/canon.hpp"
#include "minorforge/graph.hpp"

namespace minorforge {

enum class MinorKind { Delete, Contract };

struct MinorStep {
  MinorKind kind = MinorKind::Delete;
  EdgeId edge = 0;
  CanonicalCert result;
  /// The minor itself (contractions simplified).
  MultiGraph graph;
};

/// Pairwise non-isomorphic g - e and g / e, deletions first, each class
/// represented by its lowest edge.
std::vector<MinorStep> one_step_minors(const MultiGraph& g);

/// True iff simplify(h) is a minor of g.
bool has_minor(const MultiGraph& g, const MultiGraph& h);

/// Index of the first graph in hs found as a minor of g. All hs share one
/// search over the contractions of g.
std::optional<std::size_t> find_any_minor(const MultiGraph& g, std::span<const MultiGraph> hs);

/// No minor in the Petersen family.
bool is_linkless(const MultiGraph& g);

struct LocalLinklessness {
  bool locally_linkless = true;
  std::optional<VertexId> failing_vertex;
};
LocalLinklessness is_locally_linkless(const MultiGraph& g);

/// Every vertex whose neighbourhood is not linkless.
std::vector<VertexId> non_linkless_neighbourhoods(const MultiGraph& g);

struct CycleDecomposition {
  /// Each part is a chordless cycle given as sorted edge ids.
  std::vector<std::vector<EdgeId>> parts;
};

/// Splits the cycle along its lowest-id chord until every part is chordless.
/// Throws std::invalid_argument unless `cycle` is the edge set of a cycle in
/// the simple graph g.
CycleDecomposition decompose_cycle_induced(const MultiGraph& g, std::span<const EdgeId> cycle);

}  // namespace minorforge
