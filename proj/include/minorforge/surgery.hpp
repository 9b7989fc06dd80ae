#pragma once

#include <array>
#include <span>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Removes edge e; vertices are unchanged and later edge ids shift down by one.
MultiGraph delete_edge(const MultiGraph& g, EdgeId e);

/// Identifies the endpoints of e and removes e. The merged vertex takes the
/// smaller id; the larger id is removed and ids above it shift down.
/// With simplify set, loops are removed and parallel classes merged.
MultiGraph contract_edge(const MultiGraph& g, EdgeId e, bool simplify = true);

/// Loop-free graph with at most one edge per vertex pair. Surviving edges are
/// ordered by their first occurrence.
MultiGraph simplify(const MultiGraph& g);

struct EdgeClone {
  MultiGraph graph;
  EdgeId clone;
};
/// Adds one edge parallel to e (same ends, same orientation).
EdgeClone clone_edge_graph(const MultiGraph& g, EdgeId e);

struct Subdivision {
  MultiGraph graph;
  VertexId middle;
};
/// Replaces e by a fresh vertex joined to both of its ends. The new edges are
/// appended in the order (u, middle), (middle, v).
Subdivision subdivide_edge(const MultiGraph& g, EdgeId e);

using Triangle = std::array<VertexId, 3>;

struct DeltaWye {
  MultiGraph graph;
  VertexId hub;
};
/// Removes one edge per pair of the triangle (lowest id) and joins a new hub
/// vertex to all three corners.
DeltaWye delta_to_y(const MultiGraph& g, const Triangle& t);

/// Removes the loopless degree-3 vertex v and joins its neighbours pairwise.
/// Vertex ids above v shift down by one.
MultiGraph y_to_delta(const MultiGraph& g, VertexId v, bool simplify = true);

/// Disjoint union plus all edges between the two parts. Vertices of h follow
/// those of g.
MultiGraph graph_join(const MultiGraph& g, const MultiGraph& h);

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h);

/// Glues g2 onto g1 by identifying clique2[i] with clique1[i]; edges of the
/// shared clique are kept once. Vertices of g2 outside the clique are appended.
MultiGraph clique_sum(const MultiGraph& g1, const MultiGraph& g2,
                      std::span<const VertexId> clique1, std::span<const VertexId> clique2);

/// Subgraph induced on the given vertices, relabelled in the given order.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices);

/// Open neighbourhood of x as an induced subgraph (x excluded).
MultiGraph neighborhood(const MultiGraph& g, VertexId x);

/// Deletes the given vertices with their incident edges; ids are compacted.
MultiGraph delete_vertices(const MultiGraph& g, std::span<const VertexId> vertices);

/// Applies a vertex permutation: vertex v becomes perm[v]. Edge order is kept.
MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm);

/// All vertex triples {a<b<c} that are pairwise adjacent.
std::vector<Triangle> triangles(const MultiGraph& g);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

}  // namespace minorforge
