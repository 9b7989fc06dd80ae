#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minorforge {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// An undirected edge. Equal ends denote a loop. The edge id is its position
/// in MultiGraph::edges().
struct EdgeRec {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool joins(VertexId a, VertexId b) const {
    return (u == a && v == b) || (u == b && v == a);
  }
  friend bool operator==(const EdgeRec&, const EdgeRec&) = default;
};

/// Finite multigraph with loops and parallel edges.
///
/// Vertices are 0..num_vertices()-1 and edges are identified by position.
/// Identity is positional: operations that remove vertices or edges compact
/// the remaining ids while preserving relative order.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n) : n_(n) {}
  MultiGraph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges);
  MultiGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return n_ == 0; }

  const EdgeRec& edge(EdgeId e) const;
  std::span<const EdgeRec> edges() const { return edges_; }
  bool has_vertex(VertexId v) const { return v < n_; }
  bool has_edge(EdgeId e) const { return e < edges_.size(); }

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);

  /// Loops contribute two to the degree.
  std::size_t degree(VertexId v) const;
  std::vector<std::size_t> degrees() const;
  std::size_t min_degree() const;
  std::size_t loop_count(VertexId v) const;
  std::size_t multiplicity(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return multiplicity(a, b) > 0; }

  /// Distinct neighbours other than v itself, sorted.
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<EdgeId> incident_edges(VertexId v) const;
  /// Edge ids joining a and b, ascending.
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const;

  bool is_simple() const;
  bool has_loops() const;

  /// Symmetric multiplicity matrix; the diagonal holds loop counts.
  std::vector<std::vector<std::uint32_t>> multiplicity_matrix() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<EdgeRec> edges_;
};

std::string to_string(const MultiGraph& g);

// Named graphs used throughout.
MultiGraph complete_graph(std::size_t n);
/// Complete multipartite graph, e.g. {3,3,1,1} for K_{3,3,1,1}.
MultiGraph complete_multipartite(std::span<const std::size_t> parts);
MultiGraph complete_multipartite(std::initializer_list<std::size_t> parts);
MultiGraph cycle_graph(std::size_t n);
MultiGraph path_graph(std::size_t n);
MultiGraph empty_graph(std::size_t n);
MultiGraph petersen_graph();
MultiGraph heawood_graph();

}  // namespace minorforge
