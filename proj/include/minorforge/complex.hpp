#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

using CellId = std::uint32_t;

/// One edge traversal; dir = +1 runs u -> v, dir = -1 runs v -> u.
struct Step {
  EdgeId edge = 0;
  std::int8_t dir = 1;

  friend bool operator==(const Step&, const Step&) = default;
};

/// An open walk from `start`. With no steps it is the single vertex `start`.
struct Path {
  VertexId start = 0;
  std::vector<Step> steps;

  friend bool operator==(const Path&, const Path&) = default;
};

/// A closed walk. No steps means the constant walk at `start`.
struct ClosedWalk {
  VertexId start = 0;
  std::vector<Step> steps;

  bool is_constant() const { return steps.empty(); }
  std::size_t length() const { return steps.size(); }
  friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
};

struct TwoCell {
  ClosedWalk boundary;
};

struct TwoComplex {
  MultiGraph skeleton;
  std::vector<TwoCell> cells;

  std::size_t num_cells() const { return cells.size(); }
};

/// Vertex visited after each step: result[i] is the end of step i-1,
/// result[0] = start and result.back() = end. Throws on a broken walk.
std::vector<VertexId> walk_vertices(const MultiGraph& g, VertexId start, std::span<const Step> steps);

/// Builds a walk through the given vertex sequence using the lowest-id edge
/// for each consecutive pair. A closed sequence may repeat its first vertex at
/// the end; a single vertex gives the constant walk.
ClosedWalk closed_walk(const MultiGraph& g, std::span<const VertexId> vertices);
ClosedWalk closed_walk(const MultiGraph& g, std::initializer_list<VertexId> vertices);
Path path_through(const MultiGraph& g, std::span<const VertexId> vertices);
Path path_through(const MultiGraph& g, std::initializer_list<VertexId> vertices);

ClosedWalk reversed(const MultiGraph& g, const ClosedWalk& w);
Path reversed(const MultiGraph& g, const Path& p);

/// Same closed walk up to rotation and reflection.
bool equivalent_walks(const MultiGraph& g, const ClosedWalk& a, const ClosedWalk& b);

/// A cycle traversed injectively: no repeated edge or vertex. Loops and
/// digons count.
bool is_regular(const MultiGraph& g, const ClosedWalk& w);

struct Violation {
  std::optional<CellId> cell;
  std::string message;
};

/// First problem found, or nothing when every cell walk is valid.
std::optional<Violation> validate(const TwoComplex& x);

/// V - E + F.
long euler_characteristic(const TwoComplex& x);

TwoComplex attach_cell(const TwoComplex& x, const ClosedWalk& w);
TwoComplex remove_cell(const TwoComplex& x, CellId c);
/// Drops every cell whose boundary is not regular.
TwoComplex regular_subcomplex(const TwoComplex& x);

/// Cell walks rotated and reflected to a normal form, cells sorted.
TwoComplex normalize_cells(const TwoComplex& x);

/// Every cell of `small` appears (up to rotation and reflection) in `big`,
/// with multiplicity, and every edge of `small` has a counterpart with the
/// same endpoints. Vertex ids are taken as equal.
bool is_subcomplex(const TwoComplex& small, const TwoComplex& big);

enum class FullVariant { Induced, Regular };

struct CycleCapExceeded : std::length_error {
  std::size_t cap;
  CycleCapExceeded(std::size_t cap, const std::string& what) : std::length_error(what), cap(cap) {}
};

/// 100000 unless MINORFORGE_CYCLE_CAP is set.
std::size_t default_cycle_cap();

/// One regular cell per cycle (Regular) or per chordless cycle (Induced).
/// Regular accepts multigraphs: loops and parallel pairs give 1- and 2-cycles.
/// Induced requires a simple graph.
TwoComplex full_complex(const MultiGraph& g, FullVariant variant, std::optional<std::size_t> cap = {});

/// Replaces c1 and c2 by one cell running around both, glued along gamma,
/// which must lie on both boundaries. The new cell takes the lower id and the
/// higher id is removed. gamma longer than one edge needs allow_long.
TwoComplex join_cells(const TwoComplex& x, CellId c1, CellId c2, const Path& gamma, bool allow_long = false);

TwoComplex clone_cell(const TwoComplex& x, CellId c);

/// Replaces the subpath gamma1 of c's boundary by gamma2, which must have the
/// same ends (either orientation). gamma1 longer than one edge needs allow_long.
TwoComplex reroute_cell(const TwoComplex& x, CellId c, const Path& gamma1, const Path& gamma2,
                        bool allow_long = false);

enum class CollapseMove { Both, FirstOnly, SecondOnly };

/// Splits a regular boundary into gamma1 = steps[offset, offset + first_length)
/// (cyclically) and gamma2 = the remaining steps reversed, both running from the
/// vertex at `offset` to the same end. `moves` walks along both paths: Both
/// identifies the next edges of the two paths, FirstOnly/SecondOnly squeeze
/// the next edge of one path to the current vertex of the other. When empty,
/// paths are matched edge by edge and the longer path's tail is squeezed.
struct CollapseSplit {
  std::size_t offset = 0;
  std::size_t first_length = 1;
  std::vector<CollapseMove> moves;
};

TwoComplex collapse_cell(const TwoComplex& x, CellId c, const CollapseSplit& split);

struct CylinderRung {
  VertexId v0 = 0;
  VertexId v1 = 0;
  EdgeId rung = 0;
};
struct CylinderSquare {
  EdgeId e0 = 0;
  EdgeId e1 = 0;
  CellId cell = 0;
};
/// H x [0,1] inside x: one rung per vertex of H, one square cell per edge of H
/// bounded by e0, e1 and the rungs at their ends.
struct Cylinder {
  std::vector<CylinderRung> rungs;
  std::vector<CylinderSquare> squares;
};

/// Contracts the rungs, removes the squares and identifies each e1 with e0.
TwoComplex collapse_cylinder(const TwoComplex& x, const Cylinder& cyl);

struct EdgeCloneResult {
  TwoComplex complex;
  EdgeId clone;
};
/// Adds e' parallel to e, a digon cell on e and e', and for every cell using e
/// a copy in which every traversal of e runs along e' instead.
EdgeCloneResult clone_edge_complex(const TwoComplex& x, EdgeId e);

/// Identifies parallel edges e1 and e2 (e2 disappears) and rewrites walks.
TwoComplex merge_parallel_edges(const TwoComplex& x, EdgeId e1, EdgeId e2);

struct StellifyResult {
  TwoComplex complex;
  VertexId hub;
  /// Some cell was bounded exactly by the cycle.
  bool had_cell_on_cycle = false;
};
/// Removes the cycle's edges, adds a hub with one spoke per cycle vertex (in
/// cycle order, oriented towards the hub) and reroutes every traversal of a
/// cycle edge through the hub. With on_graph_only all cells are dropped.
StellifyResult stellify(const TwoComplex& x, const ClosedWalk& cycle, bool on_graph_only = false);

/// Contracts the non-loop edge e in skeleton and walks. The merged vertex takes
/// the smaller id.
TwoComplex contract_edge_complex(const TwoComplex& x, EdgeId e);

/// Complete graph on n vertices with one cell per triangle.
TwoComplex complete_complex(std::size_t n);
/// complete_complex(7) without the cell on vertices 0, 1, 2.
TwoComplex k7_minus_delta();
/// Two K7 copies (vertices 0-6 and 7-13), each with all triangle cells except
/// 3-4-5 (resp. 10-11-12), an edge 5-12 and one long cell of 16 steps.
TwoComplex fkt_complex();
/// The long cell of fkt_complex as a vertex sequence.
std::vector<VertexId> fkt_long_cell_vertices();

}  // namespace minorforge
