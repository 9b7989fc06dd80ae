#pragma once

#include <optional>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Clockwise cyclic order of neighbours around each vertex of a simple graph.
struct RotationSystem {
  std::vector<std::vector<VertexId>> order;
};

struct PlanarityResult {
  bool planar = false;
  /// Present when planar; describes simplify(g).
  std::optional<RotationSystem> witness;
};

/// Left-right planarity test. Loops and parallel edges are ignored. When the
/// graph is planar the returned rotation system has already been validated.
PlanarityResult is_planar(const MultiGraph& g);

/// Face count of the rotation system on simplify(g), or nothing when the
/// rotation is inconsistent with the graph (missing/extra/repeated neighbours).
std::optional<std::size_t> count_faces(const MultiGraph& g, const RotationSystem& rs);

/// Checks the rotation system against simplify(g) and Euler's formula
/// V - E + F = 2 per connected component.
bool validate_planar_embedding(const MultiGraph& g, const RotationSystem& rs);

/// True iff the suspension g * K1 is planar.
bool is_outerplanar(const MultiGraph& g);

/// Two vertices whose removal leaves a planar graph, with the embedding of
/// that remainder. `witness` is indexed by the vertex ids of
/// delete_vertices(g, {v, w}).
struct ApexPairCertificate {
  VertexId v = 0;
  VertexId w = 0;
  RotationSystem witness;
};

/// Lexicographically first pair (v < w) whose removal is planar.
std::optional<ApexPairCertificate> apex_pair_search(const MultiGraph& g);

/// Re-derives the remainder and checks the witness; does not search.
bool validate_apex_certificate(const MultiGraph& g, const ApexPairCertificate& cert);

/// Independent planarity oracle: true iff no subdivision of K5 or K3,3 is
/// found by exhaustive edge deletion, degree-2 smoothing and memoisation on
/// canonical forms. Throws std::length_error above `max_vertices`.
bool kuratowski_oracle(const MultiGraph& g, std::size_t max_vertices = 9);

}  // namespace minorforge
