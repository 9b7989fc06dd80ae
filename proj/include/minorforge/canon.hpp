#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Isomorphism-invariant certificate: vertex and edge counts followed by the
/// multiplicity matrix (upper triangle, diagonal = loops) under the canonical
/// vertex order.
struct CanonicalCert {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
  friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
};

struct CanonicalCertHash {
  std::size_t operator()(const CanonicalCert& c) const noexcept;
};

/// A permutation stored as image vector: vertex v maps to perm[v].
using Permutation = std::vector<VertexId>;

struct CanonicalLabeling {
  /// position[v] is v's index in the canonical order.
  Permutation position;
  CanonicalCert cert;
};

CanonicalLabeling canonical_labeling(const MultiGraph& g);
CanonicalCert canonical_form(const MultiGraph& g);

/// g relabelled into canonical order; isomorphic graphs give identical results.
MultiGraph canonical_graph(const MultiGraph& g);

/// When g and h are isomorphic, a bijection phi with multiplicity(u,v) in g
/// equal to multiplicity(phi[u], phi[v]) in h.
std::optional<Permutation> find_isomorphism(const MultiGraph& g, const MultiGraph& h);
bool are_isomorphic(const MultiGraph& g, const MultiGraph& h);

/// True iff perm maps g onto h preserving every multiplicity.
bool is_isomorphism(const MultiGraph& g, const MultiGraph& h, const Permutation& perm);

/// A generating set of the automorphism group (identity omitted).
std::vector<Permutation> automorphism_generators(const MultiGraph& g);

/// Every automorphism, including the identity. Throws std::length_error when
/// the group has more than `limit` elements.
std::vector<Permutation> all_automorphisms(const MultiGraph& g, std::size_t limit = 1'000'000);

/// Partition of edge ids into orbits under the automorphism group. Parallel
/// edges always share an orbit. Blocks are sorted by smallest member.
struct EdgeOrbitPartition {
  std::vector<std::vector<EdgeId>> blocks;
};
EdgeOrbitPartition edge_orbits(const MultiGraph& g);

/// Vertex orbits, blocks sorted by smallest member.
std::vector<std::vector<VertexId>> vertex_orbits(const MultiGraph& g);

}  // namespace minorforge
