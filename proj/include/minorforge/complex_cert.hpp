#pragma once

#include <compare>
#include <string>

#include "minorforge/canon.hpp"
#include "minorforge/complex.hpp"

namespace minorforge {

/// Isomorphism-invariant certificate of a 2-complex: the canonical form of its
/// incidence graph. Vertices, edges, edge ends, cells, and the vertex
/// occurrences and edge traversals of each cell walk become nodes (kinds told
/// apart by loop counts). Relabelling vertices and edges, flipping edge
/// orientations and rotating or reflecting walks leave it unchanged.
struct ComplexCert {
  CanonicalCert incidence;

  std::string hex() const { return incidence.hex(); }
  friend auto operator<=>(const ComplexCert&, const ComplexCert&) = default;
  friend bool operator==(const ComplexCert&, const ComplexCert&) = default;
};

/// The incidence graph the certificate is computed from.
MultiGraph incidence_graph(const TwoComplex& x);

/// Throws std::invalid_argument for an invalid complex.
ComplexCert complex_cert(const TwoComplex& x);

bool complexes_isomorphic(const TwoComplex& a, const TwoComplex& b);

}  // namespace minorforge
