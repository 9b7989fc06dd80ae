#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minorforge/canon.hpp"
#include "minorforge/graph.hpp"

namespace minorforge {

enum class FamilyOp { DeltaWye, WyeDelta };

std::string to_string(FamilyOp op);

struct FamilyOps {
  bool delta_wye = true;
  bool wye_delta = true;
};

/// How a member was first reached. `site` is a triangle (DeltaWye) or a single
/// vertex (WyeDelta) of the parent's representative.
struct Provenance {
  CanonicalCert parent;
  FamilyOp op = FamilyOp::DeltaWye;
  std::vector<VertexId> site;
};

struct FamilyMember {
  CanonicalCert cert;
  /// canonical_graph of the member.
  MultiGraph graph;
  /// Empty for generators.
  std::optional<Provenance> provenance;
};

struct FamilyClosure {
  /// Sorted by cert.
  std::vector<FamilyMember> members;

  std::size_t size() const { return members.size(); }
  std::size_t generator_count() const;
  const FamilyMember* find(const CanonicalCert& cert) const;
  const FamilyMember* find(const MultiGraph& g) const;
};

/// Breadth-first closure under the enabled operations, deduplicated by
/// canonical form. Wye-delta results are simplified.
FamilyClosure family_closure(std::span<const MultiGraph> generators, FamilyOps ops = {});

/// Applies the recorded operation to the parent representative.
MultiGraph replay(const FamilyClosure& family, const FamilyMember& member);

const FamilyClosure& heawood_family();
const FamilyClosure& petersen_family();

/// Heawood family members of minimum degree at least 4, in family order.
std::vector<MultiGraph> remaining_heawood();

}  // namespace minorforge
