#include "minorforge/families.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "minorforge/surgery.hpp"

namespace minorforge {

std::string to_string(FamilyOp op) { return op == FamilyOp::DeltaWye ? "delta-wye" : "wye-delta"; }

std::size_t FamilyClosure::generator_count() const {
  return static_cast<std::size_t>(
      std::count_if(members.begin(), members.end(), [](const auto& m) { return !m.provenance; }));
}

const FamilyMember* FamilyClosure::find(const CanonicalCert& cert) const {
  auto it = std::lower_bound(members.begin(), members.end(), cert,
                             [](const FamilyMember& m, const CanonicalCert& c) { return m.cert < c; });
  return it != members.end() && it->cert == cert ? &*it : nullptr;
}

const FamilyMember* FamilyClosure::find(const MultiGraph& g) const { return find(canonical_form(g)); }

namespace {

MultiGraph apply(const MultiGraph& g, FamilyOp op, const std::vector<VertexId>& site) {
  if (op == FamilyOp::DeltaWye) return delta_to_y(g, {site.at(0), site.at(1), site.at(2)}).graph;
  return y_to_delta(g, site.at(0), true);
}

}  // namespace

FamilyClosure family_closure(std::span<const MultiGraph> generators, FamilyOps ops) {
  std::unordered_map<CanonicalCert, FamilyMember, CanonicalCertHash> seen;
  std::deque<CanonicalCert> frontier;

  auto offer = [&](const MultiGraph& g, std::optional<Provenance> from) {
    auto cert = canonical_form(g);
    if (seen.count(cert)) return;
    frontier.push_back(cert);
    seen.emplace(cert, FamilyMember{cert, canonical_graph(g), std::move(from)});
  };

  for (const auto& g : generators) {
    if (!g.is_simple()) throw std::invalid_argument("family generators must be simple");
    offer(g, std::nullopt);
  }

  while (!frontier.empty()) {
    CanonicalCert cert = std::move(frontier.front());
    frontier.pop_front();
    const MultiGraph g = seen.at(cert).graph;
    if (ops.delta_wye) {
      for (const auto& t : triangles(g)) {
        std::vector<VertexId> site(t.begin(), t.end());
        offer(apply(g, FamilyOp::DeltaWye, site), Provenance{cert, FamilyOp::DeltaWye, site});
      }
    }
    if (ops.wye_delta) {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 3 || g.loop_count(v) != 0) continue;
        std::vector<VertexId> site{v};
        offer(apply(g, FamilyOp::WyeDelta, site), Provenance{cert, FamilyOp::WyeDelta, site});
      }
    }
  }

  FamilyClosure out;
  out.members.reserve(seen.size());
  for (auto& [c, m] : seen) out.members.push_back(std::move(m));
  std::sort(out.members.begin(), out.members.end(),
            [](const FamilyMember& a, const FamilyMember& b) { return a.cert < b.cert; });
  return out;
}

MultiGraph replay(const FamilyClosure& family, const FamilyMember& member) {
  if (!member.provenance) return member.graph;
  const auto* parent = family.find(member.provenance->parent);
  if (!parent) throw std::invalid_argument("provenance parent is not a family member");
  return apply(parent->graph, member.provenance->op, member.provenance->site);
}

const FamilyClosure& heawood_family() {
  static const FamilyClosure family = [] {
    MultiGraph gens[] = {complete_graph(7), complete_multipartite({3, 3, 1, 1})};
    return family_closure(gens);
  }();
  return family;
}

const FamilyClosure& petersen_family() {
  static const FamilyClosure family = [] {
    MultiGraph gens[] = {complete_graph(6)};
    return family_closure(gens);
  }();
  return family;
}

std::vector<MultiGraph> remaining_heawood() {
  std::vector<MultiGraph> out;
  for (const auto& m : heawood_family().members) {
    if (m.graph.min_degree() >= 4) out.push_back(m.graph);
  }
  return out;
}

}  // namespace minorforge
