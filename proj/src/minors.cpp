#include "minorforge/minors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "minorforge/families.hpp"
#include "minorforge/planarity.hpp"
#include "minorforge/surgery.hpp"

namespace minorforge {

std::vector<MinorStep> one_step_minors(const MultiGraph& g) {
  std::vector<MinorStep> out;
  std::unordered_set<CanonicalCert, CanonicalCertHash> seen;
  auto offer = [&](MinorKind kind, EdgeId e, MultiGraph m) {
    auto cert = canonical_form(m);
    if (!seen.insert(cert).second) return;
    out.push_back({kind, e, std::move(cert), std::move(m)});
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) offer(MinorKind::Delete, e, delete_edge(g, e));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) continue;
    offer(MinorKind::Contract, e, contract_edge(g, e, true));
  }
  return out;
}

namespace {

// Dense adjacency for the subgraph matcher.
struct Adjacency {
  std::size_t n = 0;
  std::vector<char> bits;
  std::vector<std::size_t> deg;

  explicit Adjacency(const MultiGraph& g) : n(g.num_vertices()), bits(n * n, 0), deg(n, 0) {
    for (const auto& e : g.edges()) {
      if (e.is_loop() || bits[e.u * n + e.v]) continue;
      bits[e.u * n + e.v] = bits[e.v * n + e.u] = 1;
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  bool adj(std::size_t a, std::size_t b) const { return bits[a * n + b]; }
};

// Whether simple h is isomorphic to a (not necessarily induced) subgraph of g.
bool subgraph_embeds(const Adjacency& h, const Adjacency& g) {
  if (h.n > g.n) return false;
  if (h.n == 0) return true;

  // Order h so each vertex has as many earlier neighbours as possible.
  std::vector<std::size_t> order;
  std::vector<char> placed(h.n, 0);
  std::vector<std::size_t> back(h.n, 0);
  for (std::size_t k = 0; k < h.n; ++k) {
    std::size_t best = h.n;
    for (std::size_t v = 0; v < h.n; ++v) {
      if (placed[v]) continue;
      if (best == h.n || back[v] > back[best] || (back[v] == back[best] && h.deg[v] > h.deg[best])) best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (std::size_t w = 0; w < h.n; ++w) {
      if (h.adj(best, w)) ++back[w];
    }
  }

  std::vector<std::size_t> image(h.n, g.n);
  std::vector<char> used(g.n, 0);
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    const std::size_t v = order[k];
    for (std::size_t x = 0; x < g.n; ++x) {
      if (used[x] || g.deg[x] < h.deg[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t w = order[j];
        if (h.adj(v, w) && !g.adj(x, image[w])) ok = false;
      }
      if (!ok) continue;
      used[x] = 1;
      image[v] = x;
      if (self(self, k + 1)) return true;
      used[x] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

// Deletes vertices of degree at most one and suppresses degree-two vertices.
// Preserves containment of every minor with minimum degree three.
MultiGraph reduce_low_degree(MultiGraph g) {
  for (;;) {
    std::optional<VertexId> low;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) <= 2) {
        low = v;
        break;
      }
    }
    if (!low) return g;
    if (g.degree(*low) <= 1) {
      VertexId vs[] = {*low};
      g = delete_vertices(g, vs);
    } else {
      g = contract_edge(g, g.incident_edges(*low).front(), true);
    }
  }
}

class MinorSearch {
 public:
  explicit MinorSearch(std::span<const MultiGraph> hs) {
    reduce_ = !hs.empty();
    all_nonplanar_ = !hs.empty();
    for (const auto& h : hs) {
      auto s = simplify(h);
      min_v_ = std::min(min_v_, s.num_vertices());
      min_e_ = std::min(min_e_, s.num_edges());
      if (s.num_vertices() == 0 || s.min_degree() < 3) reduce_ = false;
      if (all_nonplanar_ && is_planar(s).planar) all_nonplanar_ = false;
      targets_.push_back(Adjacency(s));
      target_edges_.push_back(s.num_edges());
    }
  }

  std::optional<std::size_t> run(const MultiGraph& g) {
    if (targets_.empty()) return std::nullopt;
    return visit(simplify(g));
  }

 private:
  std::optional<std::size_t> visit(MultiGraph g) {
    if (reduce_) g = reduce_low_degree(std::move(g));
    if (g.num_vertices() < min_v_ || g.num_edges() < min_e_) return std::nullopt;
    if (!seen_.insert(canonical_form(g)).second) return std::nullopt;
    if (all_nonplanar_ && is_planar(g).planar) return std::nullopt;

    Adjacency adj(g);
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (targets_[i].n <= adj.n && target_edges_[i] <= g.num_edges() && subgraph_embeds(targets_[i], adj)) {
        return i;
      }
    }
    if (g.num_vertices() <= min_v_) return std::nullopt;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (auto hit = visit(contract_edge(g, e, true))) return hit;
    }
    return std::nullopt;
  }

  std::vector<Adjacency> targets_;
  std::vector<std::size_t> target_edges_;
  std::size_t min_v_ = static_cast<std::size_t>(-1);
  std::size_t min_e_ = static_cast<std::size_t>(-1);
  bool reduce_ = true;
  bool all_nonplanar_ = true;
  std::unordered_set<CanonicalCert, CanonicalCertHash> seen_;
};

}  // namespace

std::optional<std::size_t> find_any_minor(const MultiGraph& g, std::span<const MultiGraph> hs) {
  return MinorSearch(hs).run(g);
}

bool has_minor(const MultiGraph& g, const MultiGraph& h) {
  return find_any_minor(g, std::span<const MultiGraph>(&h, 1)).has_value();
}

bool is_linkless(const MultiGraph& g) {
  static const std::vector<MultiGraph> obstructions = [] {
    std::vector<MultiGraph> out;
    for (const auto& m : petersen_family().members) out.push_back(m.graph);
    return out;
  }();
  return !find_any_minor(g, obstructions).has_value();
}

std::vector<VertexId> non_linkless_neighbourhoods(const MultiGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!is_linkless(neighborhood(g, v))) out.push_back(v);
  }
  return out;
}

LocalLinklessness is_locally_linkless(const MultiGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!is_linkless(neighborhood(g, v))) return {false, v};
  }
  return {};
}

namespace {

// Vertex sequence v0 v1 ... v(k-1) and edge sequence with edges[i] = v(i)v(i+1).
struct CycleWalk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

CycleWalk order_cycle(const MultiGraph& g, std::span<const EdgeId> cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("a cycle of a simple graph has at least 3 edges");
  std::vector<EdgeId> es(cycle.begin(), cycle.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) throw std::invalid_argument("repeated edge in cycle");
  std::vector<std::vector<EdgeId>> at(g.num_vertices());
  for (auto e : es) {
    if (!g.has_edge(e)) throw std::invalid_argument("cycle edge " + std::to_string(e) + " does not exist");
    const auto& r = g.edge(e);
    at[r.u].push_back(e);
    at[r.v].push_back(e);
  }
  for (const auto& inc : at) {
    if (!inc.empty() && inc.size() != 2) throw std::invalid_argument("edge set is not a cycle");
  }
  CycleWalk w;
  VertexId start = g.edge(es[0]).u;
  VertexId v = start;
  EdgeId prev = es[0];
  EdgeId cur = at[v][0];
  do {
    w.vertices.push_back(v);
    w.edges.push_back(cur);
    v = g.edge(cur).other(v);
    prev = cur;
    cur = at[v][0] == prev ? at[v][1] : at[v][0];
  } while (v != start);
  if (w.edges.size() != es.size()) throw std::invalid_argument("edge set is not a single cycle");
  return w;
}

void split(const MultiGraph& g, const CycleWalk& c, CycleDecomposition& out) {
  const std::size_t k = c.vertices.size();
  std::vector<std::size_t> pos(g.num_vertices(), k);
  for (std::size_t i = 0; i < k; ++i) pos[c.vertices[i]] = i;
  std::vector<char> on_cycle(g.num_edges(), 0);
  for (auto e : c.edges) on_cycle[e] = 1;

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& r = g.edge(e);
    if (on_cycle[e] || pos[r.u] == k || pos[r.v] == k) continue;
    auto [i, j] = std::minmax(pos[r.u], pos[r.v]);
    CycleWalk a, b;
    for (std::size_t t = i; t < j; ++t) {
      a.vertices.push_back(c.vertices[t]);
      a.edges.push_back(c.edges[t]);
    }
    a.vertices.push_back(c.vertices[j]);
    a.edges.push_back(e);
    for (std::size_t t = j; t < k; ++t) {
      b.vertices.push_back(c.vertices[t]);
      b.edges.push_back(c.edges[t]);
    }
    for (std::size_t t = 0; t < i; ++t) {
      b.vertices.push_back(c.vertices[t]);
      b.edges.push_back(c.edges[t]);
    }
    b.vertices.push_back(c.vertices[i]);
    b.edges.push_back(e);
    split(g, a, out);
    split(g, b, out);
    return;
  }
  auto part = c.edges;
  std::sort(part.begin(), part.end());
  out.parts.push_back(std::move(part));
}

}  // namespace

CycleDecomposition decompose_cycle_induced(const MultiGraph& g, std::span<const EdgeId> cycle) {
  if (!g.is_simple()) throw std::invalid_argument("decompose_cycle_induced needs a simple graph");
  CycleDecomposition out;
  split(g, order_cycle(g, cycle), out);
  return out;
}

}  // namespace minorforge
