#include "minorforge/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace minorforge {

namespace {

void require_edge(const MultiGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw std::invalid_argument("unknown edge id " + std::to_string(e));
}

void require_vertex(const MultiGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

}  // namespace

MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
  require_edge(g, e);
  MultiGraph out(g.num_vertices());
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    if (i != e) out.add_edge(g.edge(i).u, g.edge(i).v);
  }
  return out;
}

MultiGraph contract_edge(const MultiGraph& g, EdgeId e, bool simplify_result) {
  require_edge(g, e);
  const auto& rec = g.edge(e);
  if (rec.is_loop()) throw std::invalid_argument("cannot contract loop " + std::to_string(e));
  VertexId keep = std::min(rec.u, rec.v);
  VertexId gone = std::max(rec.u, rec.v);
  auto map = [&](VertexId x) -> VertexId {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  MultiGraph out(g.num_vertices() - 1);
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    if (i == e) continue;
    out.add_edge(map(g.edge(i).u), map(g.edge(i).v));
  }
  return simplify_result ? simplify(out) : out;
}

MultiGraph simplify(const MultiGraph& g) {
  MultiGraph out(g.num_vertices());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    auto key = std::minmax(e.u, e.v);
    if (seen.insert({key.first, key.second}).second) out.add_edge(e.u, e.v);
  }
  return out;
}

EdgeClone clone_edge_graph(const MultiGraph& g, EdgeId e) {
  require_edge(g, e);
  MultiGraph out = g;
  EdgeId c = out.add_edge(g.edge(e).u, g.edge(e).v);
  return {std::move(out), c};
}

Subdivision subdivide_edge(const MultiGraph& g, EdgeId e) {
  require_edge(g, e);
  MultiGraph out = delete_edge(g, e);
  VertexId mid = out.add_vertex();
  out.add_edge(g.edge(e).u, mid);
  out.add_edge(mid, g.edge(e).v);
  return {std::move(out), mid};
}

DeltaWye delta_to_y(const MultiGraph& g, const Triangle& t) {
  for (auto v : t) require_vertex(g, v);
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
    throw std::invalid_argument("triangle vertices must be distinct");
  }
  std::vector<EdgeId> drop;
  for (int i = 0; i < 3; ++i) {
    auto between = g.edges_between(t[i], t[(i + 1) % 3]);
    if (between.empty()) {
      throw std::invalid_argument("missing triangle edge " + std::to_string(t[i]) + "-" +
                                  std::to_string(t[(i + 1) % 3]));
    }
    drop.push_back(between.front());
  }
  MultiGraph out(g.num_vertices());
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.add_edge(g.edge(i).u, g.edge(i).v);
  }
  VertexId hub = out.add_vertex();
  for (auto v : t) out.add_edge(hub, v);
  return {std::move(out), hub};
}

MultiGraph y_to_delta(const MultiGraph& g, VertexId v, bool simplify_result) {
  require_vertex(g, v);
  if (g.loop_count(v) != 0) throw std::invalid_argument("Y-Delta centre has a loop");
  if (g.degree(v) != 3) {
    throw std::invalid_argument("Y-Delta centre must have degree 3, has " + std::to_string(g.degree(v)));
  }
  std::vector<VertexId> ends;
  for (const auto& e : g.edges()) {
    if (e.u == v) ends.push_back(e.v);
    else if (e.v == v) ends.push_back(e.u);
  }
  auto map = [v](VertexId x) { return x > v ? x - 1 : x; };
  MultiGraph out(g.num_vertices() - 1);
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    out.add_edge(map(e.u), map(e.v));
  }
  out.add_edge(map(ends[0]), map(ends[1]));
  out.add_edge(map(ends[1]), map(ends[2]));
  out.add_edge(map(ends[2]), map(ends[0]));
  return simplify_result ? simplify(out) : out;
}

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
  MultiGraph out(g.num_vertices() + h.num_vertices());
  auto off = static_cast<VertexId>(g.num_vertices());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) out.add_edge(e.u + off, e.v + off);
  return out;
}

MultiGraph graph_join(const MultiGraph& g, const MultiGraph& h) {
  if (!g.is_simple() || !h.is_simple()) throw std::invalid_argument("graph join requires simple graphs");
  MultiGraph out = disjoint_union(g, h);
  auto off = static_cast<VertexId>(g.num_vertices());
  for (VertexId a = 0; a < g.num_vertices(); ++a) {
    for (VertexId b = 0; b < h.num_vertices(); ++b) out.add_edge(a, b + off);
  }
  return out;
}

MultiGraph clique_sum(const MultiGraph& g1, const MultiGraph& g2,
                      std::span<const VertexId> clique1, std::span<const VertexId> clique2) {
  if (clique1.size() != clique2.size()) throw std::invalid_argument("clique sizes differ");
  auto check_clique = [](const MultiGraph& g, std::span<const VertexId> c) {
    std::set<VertexId> distinct(c.begin(), c.end());
    if (distinct.size() != c.size()) throw std::invalid_argument("clique has repeated vertices");
    for (auto v : c) require_vertex(g, v);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!g.adjacent(c[i], c[j])) throw std::invalid_argument("vertex set is not a clique");
      }
    }
  };
  check_clique(g1, clique1);
  check_clique(g2, clique2);

  std::vector<VertexId> map(g2.num_vertices(), 0);
  std::vector<bool> in_clique(g2.num_vertices(), false);
  for (std::size_t i = 0; i < clique2.size(); ++i) {
    map[clique2[i]] = clique1[i];
    in_clique[clique2[i]] = true;
  }
  MultiGraph out = g1;
  for (VertexId v = 0; v < g2.num_vertices(); ++v) {
    if (!in_clique[v]) map[v] = out.add_vertex();
  }
  for (const auto& e : g2.edges()) {
    if (in_clique[e.u] && in_clique[e.v] && !e.is_loop()) continue;  // shared clique edge
    out.add_edge(map[e.u], map[e.v]);
  }
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices) {
  std::vector<std::int64_t> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require_vertex(g, vertices[i]);
    pos[vertices[i]] = static_cast<std::int64_t>(i);
  }
  MultiGraph out(vertices.size());
  for (const auto& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) {
      out.add_edge(static_cast<VertexId>(pos[e.u]), static_cast<VertexId>(pos[e.v]));
    }
  }
  return out;
}

MultiGraph neighborhood(const MultiGraph& g, VertexId x) {
  require_vertex(g, x);
  auto nb = g.neighbors(x);
  return induced_subgraph(g, nb);
}

MultiGraph delete_vertices(const MultiGraph& g, std::span<const VertexId> vertices) {
  std::vector<bool> gone(g.num_vertices(), false);
  for (auto v : vertices) {
    require_vertex(g, v);
    gone[v] = true;
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.num_vertices()) throw std::invalid_argument("permutation size mismatch");
  MultiGraph out(g.num_vertices());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

std::vector<Triangle> triangles(const MultiGraph& g) {
  std::vector<Triangle> out;
  auto m = g.multiplicity_matrix();
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!m[a][b]) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (m[a][c] && m[b][c]) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<VertexId>> comps;
  std::vector<std::int64_t> index(g.num_vertices(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto r = find(v);
    if (index[r] < 0) {
      index[r] = static_cast<std::int64_t>(comps.size());
      comps.emplace_back();
    }
    comps[index[r]].push_back(v);
  }
  return comps;
}

bool is_connected(const MultiGraph& g) { return connected_components(g).size() <= 1; }

}  // namespace minorforge
