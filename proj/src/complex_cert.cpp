#include "minorforge/complex_cert.hpp"

namespace minorforge {

namespace {

enum Kind : std::size_t { Vertex = 1, Edge, End, Occurrence, Traversal, Cell };

}  // namespace

MultiGraph incidence_graph(const TwoComplex& x) {
  if (auto v = validate(x)) throw std::invalid_argument("invalid complex: " + v->message);
  const auto& g = x.skeleton;
  MultiGraph h;
  auto node = [&h](Kind k) {
    auto id = h.add_vertex();
    for (std::size_t i = 0; i < k; ++i) h.add_edge(id, id);
    return id;
  };

  std::vector<VertexId> vnode, enode, tail_end, head_end;
  for (VertexId v = 0; v < g.num_vertices(); ++v) vnode.push_back(node(Vertex));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    enode.push_back(node(Edge));
    tail_end.push_back(node(End));
    head_end.push_back(node(End));
    h.add_edge(enode[e], tail_end[e]);
    h.add_edge(enode[e], head_end[e]);
    h.add_edge(tail_end[e], vnode[g.edge(e).u]);
    h.add_edge(head_end[e], vnode[g.edge(e).v]);
  }
  for (const auto& cell : x.cells) {
    const auto& w = cell.boundary;
    auto c = node(Cell);
    if (w.steps.empty()) {
      h.add_edge(c, vnode[w.start]);
      continue;
    }
    const std::size_t n = w.steps.size();
    std::vector<VertexId> occ(n), trav(n);
    for (std::size_t i = 0; i < n; ++i) {
      occ[i] = node(Occurrence);
      trav[i] = node(Traversal);
      h.add_edge(c, occ[i]);
      h.add_edge(trav[i], enode[w.steps[i].edge]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = w.steps[i];
      // step i leaves occurrence i and enters occurrence i + 1
      const auto leave = s.dir == 1 ? tail_end[s.edge] : head_end[s.edge];
      const auto enter = s.dir == 1 ? head_end[s.edge] : tail_end[s.edge];
      h.add_edge(occ[i], leave);
      h.add_edge(occ[(i + 1) % n], enter);
      h.add_edge(occ[i], trav[i]);
      h.add_edge(trav[i], occ[(i + 1) % n]);
    }
  }
  return h;
}

ComplexCert complex_cert(const TwoComplex& x) { return {canonical_form(incidence_graph(x))}; }

bool complexes_isomorphic(const TwoComplex& a, const TwoComplex& b) {
  if (a.skeleton.num_vertices() != b.skeleton.num_vertices() || a.skeleton.num_edges() != b.skeleton.num_edges() ||
      a.cells.size() != b.cells.size()) {
    return false;
  }
  return complex_cert(a) == complex_cert(b);
}

}  // namespace minorforge
