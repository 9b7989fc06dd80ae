#include "minorforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minorforge {

MultiGraph::MultiGraph(std::size_t n,
                       std::initializer_list<std::pair<VertexId, VertexId>> edges)
    : MultiGraph(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size())) {}

MultiGraph::MultiGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges)
    : n_(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) add_edge(u, v);
}

const EdgeRec& MultiGraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw std::invalid_argument("unknown edge id " + std::to_string(e));
  return edges_[e];
}

VertexId MultiGraph::add_vertex() { return static_cast<VertexId>(n_++); }

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                std::to_string(v));
  }
  edges_.push_back({u, v});
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::size_t MultiGraph::degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::size_t MultiGraph::min_degree() const {
  if (n_ == 0) return 0;
  auto d = degrees();
  return *std::min_element(d.begin(), d.end());
}

std::size_t MultiGraph::loop_count(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const EdgeRec& e) { return e.u == v && e.v == v; }));
}

std::size_t MultiGraph::multiplicity(VertexId a, VertexId b) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [a, b](const EdgeRec& e) { return e.joins(a, b); }));
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    if (e.u == v) out.push_back(e.v);
    else if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> MultiGraph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
  }
  return out;
}

std::vector<EdgeId> MultiGraph::edges_between(VertexId a, VertexId b) const {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (edges_[i].joins(a, b)) out.push_back(i);
  }
  return out;
}

bool MultiGraph::is_simple() const {
  auto m = multiplicity_matrix();
  for (std::size_t i = 0; i < n_; ++i) {
    if (m[i][i] != 0) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (m[i][j] > 1) return false;
    }
  }
  return true;
}

bool MultiGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const EdgeRec& e) { return e.is_loop(); });
}

std::vector<std::vector<std::uint32_t>> MultiGraph::multiplicity_matrix() const {
  std::vector<std::vector<std::uint32_t>> m(n_, std::vector<std::uint32_t>(n_, 0));
  for (const auto& e : edges_) {
    if (e.is_loop()) {
      ++m[e.u][e.u];
    } else {
      ++m[e.u][e.v];
      ++m[e.v][e.u];
    }
  }
  return m;
}

std::string to_string(const MultiGraph& g) {
  std::ostringstream os;
  os << "MultiGraph(n=" << g.num_vertices() << ", edges=[";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) os << ", ";
    first = false;
    os << e.u << "-" << e.v;
  }
  os << "])";
  return os.str();
}

MultiGraph complete_graph(std::size_t n) {
  MultiGraph g(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

MultiGraph complete_multipartite(std::span<const std::size_t> parts) {
  std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<std::size_t> part_of;
  part_of.reserve(n);
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  MultiGraph g(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) g.add_edge(i, j);
    }
  }
  return g;
}

MultiGraph complete_multipartite(std::initializer_list<std::size_t> parts) {
  return complete_multipartite(std::span<const std::size_t>(parts.begin(), parts.size()));
}

MultiGraph cycle_graph(std::size_t n) {
  MultiGraph g(n);
  for (VertexId i = 0; i < n; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % n));
  return g;
}

MultiGraph path_graph(std::size_t n) {
  MultiGraph g(n);
  for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph empty_graph(std::size_t n) { return MultiGraph(n); }

MultiGraph petersen_graph() {
  MultiGraph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

MultiGraph heawood_graph() {
  // LCF notation [5,-5]^7.
  MultiGraph g(14);
  for (VertexId i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (VertexId i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

}  // namespace minorforge
