#include "minorforge/canon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "minorforge/surgery.hpp"

namespace minorforge {

std::string CanonicalCert::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::size_t CanonicalCertHash::operator()(const CanonicalCert& c) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ull;
  for (auto b : c.bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

class Search {
 public:
  enum class Mode { Canonical, AllAutomorphisms };

  Search(const MultiGraph& g, Mode mode, std::size_t limit)
      : n_(g.num_vertices()), edges_(g.num_edges()), mode_(mode), limit_(limit), adj_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      if (e.is_loop()) {
        bump(e.u, e.u);
      } else {
        bump(e.u, e.v);
        bump(e.v, e.u);
      }
    }
  }

  void run() {
    std::vector<std::uint32_t> colors(n_, 0);
    std::vector<VertexId> prefix;
    explore(colors, prefix);
  }

  const std::vector<std::uint8_t>& best_code() const { return best_code_; }
  const Permutation& best_position() const { return best_pos_; }
  const std::vector<Permutation>& automorphisms() const { return auts_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }

 private:
  void bump(VertexId a, VertexId b) {
    auto& cell = adj_[a * n_ + b];
    if (cell == 255) throw std::length_error("edge multiplicity above 255 is not supported");
    ++cell;
  }

  std::uint8_t at(VertexId a, VertexId b) const { return adj_[a * n_ + b]; }

  // Colour refinement to a stable partition. Colours are ranks of
  // (old colour, loop count, sorted neighbour colour/multiplicity list), so
  // the ordering of cells is label-independent.
  void refine(std::vector<std::uint32_t>& colors) const {
    using Sig = std::tuple<std::uint32_t, std::uint8_t, std::vector<std::pair<std::uint32_t, std::uint8_t>>>;
    std::size_t cells = count_cells(colors);
    std::vector<Sig> sig(n_);
    std::vector<std::size_t> order(n_);
    while (cells < n_) {
      for (VertexId v = 0; v < n_; ++v) {
        auto& [c, loops, nb] = sig[v];
        c = colors[v];
        loops = at(v, v);
        nb.clear();
        for (VertexId u = 0; u < n_; ++u) {
          if (u != v && at(v, u)) nb.emplace_back(colors[u], at(v, u));
        }
        std::sort(nb.begin(), nb.end());
      }
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        colors[order[i]] = rank;
      }
      std::size_t next = static_cast<std::size_t>(rank) + 1;
      if (next == cells) break;
      cells = next;
    }
  }

  static std::size_t count_cells(const std::vector<std::uint32_t>& colors) {
    if (colors.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
  }

  // Places v in a singleton cell directly before the rest of its cell.
  std::vector<std::uint32_t> individualize(const std::vector<std::uint32_t>& colors, VertexId v) const {
    std::vector<std::uint32_t> out(n_);
    for (VertexId w = 0; w < n_; ++w) {
      out[w] = colors[w] * 2 + ((colors[w] > colors[v] || (colors[w] == colors[v] && w != v)) ? 1 : 0);
    }
    // Re-rank to contiguous colours.
    std::vector<std::uint32_t> keys(out);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (auto& c : out) c = static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), c) - keys.begin());
    return out;
  }

  std::vector<std::uint8_t> leaf_code(const std::vector<std::uint32_t>& position) const {
    std::vector<VertexId> at_pos(n_);
    for (VertexId v = 0; v < n_; ++v) at_pos[position[v]] = v;
    std::vector<std::uint8_t> code;
    code.reserve(n_ * (n_ + 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) code.push_back(at(at_pos[i], at_pos[j]));
    }
    return code;
  }

  // Automorphism from two leaves with equal codes: v -> pos_b^{-1}(pos_a(v)).
  Permutation leaf_automorphism(const Permutation& pos_a, const Permutation& pos_b) const {
    Permutation inv_b(n_);
    for (VertexId v = 0; v < n_; ++v) inv_b[pos_b[v]] = v;
    Permutation gamma(n_);
    for (VertexId v = 0; v < n_; ++v) gamma[v] = inv_b[pos_a[v]];
    return gamma;
  }

  static bool is_identity(const Permutation& p) {
    for (VertexId v = 0; v < p.size(); ++v) {
      if (p[v] != v) return false;
    }
    return true;
  }

  void record_automorphism(Permutation gamma) {
    if (mode_ == Mode::Canonical && is_identity(gamma)) return;
    if (auts_.size() >= limit_) throw std::length_error("automorphism group exceeds enumeration limit");
    auts_.push_back(std::move(gamma));
  }

  void leaf(const std::vector<std::uint32_t>& colors) {
    Permutation pos(colors.begin(), colors.end());
    auto code = leaf_code(colors);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_pos_ = best_pos_ = pos;
      if (mode_ == Mode::AllAutomorphisms) record_automorphism(leaf_automorphism(pos, pos));
      return;
    }
    if (code == first_code_) {
      record_automorphism(leaf_automorphism(pos, first_pos_));
      return;
    }
    if (mode_ == Mode::AllAutomorphisms) return;
    if (code == best_code_) {
      record_automorphism(leaf_automorphism(pos, best_pos_));
    } else if (code < best_code_) {
      best_code_ = std::move(code);
      best_pos_ = std::move(pos);
    }
  }

  // Orbit representatives check: w is skipped when some known automorphism
  // fixing the prefix pointwise maps an already-explored vertex onto it.
  bool equivalent_to_tried(VertexId w, const std::vector<VertexId>& tried,
                           const std::vector<VertexId>& prefix) const {
    if (tried.empty() || auts_.empty()) return false;
    std::vector<VertexId> parent(n_);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : auts_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](VertexId p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (VertexId v = 0; v < n_; ++v) {
        auto a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (!any) return false;
    auto rw = find(w);
    return std::any_of(tried.begin(), tried.end(), [&](VertexId t) { return find(t) == rw; });
  }

  void explore(std::vector<std::uint32_t> colors, std::vector<VertexId>& prefix) {
    refine(colors);
    std::size_t cells = count_cells(colors);
    if (cells == n_) {
      leaf(colors);
      return;
    }
    // Target: smallest non-singleton cell, lowest colour on ties.
    std::vector<std::size_t> size(cells, 0);
    for (auto c : colors) ++size[c];
    std::uint32_t target = 0;
    std::size_t target_size = n_ + 1;
    for (std::uint32_t c = 0; c < cells; ++c) {
      if (size[c] > 1 && size[c] < target_size) {
        target = c;
        target_size = size[c];
      }
    }
    std::vector<VertexId> tried;
    for (VertexId w = 0; w < n_; ++w) {
      if (colors[w] != target) continue;
      if (mode_ == Mode::Canonical && equivalent_to_tried(w, tried, prefix)) continue;
      tried.push_back(w);
      prefix.push_back(w);
      explore(individualize(colors, w), prefix);
      prefix.pop_back();
    }
  }

  std::size_t n_;
  std::size_t edges_;
  Mode mode_;
  std::size_t limit_;
  std::vector<std::uint8_t> adj_;

  bool have_first_ = false;
  std::vector<std::uint8_t> first_code_, best_code_;
  Permutation first_pos_, best_pos_;
  std::vector<Permutation> auts_;
};

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(x >> s));
}

std::vector<std::vector<std::uint32_t>> orbits_from(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    for (std::uint32_t v = 0; v < n; ++v) {
      auto a = find(v), b = find(g[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::int64_t> idx(n, -1);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto r = find(v);
    if (idx[r] < 0) {
      idx[r] = static_cast<std::int64_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[idx[r]].push_back(v);
  }
  return blocks;
}

}  // namespace

CanonicalLabeling canonical_labeling(const MultiGraph& g) {
  Search s(g, Search::Mode::Canonical, 1'000'000);
  s.run();
  CanonicalLabeling out;
  out.position = s.best_position();
  append_u32(out.cert.bytes, static_cast<std::uint32_t>(g.num_vertices()));
  append_u32(out.cert.bytes, static_cast<std::uint32_t>(g.num_edges()));
  const auto& code = s.best_code();
  out.cert.bytes.insert(out.cert.bytes.end(), code.begin(), code.end());
  return out;
}

CanonicalCert canonical_form(const MultiGraph& g) { return canonical_labeling(g).cert; }

MultiGraph canonical_graph(const MultiGraph& g) {
  auto lab = canonical_labeling(g);
  // Rebuild from the matrix so that edge order is canonical as well.
  auto m = g.multiplicity_matrix();
  std::vector<VertexId> at_pos(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) at_pos[lab.position[v]] = v;
  MultiGraph out(g.num_vertices());
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    for (VertexId j = i; j < g.num_vertices(); ++j) {
      for (std::uint32_t k = 0; k < m[at_pos[i]][at_pos[j]]; ++k) out.add_edge(i, j);
    }
  }
  return out;
}

bool is_isomorphism(const MultiGraph& g, const MultiGraph& h, const Permutation& perm) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (perm.size() != g.num_vertices()) return false;
  std::vector<bool> hit(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || hit[p]) return false;
    hit[p] = true;
  }
  auto mg = g.multiplicity_matrix();
  auto mh = h.multiplicity_matrix();
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (mg[u][v] != mh[perm[u]][perm[v]]) return false;
    }
  }
  return true;
}

std::optional<Permutation> find_isomorphism(const MultiGraph& g, const MultiGraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  auto lg = canonical_labeling(g);
  auto lh = canonical_labeling(h);
  if (lg.cert != lh.cert) return std::nullopt;
  Permutation inv_h(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) inv_h[lh.position[v]] = v;
  Permutation phi(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) phi[v] = inv_h[lg.position[v]];
  return phi;
}

bool are_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<Permutation> automorphism_generators(const MultiGraph& g) {
  Search s(g, Search::Mode::Canonical, 1'000'000);
  s.run();
  return s.automorphisms();
}

std::vector<Permutation> all_automorphisms(const MultiGraph& g, std::size_t limit) {
  Search s(g, Search::Mode::AllAutomorphisms, limit);
  s.run();
  if (g.num_vertices() == 0) return {Permutation{}};
  return s.automorphisms();
}

EdgeOrbitPartition edge_orbits(const MultiGraph& g) {
  auto gens = automorphism_generators(g);
  const std::size_t m = g.num_edges();
  std::vector<std::uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  // First edge id per unordered endpoint pair; parallel edges join it.
  std::vector<std::int64_t> rep(g.num_vertices() * g.num_vertices(), -1);
  auto key = [&](VertexId a, VertexId b) { return std::min(a, b) * g.num_vertices() + std::max(a, b); };
  for (EdgeId e = 0; e < m; ++e) {
    auto k = key(g.edge(e).u, g.edge(e).v);
    if (rep[k] < 0) rep[k] = e;
    else unite(static_cast<std::uint32_t>(rep[k]), e);
  }
  for (const auto& gamma : gens) {
    for (EdgeId e = 0; e < m; ++e) {
      auto k = key(gamma[g.edge(e).u], gamma[g.edge(e).v]);
      unite(e, static_cast<std::uint32_t>(rep[k]));
    }
  }
  EdgeOrbitPartition out;
  std::vector<std::int64_t> idx(m, -1);
  for (EdgeId e = 0; e < m; ++e) {
    auto r = find(e);
    if (idx[r] < 0) {
      idx[r] = static_cast<std::int64_t>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[idx[r]].push_back(e);
  }
  return out;
}

std::vector<std::vector<VertexId>> vertex_orbits(const MultiGraph& g) {
  return orbits_from(g.num_vertices(), automorphism_generators(g));
}

}  // namespace minorforge
