#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::vector<std::vector<std::uint32_t>> matrix(const MultiGraph& g) {
  const auto n = g.num_vertices();
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      ++m[e.u][e.u];
    } else {
      ++m[e.u][e.v];
      ++m[e.v][e.u];
    }
  }
  return m;
}

}  // namespace

std::vector<std::uint32_t> brute_force_code(const MultiGraph& g) {
  const auto n = g.num_vertices();
  auto m = matrix(g);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> code;
    code.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) code.push_back(m[order[i]][order[j]]);
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool brute_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  return brute_force_code(g) == brute_force_code(h);
}

std::size_t brute_automorphism_count(const MultiGraph& g) {
  const auto n = g.num_vertices();
  auto m = matrix(g);
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), VertexId{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = m[i][j] == m[p[i]][p[j]];
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::size_t brute_isomorphism_class_count(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::set<std::vector<std::uint32_t>> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    MultiGraph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1) g.add_edge(slots[k].first, slots[k].second);
    }
    classes.insert(brute_force_code(g));
  }
  return classes.size();
}

MultiGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  MultiGraph g(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

MultiGraph random_relabel(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<minorforge::EdgeRec> edges(g.edges().begin(), g.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  MultiGraph out(g.num_vertices());
  for (const auto& e : edges) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

namespace {

// Adds non-crossing chords inside polygon [lo, hi] recursively.
void chords(MultiGraph& g, VertexId lo, VertexId hi, std::mt19937_64& rng) {
  if (hi - lo < 2) return;
  std::uniform_int_distribution<VertexId> pick(lo + 1, hi - 1);
  VertexId mid = pick(rng);
  if (mid - lo >= 2) g.add_edge(lo, mid);
  if (hi - mid >= 2) g.add_edge(mid, hi);
  chords(g, lo, mid, rng);
  chords(g, mid, hi, rng);
}

}  // namespace

MultiGraph random_outerplanar(std::size_t n, std::mt19937_64& rng) {
  MultiGraph g(n);
  if (n < 2) return g;
  for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  if (n >= 3) g.add_edge(0, static_cast<VertexId>(n - 1));
  chords(g, 0, static_cast<VertexId>(n - 1), rng);
  return g;
}

std::vector<std::vector<VertexId>> all_simple_cycles(const MultiGraph& g) {
  const auto n = g.num_vertices();
  auto m = matrix(g);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, VertexId s, VertexId v) -> void {
    for (VertexId w = 0; w < n; ++w) {
      if (!m[v][w] || w == v) continue;
      if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= s || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, s, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(dfs, s, s);
  }
  return out;
}

bool chordless(const MultiGraph& g, const std::vector<VertexId>& cycle) {
  auto m = matrix(g);
  const auto k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (m[cycle[i]][cycle[j]]) return false;
    }
  }
  return true;
}

bool brute_has_minor(const MultiGraph& g, const MultiGraph& h) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = h.num_vertices();
  if (k == 0) return true;
  if (k > n) return false;
  auto mg = matrix(g);
  auto mh = matrix(h);
  std::vector<std::size_t> part(n, 0);  // 0 = unused, i+1 = branch set i
  for (;;) {
    // connected, nonempty branch sets and every edge of h realised
    bool ok = true;
    for (std::size_t b = 1; b <= k && ok; ++b) {
      std::vector<VertexId> members;
      for (VertexId v = 0; v < n; ++v) {
        if (part[v] == b) members.push_back(v);
      }
      if (members.empty()) {
        ok = false;
        break;
      }
      std::vector<char> reached(n, 0);
      std::vector<VertexId> stack{members[0]};
      reached[members[0]] = 1;
      std::size_t count = 1;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w = 0; w < n; ++w) {
          if (w != v && mg[v][w] && part[w] == b && !reached[w]) {
            reached[w] = 1;
            ++count;
            stack.push_back(w);
          }
        }
      }
      ok = count == members.size();
    }
    for (std::size_t a = 0; a < k && ok; ++a) {
      for (std::size_t b = a + 1; b < k && ok; ++b) {
        if (!mh[a][b]) continue;
        bool found = false;
        for (VertexId v = 0; v < n && !found; ++v) {
          if (part[v] != a + 1) continue;
          for (VertexId w = 0; w < n && !found; ++w) found = part[w] == b + 1 && mg[v][w];
        }
        ok = found;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && part[i] == k) part[i++] = 0;
    if (i == n) return false;
    ++part[i];
  }
}

}  // namespace oracle

namespace oracle {

namespace {

using minorforge::ClosedWalk;
using minorforge::EdgeId;
using minorforge::TwoComplex;

// Cell as the least rotation/reflection of its (vertex, edge, dir) sequence.
std::vector<std::int64_t> cell_key(const MultiGraph& g, const ClosedWalk& w) {
  if (w.steps.empty()) return {-1, static_cast<std::int64_t>(w.start)};
  const std::size_t n = w.steps.size();
  std::vector<std::int64_t> from(n), edge(n), dir(n);
  VertexId at = w.start;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = g.edge(w.steps[i].edge);
    from[i] = at;
    edge[i] = w.steps[i].edge;
    dir[i] = w.steps[i].dir;
    at = w.steps[i].dir > 0 ? e.v : e.u;
  }
  std::vector<std::int64_t> best;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> fwd, bwd;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t j = (i + k) % n;
      fwd.insert(fwd.end(), {from[j], edge[j], dir[j]});
      std::size_t r = (i + n - k) % n;
      bwd.insert(bwd.end(), {from[(r + 1) % n], edge[r], -dir[r]});
    }
    if (best.empty() || fwd < best) best = fwd;
    if (bwd < best) best = bwd;
  }
  return best;
}

std::vector<std::vector<std::int64_t>> cell_keys(const TwoComplex& x) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& c : x.cells) out.push_back(cell_key(x.skeleton, c.boundary));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool brute_complex_isomorphic(const TwoComplex& a, const TwoComplex& b) {
  const auto& ga = a.skeleton;
  const auto& gb = b.skeleton;
  const std::size_t n = ga.num_vertices(), m = ga.num_edges();
  if (n != gb.num_vertices() || m != gb.num_edges() || a.cells.size() != b.cells.size()) return false;
  const auto target = cell_keys(b);
  std::vector<VertexId> pi(n);
  std::iota(pi.begin(), pi.end(), VertexId{0});
  do {
    // edges of b available for each edge of a
    std::vector<std::vector<EdgeId>> options(m);
    bool ok = true;
    for (EdgeId e = 0; e < m && ok; ++e) {
      auto u = pi[ga.edge(e).u], v = pi[ga.edge(e).v];
      for (EdgeId f = 0; f < m; ++f) {
        if (gb.edge(f).joins(u, v)) options[e].push_back(f);
      }
      ok = !options[e].empty();
    }
    if (!ok) continue;
    std::vector<EdgeId> image(m);
    std::vector<int> sign(m, 1);
    std::vector<char> used(m, 0);
    auto assign = [&](auto&& self, EdgeId e) -> bool {
      if (e == m) {
        TwoComplex mapped{gb, {}};
        for (const auto& c : a.cells) {
          ClosedWalk w{pi[c.boundary.start], {}};
          for (auto s : c.boundary.steps) {
            w.steps.push_back({image[s.edge], static_cast<std::int8_t>(s.dir * sign[s.edge])});
          }
          mapped.cells.push_back({w});
        }
        return cell_keys(mapped) == target;
      }
      for (auto f : options[e]) {
        if (used[f]) continue;
        used[f] = 1;
        image[e] = f;
        const auto& re = ga.edge(e);
        const auto& rf = gb.edge(f);
        std::vector<int> signs;
        if (re.u == re.v) signs = {1, -1};
        else signs = {pi[re.u] == rf.u ? 1 : -1};
        for (int s : signs) {
          sign[e] = s;
          if (self(self, e + 1)) return true;
        }
        used[f] = 0;
      }
      return false;
    };
    if (assign(assign, 0)) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

}  // namespace oracle
