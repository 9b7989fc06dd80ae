#include "minorforge/planarity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "minorforge/canon.hpp"
#include "minorforge/surgery.hpp"

namespace minorforge {

namespace {

constexpr int kNone = -1;

// Left-right planarity (Brandes' formulation of de Fraysseix-Rosenstiehl),
// including the embedding phase.
class LeftRight {
 public:
  explicit LeftRight(const MultiGraph& simple) : n_(simple.num_vertices()) {
    adjs_.resize(n_);
    for (const auto& e : simple.edges()) {
      adjs_[e.u].push_back(e.v);
      adjs_[e.v].push_back(e.u);
    }
    m_ = simple.num_edges();
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);
    out_.resize(n_);
  }

  std::optional<RotationSystem> run() {
    if (n_ > 2 && m_ > 3 * n_ - 6) return std::nullopt;
    for (VertexId v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots_.push_back(v);
        orient(v);
      }
    }
    ordered_ = out_;
    for (auto& list : ordered_) sort_by_nesting(list);
    for (auto r : roots_) {
      if (!test(r)) return std::nullopt;
    }
    for (std::size_t e = 0; e < src_.size(); ++e) nesting_[e] *= sign(static_cast<int>(e));

    cw_.assign(n_, {});
    ccw_.assign(n_, {});
    first_.assign(n_, kNone);
    for (VertexId v = 0; v < n_; ++v) {
      ordered_[v] = out_[v];
      sort_by_nesting(ordered_[v]);
      int prev = kNone;
      for (int e : ordered_[v]) {
        add_cw(v, dst_[e], prev);
        prev = dst_[e];
      }
    }
    left_ref_.assign(n_, kNone);
    right_ref_.assign(n_, kNone);
    for (auto r : roots_) embed(r);

    RotationSystem rs;
    rs.order.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
      if (first_[v] == kNone) continue;
      int w = first_[v];
      do {
        rs.order[v].push_back(static_cast<VertexId>(w));
        w = cw_[v].at(w);
      } while (w != first_[v]);
    }
    return rs;
  }

 private:
  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left, right;
    void swap() { std::swap(left, right); }
  };

  static std::uint64_t key(int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

  bool oriented(int a, int b) const { return edge_of_.count(key(a, b)) > 0; }

  int new_edge(int a, int b) {
    int e = static_cast<int>(src_.size());
    src_.push_back(a);
    dst_.push_back(b);
    lowpt_.push_back(0);
    lowpt2_.push_back(0);
    nesting_.push_back(0);
    ref_.push_back(kNone);
    side_.push_back(1);
    lowpt_edge_.push_back(kNone);
    stack_bottom_.push_back(0);
    edge_of_[key(a, b)] = e;
    out_[a].push_back(e);
    return e;
  }

  void sort_by_nesting(std::vector<int>& list) const {
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });
  }

  void orient(int v) {
    int e = parent_edge_[v];
    for (int w : adjs_[v]) {
      if (oriented(v, w) || oriented(w, v)) continue;
      int vw = new_edge(v, w);
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) nesting_[vw] += 1;  // chordal
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool test(int v) {
    int e = parent_edge_[v];
    const auto& adj = ordered_[v];
    for (std::size_t k = 0; k < adj.size(); ++k) {
      int ei = adj[k];
      int w = dst_[ei];
      stack_bottom_[ei] = stack_.size();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        ConflictPair p;
        p.right = {ei, ei};
        stack_.push_back(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (k == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) p.right = q.right;
        else ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() != stack_bottom_[ei]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) p.left = q.left;
      else ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNone) side_[p.left.low] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        side_[p.left.low] = -1;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        side_[p.right.low] = -1;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      int hl = stack_.back().left.high;
      int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ref_[e] = hl;
      else ref_[e] = hr;
    }
  }

  int sign(int e) {
    if (ref_[e] != kNone) {
      side_[e] *= sign(ref_[e]);
      ref_[e] = kNone;
    }
    return side_[e];
  }

  void add_cw(int start, int end, int ref) {
    if (ref == kNone) {
      cw_[start][end] = end;
      ccw_[start][end] = end;
      first_[start] = end;
      return;
    }
    int after = cw_[start].at(ref);
    cw_[start][ref] = end;
    cw_[start][end] = after;
    ccw_[start][after] = end;
    ccw_[start][end] = ref;
  }

  void add_ccw(int start, int end, int ref) {
    if (ref == kNone) {
      add_cw(start, end, kNone);
      return;
    }
    add_cw(start, end, ccw_[start].at(ref));
    if (ref == first_[start]) first_[start] = end;
  }

  void add_first(int start, int end) {
    add_ccw(start, end, first_[start]);
    first_[start] = end;
  }

  void embed(int v) {
    for (int ei : ordered_[v]) {
      int w = dst_[ei];
      if (ei == parent_edge_[w]) {
        add_first(w, v);
        left_ref_[v] = w;
        right_ref_[v] = w;
        embed(w);
      } else if (side_[ei] == 1) {
        add_cw(w, v, right_ref_[w]);
      } else {
        add_ccw(w, v, left_ref_[w]);
        left_ref_[w] = v;
      }
    }
  }

  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adjs_;
  std::vector<int> height_, parent_edge_, roots_;
  std::vector<std::vector<int>> out_, ordered_;
  std::unordered_map<std::uint64_t, int> edge_of_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, side_, lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
  std::vector<std::unordered_map<int, int>> cw_, ccw_;
  std::vector<int> first_, left_ref_, right_ref_;
};

}  // namespace

std::optional<std::size_t> count_faces(const MultiGraph& g, const RotationSystem& rs) {
  MultiGraph s = simplify(g);
  const std::size_t n = s.num_vertices();
  if (rs.order.size() != n) return std::nullopt;
  // position[v][w] = index of w in the rotation at v
  std::vector<std::unordered_map<VertexId, std::size_t>> position(n);
  for (VertexId v = 0; v < n; ++v) {
    auto expected = s.neighbors(v);
    auto got = rs.order[v];
    std::sort(got.begin(), got.end());
    if (got != expected) return std::nullopt;
    for (std::size_t i = 0; i < rs.order[v].size(); ++i) position[v][rs.order[v][i]] = i;
  }
  // Dart (u -> v) is followed by (v -> successor of u around v).
  std::unordered_set<std::uint64_t> seen;
  auto dart = [](VertexId a, VertexId b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
  std::size_t faces = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : rs.order[u]) {
      if (seen.count(dart(u, v))) continue;
      ++faces;
      VertexId a = u, b = v;
      while (seen.insert(dart(a, b)).second) {
        const auto& around = rs.order[b];
        VertexId c = around[(position[b][a] + 1) % around.size()];
        a = b;
        b = c;
      }
    }
  }
  return faces;
}

bool validate_planar_embedding(const MultiGraph& g, const RotationSystem& rs) {
  auto faces = count_faces(g, rs);
  if (!faces) return false;
  MultiGraph s = simplify(g);
  std::size_t edgeless = 0;
  auto comps = connected_components(s);
  for (const auto& c : comps) {
    if (c.size() == 1) ++edgeless;
  }
  // Each edgeless component is a single vertex with one face and no darts.
  auto lhs = static_cast<long long>(s.num_vertices()) - static_cast<long long>(s.num_edges()) +
             static_cast<long long>(*faces + edgeless);
  return lhs == 2 * static_cast<long long>(comps.size());
}

PlanarityResult is_planar(const MultiGraph& g) {
  MultiGraph s = simplify(g);
  auto rs = LeftRight(s).run();
  if (!rs) return {false, std::nullopt};
  if (!validate_planar_embedding(s, *rs)) {
    throw std::logic_error("planarity witness failed validation for " + to_string(s));
  }
  return {true, std::move(rs)};
}

bool is_outerplanar(const MultiGraph& g) { return is_planar(graph_join(simplify(g), MultiGraph(1))).planar; }

std::optional<ApexPairCertificate> apex_pair_search(const MultiGraph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = v + 1; w < n; ++w) {
      VertexId pair[] = {v, w};
      auto r = is_planar(delete_vertices(g, pair));
      if (r.planar) return ApexPairCertificate{v, w, std::move(*r.witness)};
    }
  }
  return std::nullopt;
}

bool validate_apex_certificate(const MultiGraph& g, const ApexPairCertificate& cert) {
  if (cert.v >= cert.w || !g.has_vertex(cert.w)) return false;
  VertexId pair[] = {cert.v, cert.w};
  return validate_planar_embedding(delete_vertices(g, pair), cert.witness);
}

namespace {

// Deletes degree <= 1 vertices and smooths degree-2 vertices until every
// remaining vertex has degree >= 3. Neither step creates or destroys a
// subdivision of K5 or K3,3.
MultiGraph reduce_low_degree(MultiGraph g) {
  for (;;) {
    auto deg = g.degrees();
    std::int64_t victim = -1;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (deg[v] <= 2) {
        victim = v;
        break;
      }
    }
    if (victim < 0) return g;
    auto v = static_cast<VertexId>(victim);
    auto nb = g.neighbors(v);
    VertexId gone[] = {v};
    MultiGraph next = delete_vertices(g, gone);
    if (nb.size() == 2) {
      auto a = nb[0] > v ? nb[0] - 1 : nb[0];
      auto b = nb[1] > v ? nb[1] - 1 : nb[1];
      if (!next.adjacent(a, b)) next.add_edge(a, b);
    }
    g = std::move(next);
  }
}

bool contains_k33_spanning(const MultiGraph& g) {
  if (g.num_vertices() != 6) return false;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;
    bool all = true;
    for (VertexId a = 0; a < 6 && all; ++a) {
      for (VertexId b = 0; b < 6 && all; ++b) {
        if (((mask >> a) & 1) && !((mask >> b) & 1) && !g.adjacent(a, b)) all = false;
      }
    }
    if (all) return true;
  }
  return false;
}

bool has_kuratowski_subdivision(const MultiGraph& input,
                                std::unordered_map<CanonicalCert, bool, CanonicalCertHash>& memo) {
  MultiGraph g = reduce_low_degree(input);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (n < 5) return false;
  if (n == 5) return m == 10;
  if (contains_k33_spanning(g)) return true;
  auto cert = canonical_form(g);
  if (auto it = memo.find(cert); it != memo.end()) return it->second;
  bool found = false;
  for (EdgeId e = 0; e < m && !found; ++e) found = has_kuratowski_subdivision(delete_edge(g, e), memo);
  memo.emplace(std::move(cert), found);
  return found;
}

}  // namespace

bool kuratowski_oracle(const MultiGraph& g, std::size_t max_vertices) {
  MultiGraph s = simplify(g);
  if (s.num_vertices() > max_vertices) {
    throw std::length_error("kuratowski_oracle refused: " + std::to_string(s.num_vertices()) +
                            " vertices exceeds guard of " + std::to_string(max_vertices));
  }
  thread_local std::unordered_map<CanonicalCert, bool, CanonicalCertHash> memo;
  return !has_kuratowski_subdivision(s, memo);
}

}  // namespace minorforge
