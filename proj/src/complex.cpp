#include "minorforge/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "minorforge/surgery.hpp"

namespace minorforge {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

// Start and end vertex of a traversal, or nothing for an invalid edge/dir.
std::optional<std::pair<VertexId, VertexId>> ends(const MultiGraph& g, const Step& s) {
  if (!g.has_edge(s.edge) || (s.dir != 1 && s.dir != -1)) return std::nullopt;
  const auto& e = g.edge(s.edge);
  return s.dir == 1 ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

std::optional<std::string> walk_problem(const MultiGraph& g, VertexId start, std::span<const Step> steps,
                                        bool closed) {
  if (!g.has_vertex(start)) return "start vertex " + std::to_string(start) + " does not exist";
  VertexId at = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto se = ends(g, steps[i]);
    if (!se) return "step " + std::to_string(i) + " uses a missing edge or bad direction";
    if (se->first != at) {
      return "step " + std::to_string(i) + " leaves from " + std::to_string(se->first) + " but the walk is at " +
             std::to_string(at);
    }
    at = se->second;
  }
  if (closed && at != start) return "walk ends at " + std::to_string(at) + ", not at its start";
  return std::nullopt;
}

void require_walk(const MultiGraph& g, const ClosedWalk& w) {
  if (auto p = walk_problem(g, w.start, w.steps, true)) fail("invalid closed walk: " + *p);
}

void require_path(const MultiGraph& g, const Path& p) {
  if (auto msg = walk_problem(g, p.start, p.steps, false)) fail("invalid path: " + *msg);
}

void require_cell(const TwoComplex& x, CellId c) {
  if (c >= x.cells.size()) fail("cell " + std::to_string(c) + " does not exist");
}

VertexId path_end(const MultiGraph& g, const Path& p) {
  return walk_vertices(g, p.start, p.steps).back();
}

// Vertex at which step i of a closed walk leaves.
VertexId vertex_at(const std::vector<VertexId>& vs, std::size_t i) { return vs[i]; }

ClosedWalk rotate(const ClosedWalk& w, const std::vector<VertexId>& vs, std::size_t i) {
  ClosedWalk out{vertex_at(vs, i), {}};
  const std::size_t n = w.steps.size();
  for (std::size_t k = 0; k < n; ++k) out.steps.push_back(w.steps[(i + k) % n]);
  return out;
}

// Rotation of w (or of its reverse) that starts with the path p.
std::optional<ClosedWalk> rotate_to(const MultiGraph& g, const ClosedWalk& w, const Path& p) {
  for (const auto& cand : {w, reversed(g, w)}) {
    const std::size_t n = cand.steps.size();
    if (p.steps.size() > n) continue;
    auto vs = walk_vertices(g, cand.start, cand.steps);
    if (n == 0) {
      if (cand.start == p.start) return cand;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (vs[i] != p.start) continue;
      bool match = true;
      for (std::size_t j = 0; j < p.steps.size() && match; ++j) match = cand.steps[(i + j) % n] == p.steps[j];
      if (match) return rotate(cand, vs, i);
    }
  }
  return std::nullopt;
}

// Lexicographically least rotation/reflection, as tokens.
std::vector<std::uint32_t> walk_tokens(const MultiGraph& g, const ClosedWalk& w) {
  if (w.steps.empty()) return {0xffffffffu, w.start};
  std::vector<std::uint32_t> best;
  for (const auto& cand : {w, reversed(g, w)}) {
    auto vs = walk_vertices(g, cand.start, cand.steps);
    const std::size_t n = cand.steps.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> t;
      t.reserve(3 * n);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& s = cand.steps[(i + k) % n];
        t.push_back(vs[(i + k) % n]);
        t.push_back(s.edge);
        t.push_back(s.dir == 1 ? 1 : 0);
      }
      if (best.empty() || t < best) best = std::move(t);
    }
  }
  return best;
}

ClosedWalk walk_from_tokens(const std::vector<std::uint32_t>& t) {
  if (t.size() == 2 && t[0] == 0xffffffffu) return {t[1], {}};
  ClosedWalk w{t[0], {}};
  for (std::size_t i = 0; i < t.size(); i += 3) {
    w.steps.push_back({t[i + 1], static_cast<std::int8_t>(t[i + 2] ? 1 : -1)});
  }
  return w;
}

// Quotient of a complex: vertex classes, and per edge either kept, mapped onto
// another edge (with orientation sign) or squeezed to a point.
class Identification {
 public:
  explicit Identification(const TwoComplex& x)
      : x_(x), parent_(x.skeleton.num_vertices()), fate_(x.skeleton.num_edges()) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void squeeze(EdgeId e) { fate_[e] = Fate{Fate::Squeeze, 0, 0}; }
  void map(EdgeId from, EdgeId to, int sign) { fate_[from] = Fate{Fate::Map, to, sign}; }
  bool touched(EdgeId e) const { return fate_[e].kind != Fate::Keep; }
  void drop_cell(CellId c) { dropped_.push_back(c); }

  TwoComplex apply() {
    const auto& g = x_.skeleton;
    std::vector<VertexId> vid(g.num_vertices());
    std::vector<VertexId> class_id(g.num_vertices(), kNone);
    VertexId next = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto r = find(v);
      if (class_id[r] == kNone) class_id[r] = next++;
      vid[v] = class_id[r];
    }
    TwoComplex out{MultiGraph(next), {}};
    std::vector<EdgeId> eid(g.num_edges(), kNone);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (fate_[e].kind != Fate::Keep) continue;
      eid[e] = static_cast<EdgeId>(out.skeleton.num_edges());
      out.skeleton.add_edge(vid[g.edge(e).u], vid[g.edge(e).v]);
    }
    std::sort(dropped_.begin(), dropped_.end());
    for (CellId c = 0; c < x_.cells.size(); ++c) {
      if (std::binary_search(dropped_.begin(), dropped_.end(), c)) continue;
      const auto& w = x_.cells[c].boundary;
      ClosedWalk nw{vid[w.start], {}};
      for (auto s : w.steps) {
        int dir = s.dir;
        EdgeId e = s.edge;
        for (std::size_t hops = 0; fate_[e].kind == Fate::Map; ++hops) {
          if (hops > fate_.size()) fail("cyclic edge identification");
          dir *= fate_[e].sign;
          e = fate_[e].target;
        }
        if (fate_[e].kind == Fate::Squeeze) continue;
        nw.steps.push_back({eid[e], static_cast<std::int8_t>(dir)});
      }
      if (auto p = walk_problem(out.skeleton, nw.start, nw.steps, true)) {
        fail("identification is inconsistent with cell " + std::to_string(c) + ": " + *p);
      }
      out.cells.push_back({std::move(nw)});
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  struct Fate {
    enum Kind { Keep, Map, Squeeze } kind = Keep;
    EdgeId target = 0;
    int sign = 1;
  };
  const TwoComplex& x_;
  std::vector<VertexId> parent_;
  std::vector<Fate> fate_;
  std::vector<CellId> dropped_;
};

}  // namespace

std::vector<VertexId> walk_vertices(const MultiGraph& g, VertexId start, std::span<const Step> steps) {
  if (auto p = walk_problem(g, start, steps, false)) fail("invalid walk: " + *p);
  std::vector<VertexId> out{start};
  for (const auto& s : steps) out.push_back(ends(g, s)->second);
  return out;
}

namespace {

std::vector<Step> steps_through(const MultiGraph& g, std::span<const VertexId> vs, bool closed) {
  std::vector<Step> out;
  const std::size_t n = vs.size();
  const std::size_t count = closed ? n : n - 1;
  for (std::size_t i = 0; i < count; ++i) {
    VertexId a = vs[i], b = vs[(i + 1) % n];
    auto between = g.edges_between(a, b);
    if (between.empty()) fail("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    EdgeId e = between.front();
    out.push_back({e, static_cast<std::int8_t>(g.edge(e).u == a ? 1 : -1)});
  }
  return out;
}

}  // namespace

ClosedWalk closed_walk(const MultiGraph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) fail("closed walk needs at least one vertex");
  std::vector<VertexId> vs(vertices.begin(), vertices.end());
  if (vs.size() >= 2 && vs.front() == vs.back()) vs.pop_back();
  if (!g.has_vertex(vs[0])) fail("vertex " + std::to_string(vs[0]) + " does not exist");
  if (vs.size() == 1) return {vs[0], {}};
  return {vs[0], steps_through(g, vs, true)};
}

ClosedWalk closed_walk(const MultiGraph& g, std::initializer_list<VertexId> vertices) {
  return closed_walk(g, std::span<const VertexId>(vertices.begin(), vertices.size()));
}

Path path_through(const MultiGraph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) fail("path needs at least one vertex");
  if (!g.has_vertex(vertices[0])) fail("vertex " + std::to_string(vertices[0]) + " does not exist");
  return {vertices[0], steps_through(g, vertices, false)};
}

Path path_through(const MultiGraph& g, std::initializer_list<VertexId> vertices) {
  return path_through(g, std::span<const VertexId>(vertices.begin(), vertices.size()));
}

ClosedWalk reversed(const MultiGraph& g, const ClosedWalk& w) {
  require_walk(g, w);
  ClosedWalk out{w.start, {}};
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    out.steps.push_back({it->edge, static_cast<std::int8_t>(-it->dir)});
  }
  return out;
}

Path reversed(const MultiGraph& g, const Path& p) {
  Path out{path_end(g, p), {}};
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
    out.steps.push_back({it->edge, static_cast<std::int8_t>(-it->dir)});
  }
  return out;
}

bool equivalent_walks(const MultiGraph& g, const ClosedWalk& a, const ClosedWalk& b) {
  return a.steps.size() == b.steps.size() && walk_tokens(g, a) == walk_tokens(g, b);
}

bool is_regular(const MultiGraph& g, const ClosedWalk& w) {
  if (w.steps.empty()) return false;
  auto vs = walk_vertices(g, w.start, w.steps);
  if (vs.back() != w.start) return false;
  vs.pop_back();
  std::vector<EdgeId> es;
  for (const auto& s : w.steps) es.push_back(s.edge);
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end() && std::adjacent_find(es.begin(), es.end()) == es.end();
}

std::optional<Violation> validate(const TwoComplex& x) {
  for (CellId c = 0; c < x.cells.size(); ++c) {
    const auto& w = x.cells[c].boundary;
    if (auto p = walk_problem(x.skeleton, w.start, w.steps, true)) return Violation{c, *p};
  }
  return std::nullopt;
}

long euler_characteristic(const TwoComplex& x) {
  return static_cast<long>(x.skeleton.num_vertices()) - static_cast<long>(x.skeleton.num_edges()) +
         static_cast<long>(x.cells.size());
}

TwoComplex attach_cell(const TwoComplex& x, const ClosedWalk& w) {
  require_walk(x.skeleton, w);
  TwoComplex out = x;
  out.cells.push_back({w});
  return out;
}

TwoComplex remove_cell(const TwoComplex& x, CellId c) {
  require_cell(x, c);
  TwoComplex out = x;
  out.cells.erase(out.cells.begin() + c);
  return out;
}

TwoComplex regular_subcomplex(const TwoComplex& x) {
  TwoComplex out{x.skeleton, {}};
  for (const auto& cell : x.cells) {
    if (is_regular(x.skeleton, cell.boundary)) out.cells.push_back(cell);
  }
  return out;
}

TwoComplex normalize_cells(const TwoComplex& x) {
  std::vector<std::vector<std::uint32_t>> toks;
  for (const auto& cell : x.cells) toks.push_back(walk_tokens(x.skeleton, cell.boundary));
  std::sort(toks.begin(), toks.end());
  TwoComplex out{x.skeleton, {}};
  for (const auto& t : toks) out.cells.push_back({walk_from_tokens(t)});
  return out;
}

bool is_subcomplex(const TwoComplex& small, const TwoComplex& big) {
  const auto& gs = small.skeleton;
  const auto& gb = big.skeleton;
  if (gs.num_vertices() > gb.num_vertices()) return false;
  // k-th parallel edge of small maps to the k-th of big, same orientation.
  std::map<std::pair<VertexId, VertexId>, std::size_t> used;
  std::vector<Step> emap(gs.num_edges());
  for (EdgeId e = 0; e < gs.num_edges(); ++e) {
    const auto& r = gs.edge(e);
    auto key = std::minmax(r.u, r.v);
    auto cand = gb.edges_between(r.u, r.v);
    std::size_t& k = used[key];
    if (k >= cand.size()) return false;
    EdgeId f = cand[k++];
    emap[e] = {f, static_cast<std::int8_t>(gb.edge(f).u == r.u ? 1 : -1)};
  }
  std::vector<std::vector<std::uint32_t>> have, want;
  for (const auto& cell : big.cells) have.push_back(walk_tokens(gb, cell.boundary));
  for (const auto& cell : small.cells) {
    ClosedWalk w{cell.boundary.start, {}};
    for (auto s : cell.boundary.steps) {
      w.steps.push_back({emap[s.edge].edge, static_cast<std::int8_t>(s.dir * emap[s.edge].dir)});
    }
    want.push_back(walk_tokens(gb, w));
  }
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  return std::includes(have.begin(), have.end(), want.begin(), want.end());
}

std::size_t default_cycle_cap() {
  if (const char* env = std::getenv("MINORFORGE_CYCLE_CAP")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    fail(std::string("MINORFORGE_CYCLE_CAP is not a positive integer: ") + env);
  }
  return 100000;
}

namespace {

class CycleCollector {
 public:
  CycleCollector(const MultiGraph& g, std::size_t cap, bool induced)
      : g_(g), n_(g.num_vertices()), cap_(cap), induced_(induced), adj_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      if (!e.is_loop()) adj_[e.u * n_ + e.v] = adj_[e.v * n_ + e.u] = 1;
    }
  }

  // Vertex cycles of length >= 3, each once.
  void run() {
    for (VertexId s = 0; s < n_; ++s) {
      path_ = {s};
      on_path_.assign(n_, 0);
      on_path_[s] = 1;
      extend(s);
    }
  }

  std::vector<std::vector<VertexId>> cycles;

  void count(std::size_t k) {
    total_ += k;
    if (total_ > cap_) {
      throw CycleCapExceeded(cap_, std::string(induced_ ? "chordless cycle" : "cycle") + " count exceeds cap " +
                                       std::to_string(cap_) + " (at least " + std::to_string(total_) + ")");
    }
  }

 private:
  bool adj(VertexId a, VertexId b) const { return adj_[a * n_ + b]; }

  void extend(VertexId s) {
    const VertexId last = path_.back();
    for (VertexId w = s + 1; w < n_; ++w) {
      if (!adj(last, w) || on_path_[w]) continue;
      if (induced_) {
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path_.size() && !chord; ++i) chord = adj(path_[i], w);
        if (chord) continue;
        if (path_.size() >= 2 && adj(s, w)) {
          if (path_[1] < w) close(w);
          continue;
        }
      } else if (path_.size() >= 2 && adj(s, w) && path_[1] < w) {
        close(w);
      }
      on_path_[w] = 1;
      path_.push_back(w);
      extend(s);
      path_.pop_back();
      on_path_[w] = 0;
    }
  }

  void close(VertexId w) {
    auto c = path_;
    c.push_back(w);
    std::size_t variants = 1;
    if (!induced_) {
      for (std::size_t i = 0; i < c.size(); ++i) variants *= g_.multiplicity(c[i], c[(i + 1) % c.size()]);
    }
    count(variants);
    cycles.push_back(std::move(c));
  }

  const MultiGraph& g_;
  std::size_t n_;
  std::size_t cap_;
  bool induced_;
  std::vector<char> adj_;
  std::vector<VertexId> path_;
  std::vector<char> on_path_;
  std::size_t total_ = 0;
};

Step step_on(const MultiGraph& g, EdgeId e, VertexId from) {
  return {e, static_cast<std::int8_t>(g.edge(e).u == from ? 1 : -1)};
}

}  // namespace

TwoComplex full_complex(const MultiGraph& g, FullVariant variant, std::optional<std::size_t> cap) {
  const bool induced = variant == FullVariant::Induced;
  if (induced && !g.is_simple()) fail("the induced full complex needs a simple graph");
  CycleCollector collect(g, cap.value_or(default_cycle_cap()), induced);
  TwoComplex out{g, {}};

  if (!induced) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!g.edge(e).is_loop()) continue;
      collect.count(1);
      out.cells.push_back({ClosedWalk{g.edge(e).u, {{e, 1}}}});
    }
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
        auto par = g.edges_between(u, v);
        for (std::size_t i = 0; i < par.size(); ++i) {
          for (std::size_t j = i + 1; j < par.size(); ++j) {
            collect.count(1);
            out.cells.push_back({ClosedWalk{u, {step_on(g, par[i], u), step_on(g, par[j], v)}}});
          }
        }
      }
    }
  }

  collect.run();
  for (const auto& c : collect.cycles) {
    const std::size_t k = c.size();
    std::vector<std::vector<EdgeId>> choices(k);
    for (std::size_t i = 0; i < k; ++i) choices[i] = g.edges_between(c[i], c[(i + 1) % k]);
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      ClosedWalk w{c[0], {}};
      for (std::size_t i = 0; i < k; ++i) w.steps.push_back(step_on(g, choices[i][pick[i]], c[i]));
      out.cells.push_back({std::move(w)});
      std::size_t i = 0;
      while (i < k && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == k) break;
    }
  }
  return out;
}

TwoComplex join_cells(const TwoComplex& x, CellId c1, CellId c2, const Path& gamma, bool allow_long) {
  require_cell(x, c1);
  require_cell(x, c2);
  if (c1 == c2) fail("join_cells needs two different cells");
  if (gamma.steps.size() > 1 && !allow_long) {
    fail("joining along a path of length " + std::to_string(gamma.steps.size()) + " needs the override flag");
  }
  const auto& g = x.skeleton;
  require_path(g, gamma);
  auto r1 = rotate_to(g, x.cells[c1].boundary, gamma);
  if (!r1) fail("gamma does not lie on the boundary of cell " + std::to_string(c1));
  auto back = reversed(g, gamma);
  auto r2 = rotate_to(g, x.cells[c2].boundary, back);
  if (!r2) fail("gamma does not lie on the boundary of cell " + std::to_string(c2));

  const std::size_t len = gamma.steps.size();
  ClosedWalk joined{path_end(g, gamma), {}};
  joined.steps.assign(r1->steps.begin() + len, r1->steps.end());
  joined.steps.insert(joined.steps.end(), r2->steps.begin() + len, r2->steps.end());

  TwoComplex out = x;
  auto [lo, hi] = std::minmax(c1, c2);
  out.cells[lo] = {joined};
  out.cells.erase(out.cells.begin() + hi);
  return out;
}

TwoComplex clone_cell(const TwoComplex& x, CellId c) {
  require_cell(x, c);
  TwoComplex out = x;
  out.cells.push_back(x.cells[c]);
  return out;
}

TwoComplex reroute_cell(const TwoComplex& x, CellId c, const Path& gamma1, const Path& gamma2, bool allow_long) {
  require_cell(x, c);
  if (gamma1.steps.size() > 1 && !allow_long) {
    fail("rerouting from a path of length " + std::to_string(gamma1.steps.size()) + " needs the override flag");
  }
  const auto& g = x.skeleton;
  require_path(g, gamma1);
  require_path(g, gamma2);
  const VertexId p = gamma1.start, q = path_end(g, gamma1);
  Path to = gamma2;
  if (to.start != p || path_end(g, to) != q) {
    to = reversed(g, gamma2);
    if (to.start != p || path_end(g, to) != q) fail("gamma2 does not have the same ends as gamma1");
  }
  auto r = rotate_to(g, x.cells[c].boundary, gamma1);
  if (!r) fail("gamma1 does not lie on the boundary of cell " + std::to_string(c));
  if (gamma1 == to) return x;
  ClosedWalk w{p, to.steps};
  w.steps.insert(w.steps.end(), r->steps.begin() + gamma1.steps.size(), r->steps.end());
  TwoComplex out = x;
  out.cells[c] = {w};
  return out;
}

TwoComplex collapse_cell(const TwoComplex& x, CellId c, const CollapseSplit& split) {
  require_cell(x, c);
  const auto& g = x.skeleton;
  const auto& w = x.cells[c].boundary;
  if (!is_regular(g, w)) fail("only cells with a regular boundary can be collapsed");
  const std::size_t n = w.steps.size();
  if (split.first_length == 0 || split.first_length >= n) fail("both paths of the split must be nonempty");
  if (split.offset >= n) fail("split offset is out of range");
  auto vs = walk_vertices(g, w.start, w.steps);
  auto r = rotate(w, vs, split.offset);
  const std::size_t k1 = split.first_length, k2 = n - k1;
  std::vector<Step> g1(r.steps.begin(), r.steps.begin() + k1);
  Path tail{0, std::vector<Step>(r.steps.begin() + k1, r.steps.end())};
  tail.start = walk_vertices(g, r.start, g1).back();
  std::vector<Step> g2 = reversed(g, tail).steps;

  auto moves = split.moves;
  if (moves.empty()) {
    moves.assign(std::min(k1, k2), CollapseMove::Both);
    moves.insert(moves.end(), k1 > k2 ? k1 - k2 : k2 - k1, k1 > k2 ? CollapseMove::FirstOnly : CollapseMove::SecondOnly);
  }
  std::size_t uses1 = 0, uses2 = 0;
  for (auto m : moves) {
    uses1 += m != CollapseMove::SecondOnly;
    uses2 += m != CollapseMove::FirstOnly;
  }
  if (uses1 != k1 || uses2 != k2) fail("collapse moves do not match the split path lengths");

  Identification id(x);
  VertexId at1 = r.start, at2 = r.start;
  std::size_t i1 = 0, i2 = 0;
  for (auto m : moves) {
    if (m == CollapseMove::Both) {
      auto a = g1[i1++], b = g2[i2++];
      at1 = ends(g, a)->second;
      at2 = ends(g, b)->second;
      id.unite(at1, at2);
      id.map(b.edge, a.edge, a.dir * b.dir);
    } else if (m == CollapseMove::FirstOnly) {
      auto a = g1[i1++];
      at1 = ends(g, a)->second;
      id.unite(at1, at2);
      id.squeeze(a.edge);
    } else {
      auto b = g2[i2++];
      at2 = ends(g, b)->second;
      id.unite(at1, at2);
      id.squeeze(b.edge);
    }
  }
  id.drop_cell(c);
  return id.apply();
}

TwoComplex collapse_cylinder(const TwoComplex& x, const Cylinder& cyl) {
  const auto& g = x.skeleton;
  Identification id(x);
  std::map<VertexId, const CylinderRung*> by_bottom;
  for (const auto& r : cyl.rungs) {
    if (!g.has_edge(r.rung) || !g.edge(r.rung).joins(r.v0, r.v1) || r.v0 == r.v1) {
      fail("rung " + std::to_string(r.rung) + " does not join its two layer vertices");
    }
    if (!by_bottom.emplace(r.v0, &r).second) fail("two rungs share a bottom vertex");
    if (id.touched(r.rung)) fail("rung edge used twice");
    id.squeeze(r.rung);
    id.unite(r.v0, r.v1);
  }
  std::vector<CellId> cells;
  for (const auto& sq : cyl.squares) {
    require_cell(x, sq.cell);
    if (!g.has_edge(sq.e0) || !g.has_edge(sq.e1)) fail("square edge does not exist");
    const auto& e0 = g.edge(sq.e0);
    const auto& e1 = g.edge(sq.e1);
    auto ru = by_bottom.find(e0.u), rv = by_bottom.find(e0.v);
    if (ru == by_bottom.end() || rv == by_bottom.end()) fail("bottom edge ends are not cylinder vertices");
    int sign;
    if (e1.u == ru->second->v1 && e1.v == rv->second->v1) sign = 1;
    else if (e1.u == rv->second->v1 && e1.v == ru->second->v1) sign = -1;
    else fail("top edge " + std::to_string(sq.e1) + " does not lie over bottom edge " + std::to_string(sq.e0));
    std::vector<EdgeId> want{sq.e0, sq.e1, ru->second->rung, rv->second->rung};
    std::vector<EdgeId> have;
    for (auto s : x.cells[sq.cell].boundary.steps) have.push_back(s.edge);
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) fail("cell " + std::to_string(sq.cell) + " is not the square over edge " + std::to_string(sq.e0));
    if (id.touched(sq.e1) || sq.e0 == sq.e1) fail("top edge used twice");
    id.map(sq.e1, sq.e0, sign);
    cells.push_back(sq.cell);
  }
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) fail("square cell used twice");
  for (auto c : cells) id.drop_cell(c);
  return id.apply();
}

EdgeCloneResult clone_edge_complex(const TwoComplex& x, EdgeId e) {
  const auto& g = x.skeleton;
  if (!g.has_edge(e)) fail("edge " + std::to_string(e) + " does not exist");
  auto [skeleton, clone] = clone_edge_graph(g, e);
  TwoComplex out{std::move(skeleton), x.cells};
  out.cells.push_back({ClosedWalk{g.edge(e).u, {{e, 1}, {clone, -1}}}});
  for (const auto& cell : x.cells) {
    const auto& steps = cell.boundary.steps;
    if (std::none_of(steps.begin(), steps.end(), [e](const Step& s) { return s.edge == e; })) continue;
    TwoCell copy = cell;
    for (auto& s : copy.boundary.steps) {
      if (s.edge == e) s.edge = clone;
    }
    out.cells.push_back(std::move(copy));
  }
  return {std::move(out), clone};
}

TwoComplex merge_parallel_edges(const TwoComplex& x, EdgeId e1, EdgeId e2) {
  const auto& g = x.skeleton;
  if (!g.has_edge(e1) || !g.has_edge(e2)) fail("edge does not exist");
  if (e1 == e2) fail("cannot merge an edge with itself");
  const auto& a = g.edge(e1);
  const auto& b = g.edge(e2);
  int sign;
  if (a.u == b.u && a.v == b.v) sign = 1;
  else if (a.u == b.v && a.v == b.u) sign = -1;
  else fail("edges " + std::to_string(e1) + " and " + std::to_string(e2) + " are not parallel");
  Identification id(x);
  id.map(e2, e1, sign);
  return id.apply();
}

StellifyResult stellify(const TwoComplex& x, const ClosedWalk& cycle, bool on_graph_only) {
  const auto& g = x.skeleton;
  require_walk(g, cycle);
  if (cycle.steps.size() < 3 || !is_regular(g, cycle)) fail("stellify needs a cycle of length at least 3");
  auto vs = walk_vertices(g, cycle.start, cycle.steps);
  vs.pop_back();

  StellifyResult res{{MultiGraph(g.num_vertices() + 1), {}}, static_cast<VertexId>(g.num_vertices()), false};
  std::vector<char> on_cycle(g.num_edges(), 0);
  for (auto s : cycle.steps) on_cycle[s.edge] = 1;
  std::vector<EdgeId> eid(g.num_edges(), 0);
  auto& sk = res.complex.skeleton;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (on_cycle[e]) continue;
    eid[e] = static_cast<EdgeId>(sk.num_edges());
    sk.add_edge(g.edge(e).u, g.edge(e).v);
  }
  std::vector<EdgeId> spoke(g.num_vertices(), 0);
  for (auto v : vs) spoke[v] = sk.add_edge(v, res.hub);

  for (const auto& cell : x.cells) {
    if (equivalent_walks(g, cell.boundary, cycle)) res.had_cell_on_cycle = true;
    if (on_graph_only) continue;
    ClosedWalk w{cell.boundary.start, {}};
    for (auto s : cell.boundary.steps) {
      if (!on_cycle[s.edge]) {
        w.steps.push_back({eid[s.edge], s.dir});
        continue;
      }
      auto [from, to] = *ends(g, s);
      w.steps.push_back({spoke[from], 1});
      w.steps.push_back({spoke[to], -1});
    }
    res.complex.cells.push_back({std::move(w)});
  }
  return res;
}

TwoComplex contract_edge_complex(const TwoComplex& x, EdgeId e) {
  const auto& g = x.skeleton;
  if (!g.has_edge(e)) fail("edge " + std::to_string(e) + " does not exist");
  if (g.edge(e).is_loop()) fail("cannot contract a loop");
  Identification id(x);
  id.unite(g.edge(e).u, g.edge(e).v);
  id.squeeze(e);
  return id.apply();
}

TwoComplex complete_complex(std::size_t n) {
  TwoComplex out{complete_graph(n), {}};
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) out.cells.push_back({closed_walk(out.skeleton, {a, b, c})});
    }
  }
  return out;
}

TwoComplex k7_minus_delta() {
  auto out = complete_complex(7);
  out.cells.erase(out.cells.begin());  // cell on 0, 1, 2 comes first
  return out;
}

std::vector<VertexId> fkt_long_cell_vertices() {
  // x6 x5 x4 x6 y6 y5 y4 y6 x6 x4 x5 x6 y6 y4 y5 y6 x6, with xi = i-1 and yi = i+6.
  return {5, 4, 3, 5, 12, 11, 10, 12, 5, 3, 4, 5, 12, 10, 11, 12, 5};
}

TwoComplex fkt_complex() {
  TwoComplex out{MultiGraph(14), {}};
  auto& g = out.skeleton;
  for (VertexId off : {0u, 7u}) {
    for (VertexId a = 0; a < 7; ++a) {
      for (VertexId b = a + 1; b < 7; ++b) g.add_edge(off + a, off + b);
    }
  }
  g.add_edge(5, 12);
  for (VertexId off : {0u, 7u}) {
    for (VertexId a = 0; a < 7; ++a) {
      for (VertexId b = a + 1; b < 7; ++b) {
        for (VertexId c = b + 1; c < 7; ++c) {
          if (a == 3 && b == 4 && c == 5) continue;
          out.cells.push_back({closed_walk(g, {off + a, off + b, off + c})});
        }
      }
    }
  }
  out.cells.push_back({closed_walk(g, fkt_long_cell_vertices())});
  return out;
}

}  // namespace minorforge
