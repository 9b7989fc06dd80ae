#include <doctest.h>

#include <set>
#include <stdexcept>

#include "minorforge/canon.hpp"
#include "minorforge/families.hpp"
#include "minorforge/minors.hpp"
#include "minorforge/surgery.hpp"
#include "oracles.hpp"

using namespace minorforge;

namespace {

std::vector<EdgeId> cycle_edges(const MultiGraph& g, const std::vector<VertexId>& vs) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out.push_back(g.edges_between(vs[i], vs[(i + 1) % vs.size()]).front());
  }
  return out;
}

void check_decomposition(const MultiGraph& g, const std::vector<EdgeId>& cycle, const CycleDecomposition& d) {
  std::vector<int> parity(g.num_edges(), 0);
  for (const auto& part : d.parts) {
    for (auto e : part) parity[e] ^= 1;
    // each part is a chordless cycle
    std::vector<std::size_t> deg(g.num_vertices(), 0);
    for (auto e : part) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      bool in_part = std::find(part.begin(), part.end(), e) != part.end();
      if (!in_part) CHECK_FALSE((deg[g.edge(e).u] && deg[g.edge(e).v]));
    }
    for (auto x : deg) CHECK((x == 0 || x == 2));
  }
  std::vector<int> expected(g.num_edges(), 0);
  for (auto e : cycle) expected[e] = 1;
  CHECK(parity == expected);
}

}  // namespace

TEST_CASE("one_step_minors") {
  auto k7 = one_step_minors(complete_graph(7));
  REQUIRE(k7.size() == 2);
  CHECK(k7[0].kind == MinorKind::Delete);
  CHECK(are_isomorphic(k7[0].graph, delete_edge(complete_graph(7), 0)));
  CHECK(k7[1].kind == MinorKind::Contract);
  CHECK(are_isomorphic(k7[1].graph, complete_graph(6)));

  auto tri = one_step_minors(cycle_graph(3));
  REQUIRE(tri.size() == 2);
  CHECK(are_isomorphic(tri[0].graph, path_graph(3)));
  CHECK(are_isomorphic(tri[1].graph, path_graph(2)));

  for (const auto& m : heawood_family().members) {
    auto steps = one_step_minors(m.graph);
    CHECK(steps.size() >= 1);
    CHECK(steps.size() <= 2 * m.graph.num_edges());
    for (const auto& s : steps) CHECK(s.result == canonical_form(s.graph));
  }
}

TEST_CASE("one_step_minors is complete") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(6, 0.5, rng);
    auto steps = one_step_minors(g);
    std::set<CanonicalCert> listed;
    for (const auto& s : steps) listed.insert(s.result);
    CHECK(listed.size() == steps.size());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      CHECK(listed.count(canonical_form(delete_edge(g, e))) == 1);
      CHECK(listed.count(canonical_form(contract_edge(g, e, true))) == 1);
    }
  }
}

TEST_CASE("has_minor examples") {
  // Both have 15 edges and the Petersen graph has girth 5.
  CHECK_FALSE(has_minor(petersen_graph(), complete_graph(6)));
  CHECK(has_minor(petersen_graph(), complete_graph(5)));
  CHECK(has_minor(petersen_graph(), complete_multipartite({3, 3})));
  CHECK_FALSE(has_minor(complete_graph(5), complete_graph(6)));
  CHECK(has_minor(cycle_graph(4), MultiGraph(1)));
  CHECK(has_minor(MultiGraph(3), MultiGraph(2)));
  CHECK(has_minor(heawood_graph(), complete_graph(4)));
  CHECK(has_minor(complete_graph(7), complete_graph(7)));
}

TEST_CASE("has_minor agrees with the branch-set oracle") {
  std::mt19937_64 rng(31);
  const MultiGraph targets[] = {complete_graph(4), complete_graph(5), complete_multipartite({3, 3}),
                                cycle_graph(4), complete_multipartite({1, 3}), path_graph(4),
                                complete_multipartite({2, 3})};
  int yes = 0, no = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(6 + trial % 2, 0.55, rng);
    for (const auto& h : targets) {
      bool expected = oracle::brute_has_minor(g, h);
      CHECK(has_minor(g, h) == expected);
      (expected ? yes : no) += 1;
    }
  }
  CHECK(yes > 50);
  CHECK(no > 50);
}

TEST_CASE("has_minor is reflexive, transitive and monotone") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(8, 0.5, rng);
    CHECK(has_minor(g, g));
    auto steps = one_step_minors(g);
    if (steps.empty()) continue;
    const auto& m1 = steps[trial % steps.size()].graph;
    auto steps2 = one_step_minors(m1);
    if (steps2.empty()) continue;
    const auto& m2 = steps2[trial % steps2.size()].graph;
    CHECK(has_minor(g, m1));
    CHECK(has_minor(m1, m2));
    CHECK(has_minor(g, m2));
    // adding an edge to g keeps every minor
    for (VertexId u = 0; u < 8; ++u) {
      for (VertexId v = u + 1; v < 8; ++v) {
        if (g.adjacent(u, v)) continue;
        auto bigger = g;
        bigger.add_edge(u, v);
        CHECK(has_minor(bigger, m2));
        u = v = 8;
      }
    }
  }
}

TEST_CASE("is_linkless") {
  CHECK_FALSE(is_linkless(complete_graph(6)));
  CHECK_FALSE(is_linkless(complete_multipartite({3, 3, 1})));
  CHECK_FALSE(is_linkless(petersen_graph()));
  CHECK(is_linkless(complete_graph(5)));
  CHECK(is_linkless(complete_multipartite({3, 3})));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) CHECK(is_linkless(oracle::random_outerplanar(5 + t, rng)));
  // Octahedron-based planar triangulations.
  CHECK(is_linkless(complete_multipartite({2, 2, 2})));

  // Petersen-family members are minor-minimal.
  for (const auto& m : petersen_family().members) {
    CHECK_FALSE(is_linkless(m.graph));
    for (const auto& s : one_step_minors(m.graph)) CHECK(is_linkless(s.graph));
  }
}

TEST_CASE("is_linkless is minor-closed") {
  std::mt19937_64 rng(12);
  int linkless = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(7 + trial % 3, 0.45, rng);
    if (!is_linkless(g)) continue;
    ++linkless;
    for (const auto& s : one_step_minors(g)) CHECK(is_linkless(s.graph));
  }
  CHECK(linkless > 5);
}

TEST_CASE("is_locally_linkless") {
  auto k7 = is_locally_linkless(complete_graph(7));
  CHECK_FALSE(k7.locally_linkless);
  CHECK(k7.failing_vertex == VertexId{0});
  CHECK(non_linkless_neighbourhoods(complete_graph(7)).size() == 7);

  auto k3311 = complete_multipartite({3, 3, 1, 1});
  CHECK_FALSE(is_locally_linkless(k3311).locally_linkless);
  CHECK(non_linkless_neighbourhoods(k3311) == std::vector<VertexId>{6, 7});

  CHECK(is_locally_linkless(complete_graph(6)).locally_linkless);
  CHECK_FALSE(is_locally_linkless(complete_graph(6)).failing_vertex.has_value());
}

TEST_CASE("decompose_cycle_induced") {
  auto c5 = cycle_graph(5);
  std::vector<EdgeId> all{0, 1, 2, 3, 4};
  auto single = decompose_cycle_induced(c5, all);
  REQUIRE(single.parts.size() == 1);
  CHECK(single.parts[0] == all);

  auto k4 = complete_graph(4);
  auto square = cycle_edges(k4, {0, 1, 2, 3});
  auto d = decompose_cycle_induced(k4, square);
  CHECK(d.parts.size() == 2);
  for (const auto& p : d.parts) CHECK(p.size() == 3);
  check_decomposition(k4, square, d);

  auto k6 = complete_graph(6);
  auto ham = cycle_edges(k6, {0, 1, 2, 3, 4, 5});
  auto dk6 = decompose_cycle_induced(k6, ham);
  CHECK(dk6.parts.size() == 4);
  for (const auto& p : dk6.parts) CHECK(p.size() == 3);
  check_decomposition(k6, ham, dk6);

  std::vector<EdgeId> path{0, 1};
  CHECK_THROWS_AS(decompose_cycle_induced(c5, path), std::invalid_argument);
  std::vector<EdgeId> bogus{0, 1, 99};
  CHECK_THROWS_AS(decompose_cycle_induced(c5, bogus), std::invalid_argument);
  auto two = disjoint_union(cycle_graph(3), cycle_graph(3));
  std::vector<EdgeId> both{0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(decompose_cycle_induced(two, both), std::invalid_argument);
}

TEST_CASE("cycle decomposition property on random instances") {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto g = oracle::random_graph(7, 0.5, rng);
    auto cycles = oracle::all_simple_cycles(g);
    if (cycles.empty()) continue;
    const auto& c = cycles[rng() % cycles.size()];
    auto edges = cycle_edges(g, c);
    auto d = decompose_cycle_induced(g, edges);
    check_decomposition(g, edges, d);
    for (const auto& p : d.parts) CHECK(p.size() <= c.size());
    ++checked;
  }
  CHECK(checked > 60);
}
