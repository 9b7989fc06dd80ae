#include <doctest.h>

#include <set>

#include "minorforge/canon.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/graph_io.hpp"
#include "minorforge/surgery.hpp"
#include "oracles.hpp"

using namespace minorforge;

TEST_CASE("delete_edge") {
  auto tri = cycle_graph(3);
  for (EdgeId e = 0; e < 3; ++e) {
    auto p = delete_edge(tri, e);
    CHECK(p.num_vertices() == 3);
    CHECK(p.num_edges() == 2);
    CHECK(are_isomorphic(p, path_graph(3)));
  }
  auto k7e = delete_edge(complete_graph(7), 4);
  CHECK(k7e.num_vertices() == 7);
  CHECK(k7e.num_edges() == 20);

  MultiGraph digon(2, {{0, 1}, {0, 1}});
  CHECK(delete_edge(digon, 0) == MultiGraph(2, {{0, 1}}));
  CHECK_THROWS_AS(delete_edge(tri, 3), std::invalid_argument);
}

TEST_CASE("contract_edge") {
  auto tri = cycle_graph(3);
  auto simple = contract_edge(tri, 0, true);
  CHECK(simple == MultiGraph(2, {{0, 1}}));
  auto multi = contract_edge(tri, 0, false);
  CHECK(multi.num_vertices() == 2);
  CHECK(multi.multiplicity(0, 1) == 2);
  CHECK(are_isomorphic(contract_edge(complete_graph(7), 11, true), complete_graph(6)));

  MultiGraph loop(1, {{0, 0}});
  CHECK_THROWS_AS(contract_edge(loop, 0), std::invalid_argument);
}

TEST_CASE("simplify") {
  MultiGraph g(2, {{0, 1}, {1, 0}, {1, 1}});
  CHECK(simplify(g) == MultiGraph(2, {{0, 1}}));
  auto k4 = complete_graph(4);
  CHECK(simplify(k4) == k4);
  CHECK(simplify(contract_edge(cycle_graph(3), 1, false)) == MultiGraph(2, {{0, 1}}));
}

TEST_CASE("clone_edge_graph") {
  auto [g, c] = clone_edge_graph(MultiGraph(2, {{0, 1}}), 0);
  CHECK(c == 1);
  CHECK(g.multiplicity(0, 1) == 2);
  auto [l, c2] = clone_edge_graph(MultiGraph(1, {{0, 0}}), 0);
  CHECK(l.loop_count(0) == 2);
  CHECK(c2 == 1);
  CHECK_THROWS_AS(clone_edge_graph(g, 9), std::invalid_argument);
}

TEST_CASE("subdivide_edge") {
  auto [p, mid] = subdivide_edge(MultiGraph(2, {{0, 1}}), 0);
  CHECK(mid == 2);
  CHECK(are_isomorphic(p, path_graph(3)));
  CHECK(are_isomorphic(subdivide_edge(cycle_graph(3), 0).graph, cycle_graph(4)));
  auto [d, m2] = subdivide_edge(MultiGraph(1, {{0, 0}}), 0);
  CHECK(d.multiplicity(0, m2) == 2);
  CHECK_THROWS_AS(subdivide_edge(d, 5), std::invalid_argument);
}

TEST_CASE("delta_to_y and y_to_delta") {
  auto [k23, hub] = delta_to_y(complete_graph(4), {0, 1, 2});
  CHECK(hub == 4);
  CHECK(are_isomorphic(k23, complete_multipartite({2, 3})));

  auto star = delta_to_y(cycle_graph(3), {0, 1, 2}).graph;
  CHECK(are_isomorphic(star, complete_multipartite({1, 3})));

  auto big = delta_to_y(complete_graph(7), {0, 1, 2}).graph;
  CHECK(big.num_vertices() == 8);
  CHECK(big.num_edges() == 21);

  CHECK(are_isomorphic(y_to_delta(complete_multipartite({1, 3}), 0), cycle_graph(3)));
  CHECK(are_isomorphic(y_to_delta(k23, hub, true), complete_graph(4)));
  CHECK_THROWS_AS(delta_to_y(path_graph(3), {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(y_to_delta(complete_graph(5), 0), std::invalid_argument);

  // Multigraph: the lowest parallel edge per pair is removed.
  MultiGraph m(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
  auto r = delta_to_y(m, {0, 1, 2}).graph;
  CHECK(r.multiplicity(0, 1) == 1);
  CHECK(r.edge(0) == EdgeRec{0, 1});
}

TEST_CASE("y_to_delta inverts delta_to_y up to simplification") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(7, 0.5, rng);
    for (const auto& t : triangles(g)) {
      auto [y, hub] = delta_to_y(g, t);
      CHECK(are_isomorphic(y_to_delta(y, hub, true), simplify(g)));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("graph_join") {
  CHECK(are_isomorphic(graph_join(complete_graph(5), empty_graph(2)), delete_edge(complete_graph(7), 0)));
  CHECK(are_isomorphic(graph_join(complete_multipartite({3, 1, 1}), empty_graph(3)),
                       complete_multipartite({3, 3, 1, 1})));
  // The two new vertices form their own part.
  auto j = graph_join(complete_multipartite({3, 1, 1, 1}), empty_graph(2));
  CHECK(j.num_edges() == 24);
  CHECK(are_isomorphic(j, complete_multipartite({3, 2, 1, 1, 1})));
  CHECK_FALSE(are_isomorphic(j, complete_multipartite({3, 3, 1, 1})));
  auto p = petersen_graph();
  CHECK(graph_join(p, MultiGraph()) == p);
  CHECK_THROWS_AS(graph_join(MultiGraph(2, {{0, 1}, {0, 1}}), p), std::invalid_argument);
}

TEST_CASE("clique_sum") {
  VertexId tri[] = {0, 1, 2};
  auto s = clique_sum(complete_graph(6), complete_graph(6), tri, tri);
  CHECK(s.num_vertices() == 9);
  CHECK(s.num_edges() == 27);

  auto p = petersen_graph();
  VertexId edge_p[] = {0, 1};
  VertexId edge_k[] = {1, 0};
  CHECK(are_isomorphic(clique_sum(p, complete_graph(2), edge_p, edge_k), p));

  // Three K6's glued along a common K5 give K5 * complement(K3).
  VertexId k5[] = {0, 1, 2, 3, 4};
  auto two = clique_sum(complete_graph(6), complete_graph(6), k5, k5);
  auto three = clique_sum(two, complete_graph(6), k5, k5);
  CHECK(are_isomorphic(three, graph_join(complete_graph(5), empty_graph(3))));

  VertexId bad[] = {0, 1, 5};
  CHECK_THROWS_AS(clique_sum(p, complete_graph(3), bad, tri), std::invalid_argument);
}

TEST_CASE("neighborhood") {
  CHECK(are_isomorphic(neighborhood(complete_graph(7), 3), complete_graph(6)));
  auto k3311 = complete_multipartite({3, 3, 1, 1});
  CHECK(are_isomorphic(neighborhood(k3311, 6), complete_multipartite({3, 3, 1})));
  CHECK(neighborhood(MultiGraph(1), 0).num_vertices() == 0);
  CHECK_THROWS_AS(neighborhood(k3311, 8), std::invalid_argument);
}

TEST_CASE("canonical_form is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(2 + trial % 9, 0.4, rng);
    if (trial % 3 == 0 && g.num_edges() > 0) g = clone_edge_graph(g, 0).graph;
    if (trial % 5 == 0) g.add_edge(0, 0);
    auto h = oracle::random_relabel(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    auto phi = find_isomorphism(g, h);
    REQUIRE(phi.has_value());
    CHECK(is_isomorphism(g, h, *phi));
  }
  auto k33 = complete_multipartite({3, 3});
  auto k33e = k33;
  k33e.add_edge(0, 1);
  CHECK(canonical_form(k33) != canonical_form(k33e));
}

TEST_CASE("canonical classes of 5-vertex graphs match the brute-force oracle") {
  // Frozen from oracle::brute_isomorphism_class_count(5).
  constexpr std::size_t kClasses = 34;
  CHECK(oracle::brute_isomorphism_class_count(5) == kClasses);
  std::set<CanonicalCert> certs;
  for (std::uint32_t mask = 0; mask < 1024; ++mask) {
    MultiGraph g(5);
    std::uint32_t k = 0;
    for (VertexId i = 0; i < 5; ++i) {
      for (VertexId j = i + 1; j < 5; ++j, ++k) {
        if ((mask >> k) & 1) g.add_edge(i, j);
      }
    }
    certs.insert(canonical_form(g));
  }
  CHECK(certs.size() == kClasses);
}

TEST_CASE("cert equality agrees with the permutation oracle on small multigraphs") {
  std::mt19937_64 rng(5);
  int agree = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 3 + trial % 4;
    auto g = oracle::random_graph(n, 0.5, rng);
    auto h = oracle::random_graph(n, 0.5, rng);
    if (trial % 4 == 0 && g.num_edges()) g = clone_edge_graph(g, 0).graph;
    if (trial % 4 == 0 && h.num_edges()) h = clone_edge_graph(h, 0).graph;
    if (trial % 7 == 0) h = oracle::random_relabel(g, rng);
    bool brute = oracle::brute_isomorphic(g, h);
    CHECK(brute == (canonical_form(g) == canonical_form(h)));
    CHECK(brute == are_isomorphic(g, h));
    agree += brute;
  }
  CHECK(agree > 20);
}

TEST_CASE("are_isomorphic") {
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  // Petersen as the Kneser graph K(5,2).
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  MultiGraph kneser(10);
  for (VertexId i = 0; i < 10; ++i) {
    for (VertexId j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) kneser.add_edge(i, j);
    }
  }
  auto phi = find_isomorphism(petersen_graph(), kneser);
  REQUIRE(phi.has_value());
  CHECK(is_isomorphism(petersen_graph(), kneser, *phi));

  auto g = heawood_graph();
  auto self = find_isomorphism(g, g);
  REQUIRE(self.has_value());
  CHECK(is_isomorphism(g, g, *self));
}

TEST_CASE("automorphism groups") {
  CHECK(all_automorphisms(complete_graph(7)).size() == 5040);
  CHECK(all_automorphisms(petersen_graph()).size() == 120);
  CHECK(all_automorphisms(heawood_graph()).size() == 336);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(3 + trial % 5, 0.5, rng);
    CHECK(all_automorphisms(g).size() == oracle::brute_automorphism_count(g));
  }
}

TEST_CASE("edge_orbits") {
  for (std::size_t n = 2; n <= 7; ++n) CHECK(edge_orbits(complete_graph(n)).blocks.size() == 1);
  CHECK(edge_orbits(petersen_graph()).blocks.size() == 1);
  CHECK(edge_orbits(path_graph(4)).blocks.size() == 2);

  // Orbits from generators agree with orbits of the full group.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(4 + trial % 5, 0.45, rng);
    auto part = edge_orbits(g);
    std::size_t covered = 0;
    for (const auto& b : part.blocks) covered += b.size();
    CHECK(covered == g.num_edges());
    auto auts = all_automorphisms(g);
    for (const auto& block : part.blocks) {
      std::set<std::pair<VertexId, VertexId>> ends;
      for (auto e : block) ends.insert(std::minmax(g.edge(e).u, g.edge(e).v));
      // closed under every automorphism
      for (const auto& gamma : auts) {
        for (auto e : block) {
          CHECK(ends.count(std::minmax(gamma[g.edge(e).u], gamma[g.edge(e).v])) == 1);
        }
      }
      // transitive: every member reached from the first
      auto [a, b] = std::minmax(g.edge(block[0]).u, g.edge(block[0]).v);
      std::set<std::pair<VertexId, VertexId>> reached;
      for (const auto& gamma : auts) reached.insert(std::minmax(gamma[a], gamma[b]));
      for (const auto& p : ends) CHECK(reached.count(p) == 1);
    }
  }
}

TEST_CASE("graph6 round trip and reference strings") {
  CHECK(to_graph6(complete_graph(7)) == "F~~~w");
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(to_graph6(heawood_graph()) == "MhEGHC@AI?_PC@_G_");
  CHECK(are_isomorphic(from_graph6(">>graph6<<IheA@GUAo\n"), petersen_graph()));
  CHECK(from_graph6("@").num_vertices() == 1);
  CHECK(from_graph6("?").num_vertices() == 0);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = canonical_graph(oracle::random_graph(trial % 70, 0.3, rng));
    auto back = from_graph6(to_graph6(g));
    CHECK(back.multiplicity_matrix() == g.multiplicity_matrix());
  }
  CHECK_THROWS_AS(to_graph6(MultiGraph(1, {{0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("F~~"), std::invalid_argument);
}

TEST_CASE("graph JSON") {
  MultiGraph g(3, {{0, 1}, {0, 1}, {2, 2}});
  auto j = to_json(g);
  CHECK(j.dump() == R"({"edges":[[0,1],[0,1],[2,2]],"vertices":3})");
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":2,"edges":[[0,5]]})")),
                  std::invalid_argument);
}
