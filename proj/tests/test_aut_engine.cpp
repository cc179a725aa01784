#include <doctest.h>

#include "corpus.hpp"
#include "haarlab/atlas.hpp"
#include "haarlab/aut_engine.hpp"
#include "haarlab/error.hpp"
#include "haarlab/haar.hpp"
#include "oracles.hpp"

using namespace haarlab;

namespace {

oracle::Matrix matrix_of(const Graph& g) {
  oracle::Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

Graph relabel(const Graph& g, const Permutation& p) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(p[u], p[v]);
  return out;
}

}  // namespace

TEST_SUITE("aut-engine") {
  TEST_CASE("refinement") {
    Graph star(4);
    for (Point i = 1; i < 4; ++i) star.add_edge(0, i);
    auto p = refine(star, ColoredPartition::unit(4));
    REQUIRE(p.cells.size() == 2);
    CHECK(p.is_equitable(star));
    CHECK(((p.cells[0] == std::vector<Point>{0}) || (p.cells[1] == std::vector<Point>{0})));

    Graph c6 = corpus::cycle(6);
    CHECK(refine(c6, ColoredPartition::unit(6)).cells.size() == 1);

    FiniteGroup h = atlas("D6xZ3");
    BiGraph b = haar_graph(h, ConnectionSet::parse(h, "1,a,b,c,abc"));
    auto root = refine(b.graph, ColoredPartition::unit(36));
    CHECK_FALSE(root.is_discrete());
    CHECK(root.is_equitable(b.graph));
  }

  TEST_CASE("refinement traces do not depend on labels") {
    std::mt19937 rng(8);
    for (const auto& entry : corpus::build(99)) {
      Permutation p = oracle::random_permutation(entry.graph.order(), rng);
      std::uint64_t t1 = 0, t2 = 0;
      auto p1 = refine(entry.graph, ColoredPartition::unit(entry.graph.order()), &t1);
      auto p2 = refine(relabel(entry.graph, p), ColoredPartition::unit(entry.graph.order()), &t2);
      CHECK(t1 == t2);
      REQUIRE(p1.cells.size() == p2.cells.size());
      for (std::size_t i = 0; i < p1.cells.size(); ++i) CHECK(p1.cells[i].size() == p2.cells[i].size());
    }
  }

  TEST_CASE("small known groups") {
    CHECK(automorphism_group(corpus::cycle(8)).order() == 16);
    CHECK(automorphism_group(corpus::complete(4)).order() == 24);
    CHECK(automorphism_group(corpus::petersen()).order() == 120);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(automorphism_group(p3).order() == 2);
    CHECK(oracle_automorphisms(corpus::complete(4)).order() == 24);
    CHECK(oracle_automorphisms(p3).order() == 2);
    FiniteGroup z7 = cyclic(7);
    Graph heawood = haar_graph(z7, ConnectionSet::parse(z7, "1,a,a^3")).graph;
    CHECK(oracle_automorphisms(heawood).order() == 336);
    CHECK(automorphism_group(heawood).order() == 336);
    CHECK_THROWS_AS(oracle_automorphisms(corpus::cycle(17)), ScaleExceeded);
  }

  TEST_CASE("Haar graphs whose automorphism group is R(H)") {
    FiniteGroup h = atlas("D6xZ3");
    BiGraph b = haar_graph(h, ConnectionSet::parse(h, "1,a,b,c,abc"));
    PermGroup a = automorphism_group(b.graph);
    CHECK(a.order() == 18);
    PermGroup r = rH_action(h);
    for (const auto& gen : r.generators()) CHECK(a.contains(gen));
    FiniteGroup q = atlas("Q8xZ5");
    BiGraph bq = haar_graph(q, ConnectionSet::parse(q, "1,a,c,abc^-1,bc"));
    CHECK(automorphism_group(bq.graph).order() == 40);
  }

  TEST_CASE("engine agrees with the exhaustive oracle on the corpus") {
    auto entries = corpus::build();
    CHECK(entries.size() >= 200);
    for (const auto& entry : entries) {
      if (entry.graph.order() > kOracleMaxVertices) continue;
      CAPTURE(entry.label);
      PermGroup fast = automorphism_group(entry.graph);
      PermGroup slow = oracle_automorphisms(entry.graph);
      CHECK(fast.order() == slow.order());
      for (const auto& gen : fast.generators()) {
        CHECK(entry.graph.is_automorphism(gen));
        CHECK(slow.contains(gen));
      }
      for (const auto& gen : slow.generators()) CHECK(fast.contains(gen));
      if (entry.graph.order() <= 8) CHECK(fast.order() == oracle::brute_force_aut_count(matrix_of(entry.graph)));
    }
  }

  TEST_CASE("R(H) is always contained in Aut of a Haar graph") {
    std::mt19937 rng(12);
    for (const char* name : {"D8", "Q8", "A4", "D10", "Q8xZ2", "H4", "D6xZ3"}) {
      FiniteGroup g = atlas(name);
      PermGroup r = rH_action(g);
      for (int k = 0; k < 8; ++k) {
        std::vector<Elem> s{0};
        for (Elem x = 1; x < g.order(); ++x)
          if (rng() % 3 == 0) s.push_back(x);
        PermGroup a = automorphism_group(haar_graph(g, ConnectionSet::make(g, s, Role::S)).graph);
        for (const auto& gen : r.generators()) CHECK(a.contains(gen));
      }
    }
  }

  TEST_CASE("output is deterministic") {
    FiniteGroup g = atlas("H7");
    Graph b = haar_graph(g, ConnectionSet::parse(g, "1,a,c,abc")).graph;
    auto first = automorphism_group(b).generators();
    for (int i = 0; i < 3; ++i) CHECK(automorphism_group(Graph::from_graph6(b.to_graph6())).generators() == first);
  }

  TEST_CASE("colors restrict the group") {
    Graph c4 = corpus::cycle(4);
    CHECK(automorphism_group(c4, {kDefaultNodeBudget, {0, 1, 0, 1}}).order() == 4);
    CHECK(automorphism_group(c4, {kDefaultNodeBudget, {0, 1, 1, 1}}).order() == 2);
  }

  TEST_CASE("node budget is enforced") {
    CHECK_THROWS_AS(automorphism_group(corpus::complete(10), {3, {}}), NodeBudgetExceeded);
  }

  TEST_CASE("isomorphisms") {
    Graph c6 = corpus::cycle(6);
    auto self = find_isomorphism(c6, c6);
    REQUIRE(self);
    CHECK(c6.is_automorphism(*self));
    CHECK_FALSE(find_isomorphism(c6, corpus::complete_bipartite(3, 3)));
    CHECK_FALSE(find_isomorphism(corpus::cycle(6), corpus::cycle(5)));
    // same degree sequence and edge count, not isomorphic
    Graph triangles(6);
    for (Point i = 0; i < 3; ++i) {
      triangles.add_edge(i, (i + 1) % 3);
      triangles.add_edge(i + 3, (i + 1) % 3 + 3);
    }
    CHECK_FALSE(find_isomorphism(c6, triangles));

    FiniteGroup z5 = cyclic(5);
    Graph g1 = haar_graph(z5, ConnectionSet::parse(z5, "a,a^2,a^4")).graph;
    Graph g2 = haar_graph(z5, ConnectionSet::parse(z5, "1,a,a^3")).graph;
    auto phi = find_isomorphism(g1, g2);
    REQUIRE(phi);
    for (auto [u, v] : g1.edges()) CHECK(g2.has_edge((*phi)[u], (*phi)[v]));

    // normalization never changes the isomorphism class
    std::mt19937 rng(4);
    for (const char* name : {"D8", "Q8", "A4", "Z2xZ4"}) {
      FiniteGroup g = atlas(name);
      for (int k = 0; k < 10; ++k) {
        std::vector<Elem> s;
        for (Elem x = 0; x < g.order(); ++x)
          if (rng() % 3 == 0) s.push_back(x);
        if (s.empty()) s.push_back(3);
        auto cs = ConnectionSet::make(g, s, Role::S);
        Graph a = haar_graph(g, cs).graph;
        Graph b = haar_graph(g, normalize_connection_set(g, cs)).graph;
        CHECK(find_isomorphism(a, b));
      }
    }

    // random relabelings are found
    for (const auto& entry : corpus::build(7)) {
      if (entry.graph.order() < 4) continue;
      Permutation p = oracle::random_permutation(entry.graph.order(), rng);
      Graph moved = relabel(entry.graph, p);
      auto iso = find_isomorphism(entry.graph, moved);
      REQUIRE(iso);
      for (auto [u, v] : entry.graph.edges()) CHECK(moved.has_edge((*iso)[u], (*iso)[v]));
    }
  }

  TEST_CASE("json output") {
    auto j = aut_to_json(automorphism_group(corpus::cycle(5)));
    CHECK(j["order"] == "10");
    CHECK(j["degree"] == 5);
    CHECK(j["generators"].size() >= 1);
  }
}
