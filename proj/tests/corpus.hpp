#pragma once

// Small graphs for differential testing of the automorphism engine: random
// Haar graphs over every group of order at most 8, cycles, complete and
// complete bipartite graphs, and a few random graphs.

#include <random>
#include <string>
#include <vector>

#include "haarlab/atlas.hpp"
#include "haarlab/haar.hpp"

namespace corpus {

struct Entry {
  std::string label;
  haarlab::Graph graph;
};

inline haarlab::Graph cycle(std::size_t n) {
  haarlab::Graph g(n);
  for (haarlab::Point i = 0; i < n; ++i) g.add_edge(i, static_cast<haarlab::Point>((i + 1) % n));
  return g;
}

inline haarlab::Graph complete(std::size_t n) {
  haarlab::Graph g(n);
  for (haarlab::Point i = 0; i < n; ++i)
    for (haarlab::Point j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline haarlab::Graph complete_bipartite(std::size_t a, std::size_t b) {
  haarlab::Graph g(a + b);
  for (haarlab::Point i = 0; i < a; ++i)
    for (haarlab::Point j = 0; j < b; ++j) g.add_edge(i, static_cast<haarlab::Point>(a + j));
  return g;
}

inline haarlab::Graph petersen() {
  haarlab::Graph g(10);
  for (haarlab::Point i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline std::vector<Entry> build(std::uint32_t seed = 2718) {
  using namespace haarlab;
  std::vector<Entry> out;
  std::mt19937 rng(seed);
  const std::vector<std::string> groups{"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2^2",
                                        "Z2xZ4", "Z2^3", "D6", "D8", "Q8"};
  for (const auto& name : groups) {
    FiniteGroup g = atlas(name);
    for (int k = 0; k < 12; ++k) {
      std::vector<Elem> s;
      std::bernoulli_distribution coin(k % 3 == 0 ? 0.25 : 0.5);
      for (Elem x = 0; x < g.order(); ++x)
        if (coin(rng)) s.push_back(x);
      if (s.empty()) s.push_back(static_cast<Elem>(rng() % g.order()));
      BiGraph b = haar_graph(g, ConnectionSet::make(g, s, Role::S));
      out.push_back({"H(" + name + "," + g.format_set(b.s) + ")", std::move(b.graph)});
    }
  }
  for (std::size_t n = 3; n <= 16; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
  for (std::size_t n = 1; n <= 9; ++n) out.push_back({"K" + std::to_string(n), complete(n)});
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = a; b <= 6; ++b)
      out.push_back({"K" + std::to_string(a) + "," + std::to_string(b), complete_bipartite(a, b)});
  out.push_back({"Petersen", petersen()});
  for (int k = 0; k < 20; ++k) {
    std::size_t n = 5 + rng() % 10;
    Graph g(n);
    std::bernoulli_distribution coin(0.2 + 0.03 * (k % 10));
    for (Point i = 0; i < n; ++i)
      for (Point j = i + 1; j < n; ++j)
        if (coin(rng)) g.add_edge(i, j);
    out.push_back({"G(" + std::to_string(n) + ")#" + std::to_string(k), std::move(g)});
  }
  return out;
}

}  // namespace corpus
