#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "haarlab/permutation.hpp"

namespace haarlab {

/// A finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  /// Adds {u, v}; duplicate edges are ignored. Throws std::invalid_argument on loops.
  void add_edge(Point u, Point v);
  bool has_edge(Point u, Point v) const { return rows_[u][v]; }

  /// Sorted neighbor list.
  const std::vector<Point>& neighbors(Point v) const { return adj_[v]; }
  std::size_t degree(Point v) const { return adj_[v].size(); }
  const boost::dynamic_bitset<>& row(Point v) const { return rows_[v]; }

  /// Every edge once, as (u, v) with u < v, sorted.
  std::vector<std::pair<Point, Point>> edges() const;

  /// True when p maps edges to edges (and therefore non-edges to non-edges).
  bool is_automorphism(const Permutation& p) const;

  /// Standard graph6 encoding without the optional ">>graph6<<" header.
  std::string to_graph6() const;
  /// Throws ParseError on malformed input. Accepts an optional header.
  static Graph from_graph6(std::string_view text);

  /// Graphviz output. `labels` and `colors` may be empty; otherwise one per vertex.
  std::string to_dot(const std::string& name, const std::vector<std::string>& labels = {},
                     const std::vector<std::string>& colors = {}) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
  std::vector<std::vector<Point>> adj_;
  std::size_t edges_ = 0;
};

/// Sizes of connected components, in order of their least vertex.
std::vector<std::size_t> component_sizes(const Graph& g);
bool is_connected(const Graph& g);

/// Γ(v), sorted.
std::vector<Point> neighborhood(const Graph& g, Point v);
/// Vertices at distance exactly 2 from v, sorted.
std::vector<Point> distance2_set(const Graph& g, Point v);

/// Number of 4-cycles through the edge {u, w}. Throws NotAnEdge.
std::size_t four_cycles_through_edge(const Graph& g, Point u, Point w);
/// Number of 4-cycles through vertex v.
std::size_t four_cycles_through_vertex(const Graph& g, Point v);
/// Number of 4-cycles through the 2-path a - v - b. Throws NotAnEdge.
std::size_t four_cycles_through_path(const Graph& g, Point a, Point v, Point b);

}  // namespace haarlab
