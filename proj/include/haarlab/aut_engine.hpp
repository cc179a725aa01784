#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "haarlab/graph.hpp"
#include "haarlab/perm_group.hpp"

namespace haarlab {

inline constexpr std::size_t kAutMaxVertices = 4096;
inline constexpr std::size_t kOracleMaxVertices = 16;
inline constexpr std::size_t kIsomorphismMaxVertices = 512;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// An ordered partition of the vertex set.
struct ColoredPartition {
  std::vector<std::vector<Point>> cells;
  std::vector<std::uint32_t> cell_of;

  static ColoredPartition unit(std::size_t n);
  /// One cell per distinct color, cells ordered by color value.
  static ColoredPartition from_colors(const std::vector<std::uint32_t>& colors);

  bool is_discrete() const { return cells.size() == cell_of.size(); }
  /// Neighbor counts into every cell agree across each cell.
  bool is_equitable(const Graph& g) const;
};

/// Coarsest equitable refinement. Cells split in place into fragments ordered
/// by their neighbor-count signature, so the result depends only on the
/// graph structure and the input cell order. When `trace` is given, a
/// label-independent fingerprint of the refinement is mixed into it.
ColoredPartition refine(const Graph& g, ColoredPartition p, std::uint64_t* trace = nullptr);

/// Splits v off its cell, placing {v} immediately before the rest.
ColoredPartition individualize(ColoredPartition p, Point v);

struct AutOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Optional vertex colors that automorphisms must preserve.
  std::vector<std::uint32_t> colors;
};

struct AutResult {
  PermGroup group;
  std::uint64_t nodes = 0;
};

/// Aut(graph) by individualization-refinement with orbit pruning; the order
/// is certified by Schreier-Sims and every generator is checked edge by edge.
/// Throws ScaleExceeded above kAutMaxVertices, NodeBudgetExceeded past the budget.
AutResult automorphism_search(const Graph& g, const AutOptions& options = {});
PermGroup automorphism_group(const Graph& g, const AutOptions& options = {});

/// Exhaustive backtracking without refinement, for differential testing.
/// Throws ScaleExceeded above kOracleMaxVertices.
PermGroup oracle_automorphisms(const Graph& g);

/// An isomorphism g1 -> g2 (as a vertex map) or nullopt when none exists.
/// Throws ScaleExceeded above kIsomorphismMaxVertices.
std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

/// {"degree", "order" (decimal string), "generators" (cycle notation)}.
nlohmann::json aut_to_json(const PermGroup& group);

}  // namespace haarlab
