#include "haarlab/aut_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

using Signature = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the running value
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

std::uint64_t hash_signature(const Signature& s) {
  std::uint64_t h = s.size();
  for (auto [cell, count] : s) h = mix(mix(h, cell), count);
  return h;
}

void rebuild_cell_of(ColoredPartition& p) {
  for (std::uint32_t c = 0; c < p.cells.size(); ++c)
    for (Point v : p.cells[c]) p.cell_of[v] = c;
}

void compute_signatures(const Graph& g, const ColoredPartition& p, std::vector<Signature>& sig) {
  std::vector<std::uint32_t> scratch;
  for (Point v = 0; v < g.order(); ++v) {
    scratch.clear();
    for (Point w : g.neighbors(v)) scratch.push_back(p.cell_of[w]);
    std::sort(scratch.begin(), scratch.end());
    Signature& s = sig[v];
    s.clear();
    for (std::size_t i = 0; i < scratch.size();) {
      std::size_t j = i;
      while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
      s.emplace_back(scratch[i], static_cast<std::uint32_t>(j - i));
      i = j;
    }
  }
}

std::uint64_t node_invariant(const ColoredPartition& p, std::uint64_t trace) {
  std::uint64_t h = mix(trace, p.cells.size());
  for (const auto& c : p.cells) h = mix(h, c.size());
  return h;
}

std::size_t target_cell(const ColoredPartition& p) {
  std::size_t best = p.cells.size();
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (p.cells[i].size() < 2) continue;
    if (best == p.cells.size() || p.cells[i].size() < p.cells[best].size()) best = i;
  }
  return best;
}

struct PathNode {
  ColoredPartition partition;  // refined
  std::uint64_t invariant = 0;
  std::size_t target = 0;      // cell index, meaningful when not discrete
};

class TreeSearch {
 public:
  TreeSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  PathNode make_node(ColoredPartition p, std::uint64_t parent_invariant) {
    count_node();
    std::uint64_t trace = parent_invariant;
    PathNode node;
    node.partition = refine(g_, std::move(p), &trace);
    node.invariant = node_invariant(node.partition, trace);
    node.target = target_cell(node.partition);
    return node;
  }

  // First path from a root node: always branch on the first vertex of the target cell.
  std::vector<PathNode> first_path(PathNode root) {
    std::vector<PathNode> path{std::move(root)};
    while (!path.back().partition.is_discrete()) {
      const PathNode& top = path.back();
      Point v = top.partition.cells[top.target].front();
      path.push_back(make_node(individualize(top.partition, v), top.invariant));
    }
    return path;
  }

  // Looks below `node` (at depth `level`, invariants already matching `path`)
  // for a leaf whose map from `reference_leaf` satisfies `accept`.
  template <class Accept>
  std::optional<Permutation> search(const PathNode& node, std::size_t level, const std::vector<PathNode>& path,
                                    const std::vector<Point>& reference_leaf, const Accept& accept) {
    if (node.partition.is_discrete()) {
      std::vector<Point> images(reference_leaf.size());
      for (std::size_t i = 0; i < reference_leaf.size(); ++i) images[reference_leaf[i]] = node.partition.cells[i].front();
      Permutation gamma = Permutation::unchecked(std::move(images));
      if (accept(gamma)) return gamma;
      return std::nullopt;
    }
    if (level + 1 >= path.size()) return std::nullopt;
    const auto& cell = node.partition.cells[node.target];
    for (Point u : cell) {
      PathNode child = make_node(individualize(node.partition, u), node.invariant);
      if (child.invariant != path[level + 1].invariant) continue;
      if (auto found = search(child, level + 1, path, reference_leaf, accept)) return found;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void count_node() {
    if (++nodes_ > budget_)
      throw NodeBudgetExceeded("search exceeded " + std::to_string(budget_) + " nodes");
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

std::vector<Point> leaf_order(const ColoredPartition& p) {
  std::vector<Point> out;
  for (const auto& c : p.cells) out.push_back(c.front());
  return out;
}

// Union-find over vertices for orbit bookkeeping.
struct Orbits {
  std::vector<Point> parent;
  explicit Orbits(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  void absorb(const Permutation& p) {
    for (Point v = 0; v < p.degree(); ++v) unite(v, p[v]);
  }
};

bool preserves_colors(const std::vector<std::uint32_t>& colors, const Permutation& p) {
  for (Point v = 0; v < colors.size(); ++v)
    if (colors[p[v]] != colors[v]) return false;
  return true;
}

}  // namespace

ColoredPartition ColoredPartition::unit(std::size_t n) {
  ColoredPartition p;
  p.cell_of.assign(n, 0);
  if (n > 0) {
    p.cells.emplace_back(n);
    std::iota(p.cells[0].begin(), p.cells[0].end(), Point{0});
  }
  return p;
}

ColoredPartition ColoredPartition::from_colors(const std::vector<std::uint32_t>& colors) {
  std::map<std::uint32_t, std::vector<Point>> by_color;
  for (Point v = 0; v < colors.size(); ++v) by_color[colors[v]].push_back(v);
  ColoredPartition p;
  p.cell_of.assign(colors.size(), 0);
  for (auto& [color, cell] : by_color) p.cells.push_back(std::move(cell));
  rebuild_cell_of(p);
  return p;
}

bool ColoredPartition::is_equitable(const Graph& g) const {
  std::vector<Signature> sig(g.order());
  compute_signatures(g, *this, sig);
  for (const auto& c : cells)
    for (Point v : c)
      if (sig[v] != sig[c.front()]) return false;
  return true;
}

ColoredPartition refine(const Graph& g, ColoredPartition p, std::uint64_t* trace) {
  std::uint64_t h = trace ? *trace : 0;
  std::vector<Signature> sig(g.order());
  std::vector<std::vector<Point>> next;
  while (true) {
    compute_signatures(g, p, sig);
    next.clear();
    bool split = false;
    for (std::uint32_t ci = 0; ci < p.cells.size(); ++ci) {
      auto& cell = p.cells[ci];
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::sort(cell.begin(), cell.end(), [&](Point a, Point b) {
        if (sig[a] != sig[b]) return sig[a] < sig[b];
        return a < b;
      });
      std::size_t fragments = 0;
      for (std::size_t i = 0; i < cell.size();) {
        std::size_t j = i;
        while (j < cell.size() && sig[cell[j]] == sig[cell[i]]) ++j;
        next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(i), cell.begin() + static_cast<std::ptrdiff_t>(j));
        ++fragments;
        h = mix(mix(h, j - i), hash_signature(sig[cell[i]]));
        i = j;
      }
      if (fragments > 1) {
        split = true;
        h = mix(mix(h, ci), fragments);
      }
    }
    p.cells.swap(next);
    rebuild_cell_of(p);
    if (!split) break;
  }
  // quotient structure of the final partition
  for (const auto& cell : p.cells) h = mix(h, hash_signature(sig[cell.front()]));
  if (trace) *trace = h;
  return p;
}

ColoredPartition individualize(ColoredPartition p, Point v) {
  const std::uint32_t c = p.cell_of[v];
  if (p.cells[c].size() == 1) return p;
  std::vector<Point> rest;
  for (Point w : p.cells[c])
    if (w != v) rest.push_back(w);
  p.cells[c] = {v};
  p.cells.insert(p.cells.begin() + c + 1, std::move(rest));
  rebuild_cell_of(p);
  return p;
}

AutResult automorphism_search(const Graph& g, const AutOptions& options) {
  const std::size_t n = g.order();
  if (n > kAutMaxVertices)
    throw ScaleExceeded("automorphism search limited to " + std::to_string(kAutMaxVertices) + " vertices");
  if (!options.colors.empty() && options.colors.size() != n)
    throw std::invalid_argument("one color per vertex required");
  if (n == 0) return {PermGroup::trivial(0), 0};

  TreeSearch tree(g, options.node_budget);
  ColoredPartition start = options.colors.empty() ? ColoredPartition::unit(n)
                                                  : ColoredPartition::from_colors(options.colors);
  std::vector<PathNode> path = tree.first_path(tree.make_node(std::move(start), 0));
  const std::vector<Point> first_leaf = leaf_order(path.back().partition);

  auto accept = [&](const Permutation& gamma) {
    return g.is_automorphism(gamma) && (options.colors.empty() || preserves_colors(options.colors, gamma));
  };

  std::vector<Permutation> generators;
  std::vector<Point> base;
  for (std::size_t level = 0; level + 1 < path.size(); ++level) {
    const PathNode& node = path[level];
    base.push_back(node.partition.cells[node.target].front());
  }
  for (std::size_t level = path.size() - 1; level-- > 0;) {
    const PathNode& node = path[level];
    const auto& cell = node.partition.cells[node.target];
    const Point v = cell.front();
    Orbits orbits(n);
    for (const auto& gen : generators) orbits.absorb(gen);
    std::vector<bool> failed(n, false);
    for (Point w : cell) {
      if (w == v || orbits.find(w) == orbits.find(v) || failed[orbits.find(w)]) continue;
      PathNode child = tree.make_node(individualize(node.partition, w), node.invariant);
      std::optional<Permutation> gamma;
      if (child.invariant == path[level + 1].invariant)
        gamma = tree.search(child, level + 1, path, first_leaf, accept);
      if (gamma) {
        generators.push_back(std::move(*gamma));
        orbits.absorb(generators.back());
        // failure marks follow their orbit representative
        std::vector<bool> moved(n, false);
        for (Point x = 0; x < n; ++x)
          if (failed[x]) moved[orbits.find(x)] = true;
        failed.swap(moved);
      } else {
        failed[orbits.find(w)] = true;
      }
    }
  }
  return {PermGroup(n, std::move(generators), base), tree.nodes()};
}

PermGroup automorphism_group(const Graph& g, const AutOptions& options) {
  return automorphism_search(g, options).group;
}

namespace {

// Extends a partial map vertex by vertex in index order, checking adjacency
// against every earlier vertex.
bool extend_oracle_map(const Graph& g, std::vector<Point>& map, std::vector<bool>& used, Point next) {
  const std::size_t n = g.order();
  if (next == n) return true;
  if (map[next] != n) {
    // pre-assigned
    for (Point u = 0; u < next; ++u)
      if (g.has_edge(u, next) != g.has_edge(map[u], map[next])) return false;
    return extend_oracle_map(g, map, used, next + 1);
  }
  for (Point cand = 0; cand < n; ++cand) {
    if (used[cand] || g.degree(cand) != g.degree(next)) continue;
    bool ok = true;
    for (Point u = 0; u < next && ok; ++u) ok = g.has_edge(u, next) == g.has_edge(map[u], cand);
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_oracle_map(g, map, used, next + 1)) return true;
    used[cand] = false;
    map[next] = static_cast<Point>(n);
  }
  return false;
}

}  // namespace

PermGroup oracle_automorphisms(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kOracleMaxVertices)
    throw ScaleExceeded("oracle limited to " + std::to_string(kOracleMaxVertices) + " vertices");
  std::vector<Permutation> generators;
  // level i: automorphisms fixing 0..i-1, one per new image of i
  for (std::size_t i = n; i-- > 0;) {
    Orbits orbits(n);
    for (const auto& gen : generators) orbits.absorb(gen);
    for (Point w = static_cast<Point>(i + 1); w < n; ++w) {
      if (orbits.find(w) == orbits.find(static_cast<Point>(i))) continue;
      std::vector<Point> map(n, static_cast<Point>(n));
      std::vector<bool> used(n, false);
      for (Point u = 0; u < i; ++u) {
        map[u] = u;
        used[u] = true;
      }
      map[i] = w;
      used[w] = true;
      if (extend_oracle_map(g, map, used, 0)) {
        generators.push_back(Permutation(map));
        orbits.absorb(generators.back());
      }
    }
  }
  return PermGroup(n, std::move(generators));
}

std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2, std::uint64_t node_budget) {
  if (g1.order() != g2.order()) return std::nullopt;
  const std::size_t n = g1.order();
  if (n > kIsomorphismMaxVertices)
    throw ScaleExceeded("isomorphism search limited to " + std::to_string(kIsomorphismMaxVertices) + " vertices");
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return Permutation(0);
  TreeSearch t1(g1, node_budget);
  std::vector<PathNode> path = t1.first_path(t1.make_node(ColoredPartition::unit(n), 0));
  const std::vector<Point> leaf = leaf_order(path.back().partition);
  TreeSearch t2(g2, node_budget);
  PathNode root = t2.make_node(ColoredPartition::unit(n), 0);
  if (root.invariant != path.front().invariant) return std::nullopt;
  auto accept = [&](const Permutation& phi) {
    for (auto [u, v] : g1.edges())
      if (!g2.has_edge(phi[u], phi[v])) return false;
    return true;
  };
  return t2.search(root, 0, path, leaf, accept);
}

nlohmann::json aut_to_json(const PermGroup& group) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& p : group.generators()) gens.push_back(p.to_cycle_string());
  return {{"degree", group.degree()}, {"order", group.order().str()}, {"generators", std::move(gens)}};
}

}  // namespace haarlab
