#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "haarlab/finite_group.hpp"
#include "haarlab/graph.hpp"
#include "haarlab/perm_group.hpp"

namespace haarlab {

enum class Role { R, L, S };

/// A subset of a group playing one of the three roles of a bi-Cayley graph.
/// R and L sets must be inverse-closed and identity-free; S sets must be nonempty.
struct ConnectionSet {
  std::vector<Elem> elements;  // sorted, distinct
  Role role = Role::S;

  /// Validates and sorts. Throws InvalidConnectionSet.
  static ConnectionSet make(const FiniteGroup& g, std::vector<Elem> elements, Role role);
  /// Parses "1,a,b,c,abc" against g's generator names. Throws ParseError or InvalidConnectionSet.
  static ConnectionSet parse(const FiniteGroup& g, std::string_view text, Role role = Role::S);

  bool contains(Elem x) const;
  std::size_t size() const { return elements.size(); }
};

/// A bi-Cayley graph BiCay(H, R, L, S). Vertex h_part is numbered 2h + part;
/// part 0 holds the right-part copy H_0 and part 1 the left-part copy H_1.
struct BiGraph {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Elem> r, l, s;
  Graph graph;

  std::size_t group_order() const { return group->order(); }
  static Point vertex(Elem h, int part) { return 2 * h + static_cast<Point>(part); }
  static Elem element_of(Point v) { return v / 2; }
  static int part_of(Point v) { return static_cast<int>(v % 2); }

  /// "abc^2_0" style names.
  std::string vertex_name(Point v) const;
  /// Parses "<word>_<part>". Throws ParseError.
  Point parse_vertex(std::string_view text) const;
  /// DOT with part-colored vertices.
  std::string to_dot(const std::string& name) const;
};

/// Cay(H, R): h ~ xh for x in R. Throws InvalidConnectionSet.
Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& r);

BiGraph bicayley_graph(std::shared_ptr<const FiniteGroup> g, const ConnectionSet& r,
                       const ConnectionSet& l, const ConnectionSet& s);
BiGraph bicayley_graph(const FiniteGroup& g, const ConnectionSet& r, const ConnectionSet& l,
                       const ConnectionSet& s);

/// H(H, S) = BiCay(H, ∅, ∅, S): h_0 ~ (sh)_1 for s in S.
BiGraph haar_graph(std::shared_ptr<const FiniteGroup> g, const ConnectionSet& s);
BiGraph haar_graph(const FiniteGroup& g, const ConnectionSet& s);

/// x^-1 S for the least x in S (by element index); contains the identity and
/// gives an isomorphic Haar graph via h_1 ↦ (x^-1 h)_1.
ConnectionSet normalize_connection_set(const FiniteGroup& g, const ConnectionSet& s);

bool is_connected(const BiGraph& b);

/// R(h) acting on 2|H| vertices: h'_i ↦ (h'h)_i.
Permutation r_map(const FiniteGroup& g, Elem h);
/// The group R(H) generated by R of the generators of g.
PermGroup rH_action(const FiniteGroup& g);

/// δ_{α,x,y}: h_0 ↦ (x h^α)_1, h_1 ↦ (y h^α)_0.
Permutation delta_map(const FiniteGroup& g, const GroupAutomorphism& alpha, Elem x, Elem y);
/// σ_{α,g}: h_0 ↦ (h^α)_0, h_1 ↦ (g h^α)_1.
Permutation sigma_map(const FiniteGroup& g, const GroupAutomorphism& alpha, Elem gelem);

struct FEntry {
  GroupAutomorphism alpha;
  Elem g;
};
struct IEntry {
  GroupAutomorphism alpha;
  Elem x;
  Elem y;
};

/// Candidate checks allowed before compute_F / compute_I give up.
inline constexpr std::uint64_t kFICandidateCap = 100'000'000;

/// All (α, g) with S^α = g^-1 S. When 1 ∈ S only g ∈ S can qualify.
/// Throws ScaleExceeded past kFICandidateCap.
std::vector<FEntry> compute_F(const FiniteGroup& g, const std::vector<Elem>& s,
                              const std::vector<GroupAutomorphism>& auts);
/// All (α, x, y) with S^α = y^-1 S^-1 x. When 1 ∈ S, x is confined to S·y.
/// Throws ScaleExceeded past kFICandidateCap.
std::vector<IEntry> compute_I(const FiniteGroup& g, const std::vector<Elem>& s,
                              const std::vector<GroupAutomorphism>& auts);

/// S^-1 S, sorted.
std::vector<Elem> difference_set(const FiniteGroup& g, const std::vector<Elem>& s);

}  // namespace haarlab
