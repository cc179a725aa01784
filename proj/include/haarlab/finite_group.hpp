#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "haarlab/perm_group.hpp"
#include "haarlab/permutation.hpp"

namespace haarlab {

/// Index of a group element in its multiplication table.
using Elem = std::uint32_t;

/// A finite group given by an explicit multiplication table.
///
/// Elements are numbered in normal-form order: the element g1^e1 g2^e2 ... is
/// numbered by the first exponent tuple (lexicographic, exponents in
/// [0, order(gi))) that produces it, so the identity is always 0 and names
/// such as "a^2bc" are stable. Elements no tuple reaches (rare) fall back to
/// shortest generator words.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Builds a group from a raw table (row * column, row-major) whose elements
  /// may be numbered arbitrarily. Validates identity, inverses, associativity
  /// (exhaustive up to order 64, 10^4 sampled triples above) and generation,
  /// then renumbers into normal-form order. Throws std::invalid_argument.
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<Elem> table,
                                std::vector<Elem> generators,
                                std::vector<std::string> generator_names);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }

  Elem mul(Elem x, Elem y) const { return table_[x * order_ + y]; }
  Elem inv(Elem x) const { return inverses_[x]; }
  Elem pow(Elem x, long long k) const;
  /// x^g = g^-1 x g.
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  std::uint64_t element_order(Elem x) const;

  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  std::optional<Elem> generator(std::string_view name) const;

  const std::string& element_name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::vector<Elem>& table() const { return table_; }

  /// Evaluates a word such as "abc^-1", "a^{-1}b^2" or "1".
  Elem parse_word(std::string_view word) const;
  /// Parses "1,a,b,c,abc" (optionally wrapped in braces) into sorted distinct elements.
  std::vector<Elem> parse_set(std::string_view text) const;
  std::string format_set(const std::vector<Elem>& elements) const;

  /// Same table under a new name and new generator names.
  FiniteGroup renamed(std::string name, std::vector<std::string> generator_names) const;

  bool is_abelian() const;
  std::size_t count_elements_of_order(std::uint64_t k) const;

  /// Associativity check over every triple when order <= 64, otherwise over
  /// `samples` deterministic pseudo-random triples.
  bool check_associativity(std::size_t samples = 10000) const;

 private:
  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::vector<Elem> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> names_;
};

/// An automorphism of a FiniteGroup, stored as a permutation of element indices.
struct GroupAutomorphism {
  Permutation map;

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order two_n: <a, b | a^n, b^2, a^b = a^-1>.
FiniteGroup dihedral(std::size_t two_n);
/// Dicyclic group of order 4m: <a, b | a^{2m}, b^2 = a^m, a^b = a^-1>.
FiniteGroup dicyclic(std::size_t m);
FiniteGroup quaternion8();

/// Componentwise product; generators are those of g then h, relabelled a, b, c, ...
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// n ⋊ k where the i-th generator x of k acts on n by n' ↦ action[i](n'),
/// meaning x^-1 n' x = action[i](n'). Throws ActionNotWellDefined when the
/// images are not automorphisms or do not define a homomorphism k -> Aut(n).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<GroupAutomorphism>& action);

/// Extends generator images to a homomorphism g -> h; nullopt if the images
/// do not define one. `images[i]` is the image of g.generators()[i].
std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                     const std::vector<Elem>& images);

/// Extends generator images to an automorphism of g, if they define one.
std::optional<GroupAutomorphism> extend_to_automorphism(const FiniteGroup& g,
                                                        const std::vector<Elem>& images);

bool is_automorphism(const FiniteGroup& g, const GroupAutomorphism& alpha);

inline constexpr std::size_t kMaxGroupAutomorphisms = 100'000;

/// Every automorphism of g (identity first). Throws ScaleExceeded when
/// order(g) > max_order or |Aut(g)| > kMaxGroupAutomorphisms.
std::vector<GroupAutomorphism> group_automorphisms(const FiniteGroup& g,
                                                   std::size_t max_order = 64);

std::vector<Elem> center(const FiniteGroup& g);

/// Smallest subgroup containing `seed`, sorted.
std::vector<Elem> closure(const FiniteGroup& g, const std::vector<Elem>& seed);

/// The permutation group {R(x) : h ↦ hx} on the element indices.
PermGroup right_regular_representation(const FiniteGroup& g);

}  // namespace haarlab
