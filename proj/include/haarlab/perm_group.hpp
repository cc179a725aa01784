#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "haarlab/permutation.hpp"

namespace haarlab {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation group stored as a base and strong generating set.
///
/// Construction runs the deterministic Schreier-Sims algorithm. Base points
/// are chosen greedily (first point moved by a generator not yet fixing the
/// current base), after any caller-supplied prefix, so the same generators
/// always produce the same chain.
class PermGroup {
 public:
  /// One level of the stabilizer chain. `reps[orbit_index[x]]` maps the base
  /// point to x; `orbit_index[x] < 0` when x is outside the basic orbit.
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;
    std::vector<Permutation> reps;
    std::vector<Permutation> inverse_reps;
  };

  /// Result of sifting: the residue and the level at which it dropped out
  /// (equal to base length when it passed every level).
  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };

  PermGroup() = default;

  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  BigInt order() const;

  /// True iff `p` sifts to the identity. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;
  SiftResult sift(const Permutation& p, std::size_t from_level = 0) const;

  std::vector<Point> orbit(Point v) const;
  /// Orbit partition; cells sorted by least element, points ascending.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Point stabilizer, built from a chain whose first base point is `v`.
  PermGroup stabilizer(Point v) const;

  bool is_semiregular() const;
  bool is_regular() const;

  /// Calls `visit` once per group element. Throws OrderExceedsCap first if
  /// the order exceeds `cap`. Stops early when `visit` returns false.
  void for_each_element(std::uint64_t cap,
                        const std::function<bool(const Permutation&)>& visit) const;
  std::vector<Permutation> elements(std::uint64_t cap) const;

 private:
  void schreier_sims(std::vector<Point> base_prefix);
  void rebuild_orbit(Level& level) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

}  // namespace haarlab
