#include <doctest.h>

#include <random>
#include <unordered_set>

#include "haarlab/error.hpp"
#include "haarlab/perm_group.hpp"
#include "oracles.hpp"

using namespace haarlab;

namespace {

bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::size_t transpositions = 0;
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point x = i; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// Random subgroup of Sym(n): a few random generators, sometimes sparse ones so
// that intransitive and small groups show up too.
std::vector<Permutation> random_generators(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<Permutation> gens;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    if (kind(rng) == 0) {
      gens.push_back(oracle::random_permutation(n, rng));
    } else {
      // a single short cycle on a random subset
      std::vector<Point> pts(n);
      std::iota(pts.begin(), pts.end(), Point{0});
      std::shuffle(pts.begin(), pts.end(), rng);
      std::uniform_int_distribution<std::size_t> len(2, std::min<std::size_t>(4, n));
      pts.resize(len(rng));
      gens.push_back(Permutation::from_cycles(n, {pts}));
    }
  }
  return gens;
}

}  // namespace

TEST_SUITE("perm-core") {
  TEST_CASE("trivial group") {
    PermGroup g = PermGroup::trivial(5);
    CHECK(g.order() == 1);
    CHECK(g.orbits().size() == 5);
    CHECK(g.contains(Permutation(5)));
    auto elems = g.elements(10);
    REQUIRE(elems.size() == 1);
    CHECK(elems.front().is_identity());
  }

  TEST_CASE("symmetric group of degree 4 from a transposition and a 4-cycle") {
    PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
    CHECK(s4.order() == 24);
    CHECK(s4.is_transitive());
    CHECK(s4.stabilizer(0).order() == 6);
    CHECK_FALSE(s4.is_semiregular());
  }

  TEST_CASE("symmetric group of degree 3 is not semiregular") {
    PermGroup s3(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_semiregular());
    CHECK_FALSE(s3.is_regular());
  }

  TEST_CASE("odd permutations are not in the alternating group of degree 4") {
    std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1, 2}}),
                                  Permutation::from_cycles(4, {{1, 2, 3}})};
    PermGroup a4(4, gens);
    auto all = oracle::closure(4, gens);
    REQUIRE(all.size() == 12);
    for (const auto& p : all) CHECK(is_even(p));
    CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1}})));
    CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1, 2, 3}})));
    CHECK(a4.contains(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));
    CHECK(a4.order() == 12);
  }

  TEST_CASE("membership requires equal degree") {
    PermGroup g(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
    CHECK_THROWS_AS(g.contains(Permutation(4)), DegreeMismatch);
  }

  TEST_CASE("automorphisms of the 8-cycle enumerate to 16 elements") {
    Permutation rotation = Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}});
    Permutation reflection = Permutation::from_cycles(8, {{1, 7}, {2, 6}, {3, 5}});
    PermGroup d16(8, {rotation, reflection});
    auto elems = d16.elements(100);
    CHECK(elems.size() == oracle::closure(8, {rotation, reflection}).size());
    CHECK(elems.size() == 16);
    std::unordered_set<Permutation, PermutationHash> distinct(elems.begin(), elems.end());
    CHECK(distinct.size() == 16);
    CHECK_THROWS_AS(d16.elements(15), OrderExceedsCap);
  }

  TEST_CASE("a cyclic regular group is regular") {
    PermGroup c6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    CHECK(c6.is_regular());
    CHECK(c6.is_semiregular());
    CHECK(c6.stabilizer(3).order() == 1);
  }

  TEST_CASE("semiregular with two orbits") {
    PermGroup g(6, {Permutation::from_cycles(6, {{0, 2, 4}, {1, 3, 5}})});
    CHECK(g.is_semiregular());
    CHECK_FALSE(g.is_regular());
    auto orbs = g.orbits();
    REQUIRE(orbs.size() == 2);
    CHECK(orbs[0] == std::vector<Point>{0, 2, 4});
    CHECK(orbs[1] == std::vector<Point>{1, 3, 5});
  }

  TEST_CASE("large orders use arbitrary precision") {
    // Sym(30): order 30! does not fit in 64 bits.
    PermGroup s30(30, {Permutation::from_cycles(30, {{0, 1}}),
                       Permutation::from_cycles(30, {[] {
                                                   std::vector<Point> c(30);
                                                   std::iota(c.begin(), c.end(), Point{0});
                                                   return c;
                                                 }()})});
    BigInt expected = 1;
    for (int i = 2; i <= 30; ++i) expected *= i;
    CHECK(s30.order() == expected);
  }

  TEST_CASE("random groups: order, orbit-stabilizer and sifting agree with closure") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t n = 3 + trial % 6;
      auto gens = random_generators(n, rng);
      PermGroup g(n, gens);
      auto all = oracle::closure(n, gens);
      CHECK(g.order() == all.size());
      // order equals product of basic orbit sizes, and enumeration matches it
      BigInt product = 1;
      for (const auto& level : g.levels()) product *= level.orbit.size();
      CHECK(product == g.order());
      CHECK(g.elements(100000).size() == all.size());
      for (const auto& gen : gens) CHECK(g.contains(gen));
      for (const auto& a : gens)
        for (const auto& b : gens) CHECK(g.contains(a * b));
      for (Point v = 0; v < n; ++v) {
        CHECK(g.order() == g.orbit(v).size() * g.stabilizer(v).order());
      }
      for (const auto& p : all) {
        auto r = g.sift(p);
        CHECK(r.level == g.levels().size());
        CHECK(r.residue.is_identity());
      }
      if (g.is_regular()) CHECK(g.order() == n);
    }
  }

  TEST_CASE("sifted elements reconstruct from transversal representatives") {
    std::mt19937 rng(99);
    auto gens = random_generators(7, rng);
    PermGroup g(7, gens);
    for (const auto& p : g.elements(10000)) {
      // peel representatives off level by level and rebuild
      Permutation rest = p;
      std::vector<Permutation> reps;
      for (const auto& level : g.levels()) {
        auto idx = level.orbit_index[rest[level.base_point]];
        REQUIRE(idx >= 0);
        reps.push_back(level.reps[static_cast<std::size_t>(idx)]);
        rest = rest * level.inverse_reps[static_cast<std::size_t>(idx)];
      }
      CHECK(rest.is_identity());
      Permutation rebuilt(7);
      for (auto it = reps.rbegin(); it != reps.rend(); ++it) rebuilt = rebuilt * *it;
      CHECK(rebuilt == p);
    }
  }
}
