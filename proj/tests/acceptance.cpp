// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Usage: haarlab_acceptance [criterion numbers...]   (default: all)

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "haarlab/atlas.hpp"
#include "haarlab/error.hpp"
#include "haarlab/repro.hpp"
#include "oracles.hpp"

using namespace haarlab;

namespace {

// Wall-clock limits per criterion, in seconds. Results are exact; these are
// the only tolerances.
constexpr double kLimitAC1 = 10;
constexpr double kLimitAC2 = 10;
constexpr double kLimitAC3 = 30;
constexpr double kLimitAC4 = 30 * 60;
constexpr double kLimitAC5 = 5 * 60;
constexpr double kLimitAC6 = 5 * 60;
constexpr double kLimitAC7 = 2 * 60;
constexpr double kLimitAC8 = 10 * 60;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

bool aut_equals_rH(const FiniteGroup& g, const Graph& graph) {
  PermGroup a = automorphism_group(graph);
  PermGroup r = rH_action(g);
  if (a.order() != r.order()) return false;
  for (const auto& p : a.generators())
    if (!r.contains(p)) return false;
  for (const auto& p : r.generators())
    if (!a.contains(p)) return false;
  return true;
}

std::string failing_rows(const VerificationReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    if (row.status == RowStatus::Pass) continue;
    if (!out.empty()) out += "; ";
    out += row.group + " " + row.s + " expected " + row.expected.dump() + " computed " + row.computed.dump();
  }
  return out;
}

void ac1(Outcome& o) {
  Classifier c;
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{3, 3}, {3, 5}, {4, 3}, {5, 3}, {6, 3}, {3, 7}};
  for (auto [n, p] : pairs) {
    auto r = target_dihedral_cross_zp(c, {n}, {p});
    FiniteGroup g = atlas("D" + std::to_string(2 * n) + "xZ" + std::to_string(p));
    bool equal = aut_equals_rH(g, haar_graph(g, ConnectionSet::parse(g, "1,a,b,c,abc")).graph);
    o.require(r.passed(), failing_rows(r));
    o.require(equal, "Aut != R(H) for " + g.name());
  }
  o.detail << (o.ok ? "6 pairs: |Aut| = 2np, Aut = R(H), not VT, NOT_CAYLEY" : "");
}

void ac2(Outcome& o) {
  Classifier c;
  auto r = target_q8_cross_zp(c, {3, 5, 7, 11});
  o.require(r.passed(), failing_rows(r));
  if (o.ok) o.detail << "p = 3, 5, 7, 11: |Aut| = 8p, tables, 4-cycles and the 19-element S^-1 S reproduced";
}

void ac3(Outcome& o) {
  Classifier c;
  auto r = target_small_table(c);
  std::size_t instances = 0;
  for (const auto& row : r.rows) {
    if (row.group.rfind("H6(", 0) == 0 && row.group != atlas("H6").name()) continue;  // sign variants
    ++instances;
    o.require(row.computed["vertex_transitive"] == false,
              "row " + row.computed["row"].dump() + " " + row.group + " " + row.s + " is vertex-transitive (|Aut| = " +
                  row.computed["aut_order"].get<std::string>() + ", verdict " +
                  row.computed["status"].get<std::string>() + ")");
  }
  o.require(instances == 10, "expected 10 instances, got " + std::to_string(instances));
  if (o.ok) o.detail << "10 instances, none vertex-transitive";
}

void ac4(Outcome& o) {
  ResultCache memory;
  Classifier c(&memory);
  auto r = target_q8z2_scan(c, 1);
  const auto& s = r.summary;
  std::size_t connected = s["connected"], cayley = s["cayley"], unknown = s["unknown"];
  o.require(unknown == 0, std::to_string(unknown) + " UNKNOWN rows");
  o.require(cayley == connected, std::to_string(connected - cayley) + " connected graphs not CAYLEY");
  o.require(connected == kQ8Z2ConnectedGolden, "connected count " + std::to_string(connected));
  o.detail << (o.ok ? "" : "; ") << connected << " connected, " << cayley << " CAYLEY (" << s["aut_regular"]
           << " Aut regular, " << s["shortcut_resolved"] << " shortcut, " << s["search_resolved"] << " search), "
           << s["disconnected"] << " disconnected skipped";
}

void ac5(Outcome& o) {
  Classifier c;
  auto r = target_dihedral_threshold(c, 1);
  o.require(r.passed(), failing_rows(r));
  for (const auto& row : r.rows)
    if (row.group == "D12" && row.computed.contains("witness"))
      o.detail << (o.ok ? "" : "; ") << "D4..D10 and Q8 all CAYLEY; D12 witness S = "
               << row.computed["witness"].get<std::string>();
}

void ac6(Outcome& o) {
  Classifier c;
  std::size_t total = 0;
  for (const char* name : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z2^2", "Z2xZ4"}) {
    FiniteGroup g = atlas(name);
    auto auts = group_automorphisms(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (g.order() - 1)); ++mask) {
      std::vector<Elem> s{0};
      for (Elem x = 1; x < g.order(); ++x)
        if (mask >> (x - 1) & 1) s.push_back(x);
      auto cs = ConnectionSet::make(g, s, Role::S);
      ++total;
      o.require(delta_shortcut(g, cs, &auts).has_value(), std::string("shortcut failed on ") + name + " " + g.format_set(s));
      o.require(c.classify(g, s)["status"] == "CAYLEY", std::string("not CAYLEY: ") + name + " " + g.format_set(s));
    }
  }
  if (o.ok) o.detail << total << " Haar graphs, all CAYLEY, shortcut succeeded on every one";
}

void ac7(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& entry : corpus::build()) {
    if (entry.graph.order() > kOracleMaxVertices) continue;
    ++checked;
    PermGroup fast = automorphism_group(entry.graph);
    PermGroup slow = oracle_automorphisms(entry.graph);
    bool same = fast.order() == slow.order();
    for (const auto& p : fast.generators()) same = same && slow.contains(p);
    for (const auto& p : slow.generators()) same = same && fast.contains(p);
    o.require(same, "mismatch on " + entry.label);
  }
  o.require(checked >= 200, "corpus has only " + std::to_string(checked) + " graphs");
  if (o.ok) o.detail << checked << " graphs, orders and generators agree";
}

void ac8(Outcome& o) {
  std::mt19937 rng(2024);
  const std::vector<std::string> names{"Z5", "Z6", "Z2^2", "D6", "D8", "Q8", "Z2xZ4", "D10", "A4",
                                       "D12", "Q8xZ2", "H4", "D6xZ3", "F20", "H7", "Z3^2"};
  std::vector<FiniteGroup> groups;
  for (const auto& n : names) groups.push_back(atlas(n));

  std::size_t rh = 0, fi = 0, conn = 0, norm = 0, norm_skipped = 0;
  for (int k = 0; k < 500; ++k) {
    const FiniteGroup& g = groups[rng() % groups.size()];
    std::vector<Elem> s;
    std::bernoulli_distribution coin(0.15 + 0.1 * (k % 5));
    for (Elem x = 0; x < g.order(); ++x)
      if (coin(rng)) s.push_back(x);
    if (s.empty()) s.push_back(static_cast<Elem>(rng() % g.order()));
    auto cs = ConnectionSet::make(g, s, Role::S);
    BiGraph b = haar_graph(g, cs);

    PermGroup a = automorphism_group(b.graph);
    PermGroup r = rH_action(g);
    for (const auto& p : r.generators()) o.require(a.contains(p), "R(H) not in Aut for " + g.name());
    ++rh;

    bool generated = closure(g, difference_set(g, cs.elements)).size() == g.order();
    o.require(generated == is_connected(b.graph), "connectivity mismatch for " + g.name() + " " + g.format_set(s));
    // with 1 in S (after normalizing) this is <S> = H
    auto normalized = normalize_connection_set(g, cs);
    o.require(generated == (closure(g, normalized.elements).size() == g.order()),
              "<S> = H mismatch for " + g.name() + " " + g.format_set(s));
    ++conn;

    if (k % 5 == 0 && g.order() <= 24) {
      auto auts = group_automorphisms(g);
      for (const auto& f : compute_F(g, cs.elements, auts))
        o.require(b.graph.is_automorphism(sigma_map(g, f.alpha, f.g)), "F member not an automorphism");
      for (const auto& i : compute_I(g, cs.elements, auts))
        o.require(b.graph.is_automorphism(delta_map(g, i.alpha, i.x, i.y)), "I member not an automorphism");
      ++fi;
    }
    if (a.order() <= kNormalizerMaxOrder && g.order() <= 24) {
      o.require(verify_normalizer(g, cs).equal, "normalizer formula fails on " + g.name() + " " + g.format_set(s));
      ++norm;
    } else {
      ++norm_skipped;
    }
  }

  // base and strong generating set invariants on random permutation groups
  std::size_t groups_checked = 0;
  for (int k = 0; k < 60; ++k) {
    std::size_t degree = 3 + rng() % 6;
    std::vector<Permutation> gens;
    for (std::size_t i = 0, m = 1 + rng() % 3; i < m; ++i) gens.push_back(oracle::random_permutation(degree, rng));
    PermGroup grp(degree, gens);
    auto all = oracle::closure(degree, gens);
    o.require(grp.order() == all.size(), "order differs from closure");
    for (Point v = 0; v < degree; ++v)
      o.require(grp.order() == grp.orbit(v).size() * grp.stabilizer(v).order(), "orbit-stabilizer fails");
    const auto base = grp.base();
    for (std::size_t i = 0; i < grp.levels().size(); ++i)
      for (const auto& sg : grp.levels()[i].generators)
        for (std::size_t j = 0; j < i; ++j) o.require(sg[base[j]] == base[j], "strong generator moves earlier base point");
    for (const auto& p : all) o.require(grp.contains(p), "closure element not a member");
    ++groups_checked;
  }
  if (o.ok)
    o.detail << rh << " random (H,S) with R(H) <= Aut and connectivity = <S^-1 S>; F/I checked on " << fi
             << "; normalizer equality on " << norm << " (" << norm_skipped << " beyond scale); BSGS on "
             << groups_checked << " random groups";
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  void (*run)(Outcome&);
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "D2n x Zp Haar graphs are GHRRs", kLimitAC1, ac1},
      {2, "Q8 x Zp Haar graph structure", kLimitAC2, ac2},
      {3, "small-order witnesses not vertex-transitive", kLimitAC3, ac3},
      {4, "Q8 x Z2 connected Haar graphs all Cayley", kLimitAC4, ac4},
      {5, "dihedral threshold n <= 5", kLimitAC5, ac5},
      {6, "abelian Haar graphs are Cayley via the shortcut", kLimitAC6, ac6},
      {7, "refinement engine matches the exhaustive oracle", kLimitAC7, ac7},
      {8, "property suites", kLimitAC8, ac8},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit));
    failures += !o.ok;
    std::printf("[%s] AC%d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
