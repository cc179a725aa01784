#include "haarlab/symmetry.hpp"

#include <algorithm>
#include <limits>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

struct BudgetHit {};

// R(H) membership: h'_i ↦ (h'h)_i for the single h with 1_0 ↦ h_0.
bool in_rH(const FiniteGroup& g, const Permutation& p) {
  if (BiGraph::part_of(p[0]) != 0) return false;
  return p == r_map(g, BiGraph::element_of(p[0]));
}

// Backtracking for a subgroup of A acting regularly. Each step picks the
// least vertex v not yet reached from the base vertex 0 and tries every
// fixed-point-free a ∈ A with 0^a = v (written s·u_v, s ∈ A_0); the group
// generated so far must stay semiregular with order dividing |V|.
class RegularSearch {
 public:
  RegularSearch(const PermGroup& a, std::uint64_t budget)
      : n_(a.degree()), rooted_(a.degree(), a.generators(), {0}), budget_(budget) {
    stabilizer_ = rooted_.stabilizer(0);
  }

  std::uint64_t steps() const { return steps_; }

  // Starts from the group generated by `seed` (which must be semiregular).
  std::optional<std::vector<Permutation>> run(std::vector<Permutation> seed) {
    chosen_ = std::move(seed);
    if (!close()) return std::nullopt;
    if (extend()) return chosen_;
    return std::nullopt;
  }

 private:
  bool close() {
    elems_.assign(1, Permutation::identity(n_));
    by_image_.assign(n_, -1);
    by_image_[0] = 0;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      for (const auto& gen : chosen_) {
        if (++steps_ > budget_) throw BudgetHit{};
        Permutation f = elems_[k] * gen;
        std::int32_t idx = by_image_[f[0]];
        if (idx >= 0) {
          if (elems_[static_cast<std::size_t>(idx)] != f) return false;
          continue;
        }
        if (f.has_fixed_point()) return false;
        by_image_[f[0]] = static_cast<std::int32_t>(elems_.size());
        elems_.push_back(std::move(f));
      }
    }
    return n_ % elems_.size() == 0;
  }

  bool extend() {
    if (elems_.size() == n_) return true;
    Point v = 0;
    while (by_image_[v] >= 0) ++v;
    const auto& level = rooted_.levels().front();
    const Permutation& u = level.reps[static_cast<std::size_t>(level.orbit_index[v])];
    bool found = false;
    stabilizer_.for_each_element(std::numeric_limits<std::uint64_t>::max(), [&](const Permutation& s) {
      if (++steps_ > budget_) throw BudgetHit{};
      Permutation t = s * u;
      if (t.has_fixed_point()) return true;
      chosen_.push_back(std::move(t));
      if (close() && extend()) {
        found = true;
        return false;
      }
      chosen_.pop_back();
      close();
      return true;
    });
    return found;
  }

  std::size_t n_;
  PermGroup rooted_;
  PermGroup stabilizer_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<Permutation> chosen_;
  std::vector<Permutation> elems_;
  std::vector<std::int32_t> by_image_;
};

CayleyVerdict cayley_certified(CayleyVerdict v, std::vector<Permutation> gens, Resolution how) {
  if (!is_regular_certificate(gens.empty() ? 1 : gens.front().degree(), gens))
    throw std::logic_error("regular subgroup certificate failed verification");
  v.status = CayleyStatus::Cayley;
  v.reason = NotCayleyReason::None;
  v.resolution = how;
  v.certificate = std::move(gens);
  return v;
}

// Aut, transitivity and the |A| = |V| case. Returns true when settled.
bool preliminary(const Graph& g, const CayleyOptions& options, CayleyVerdict& v, PermGroup& a) {
  AutResult res = automorphism_search(g, {options.aut_budget, {}});
  a = std::move(res.group);
  v.nodes_used = res.nodes;
  v.aut_order = a.order();
  v.vertex_transitive = g.order() <= 1 || a.is_transitive();
  if (!v.vertex_transitive) {
    v.status = CayleyStatus::NotCayley;
    v.reason = NotCayleyReason::NotVertexTransitive;
    v.resolution = Resolution::Intransitive;
    return true;
  }
  if (v.aut_order == g.order()) {
    std::vector<Permutation> gens = a.generators();
    if (gens.empty()) gens.push_back(Permutation::identity(g.order()));
    v = cayley_certified(std::move(v), std::move(gens), Resolution::AutRegular);
    return true;
  }
  return false;
}

void full_search(const PermGroup& a, const CayleyOptions& options, std::uint64_t already,
                 CayleyVerdict& v) {
  std::uint64_t left = options.search_budget > already ? options.search_budget - already : 0;
  RegularSearch search(a, left);
  try {
    auto found = search.run({});
    v.nodes_used += search.steps();
    if (found) {
      v = cayley_certified(std::move(v), std::move(*found), Resolution::FullSearch);
    } else {
      v.status = CayleyStatus::NotCayley;
      v.reason = NotCayleyReason::NoRegularSubgroup;
      v.resolution = Resolution::FullSearch;
    }
  } catch (const BudgetHit&) {
    v.nodes_used += search.steps();
    v.status = CayleyStatus::UnknownBudget;
    v.resolution = Resolution::Budget;
  } catch (const OrderExceedsCap&) {
    v.nodes_used += search.steps();
    v.status = CayleyStatus::UnknownBudget;
    v.resolution = Resolution::Budget;
  }
}

}  // namespace

std::string to_string(CayleyStatus s) {
  switch (s) {
    case CayleyStatus::Cayley: return "CAYLEY";
    case CayleyStatus::NotCayley: return "NOT_CAYLEY";
    case CayleyStatus::UnknownBudget: return "UNKNOWN_BUDGET";
  }
  return "?";
}

std::string to_string(NotCayleyReason r) {
  switch (r) {
    case NotCayleyReason::None: return "";
    case NotCayleyReason::NotVertexTransitive: return "NOT_VERTEX_TRANSITIVE";
    case NotCayleyReason::NoRegularSubgroup: return "NO_REGULAR_SUBGROUP";
  }
  return "?";
}

std::string to_string(Resolution r) {
  switch (r) {
    case Resolution::Intransitive: return "intransitive";
    case Resolution::AutRegular: return "aut_regular";
    case Resolution::DeltaShortcut: return "delta_shortcut";
    case Resolution::SeededSearch: return "seeded_search";
    case Resolution::FullSearch: return "full_search";
    case Resolution::Budget: return "budget";
  }
  return "?";
}

bool is_regular_certificate(std::size_t degree, const std::vector<Permutation>& gens) {
  for (const auto& p : gens)
    if (p.degree() != degree) return false;
  PermGroup t(degree, gens);
  return t.order() == degree && t.is_transitive() && t.is_semiregular();
}

bool is_vertex_transitive(const Graph& g) {
  return g.order() <= 1 || automorphism_group(g).is_transitive();
}

CayleyVerdict is_cayley(const Graph& g, const CayleyOptions& options) {
  CayleyVerdict v;
  PermGroup a;
  if (preliminary(g, options, v, a)) return v;
  full_search(a, options, 0, v);
  return v;
}

CayleyVerdict is_cayley(const BiGraph& b, const CayleyOptions& options) {
  CayleyVerdict v;
  PermGroup a;
  if (preliminary(b.graph, options, v, a)) return v;
  if (options.unrestricted_only) {
    full_search(a, options, 0, v);
    return v;
  }
  const FiniteGroup& h = *b.group;
  ConnectionSet s{b.s, Role::S};

  std::vector<GroupAutomorphism> own;
  const std::vector<GroupAutomorphism>* auts = options.group_auts;
  if (!auts) {
    try {
      own = group_automorphisms(h);
      auts = &own;
    } catch (const ScaleExceeded&) {
      auts = nullptr;
    }
  }
  if (auts) {
    if (auto gens = delta_shortcut(h, s, auts))
      return cayley_certified(std::move(v), std::move(*gens), Resolution::DeltaShortcut);
  }

  // seeded with R(H); a tenth of the budget, then fall through
  std::uint64_t spent = 0;
  {
    RegularSearch seeded(a, options.search_budget / 10);
    std::vector<Permutation> seed;
    for (Elem x : h.generators()) seed.push_back(r_map(h, x));
    try {
      auto found = seeded.run(seed);
      spent = seeded.steps();
      v.nodes_used += spent;
      if (found) return cayley_certified(std::move(v), std::move(*found), Resolution::SeededSearch);
    } catch (const BudgetHit&) {
      spent = seeded.steps();
      v.nodes_used += spent;
    } catch (const OrderExceedsCap&) {
    }
  }
  full_search(a, options, spent, v);
  return v;
}

bool is_ghrr(const FiniteGroup& g, const ConnectionSet& s) {
  PermGroup a = automorphism_group(haar_graph(g, s).graph);
  PermGroup r = rH_action(g);
  if (a.order() != r.order()) return false;
  for (const auto& p : a.generators())
    if (!r.contains(p)) return false;
  for (const auto& p : r.generators())
    if (!a.contains(p)) return false;
  return true;
}

std::optional<std::vector<Permutation>> delta_shortcut(const FiniteGroup& g, const ConnectionSet& s,
                                                       const std::vector<GroupAutomorphism>* auts) {
  std::vector<GroupAutomorphism> own;
  if (!auts) {
    own = group_automorphisms(g);
    auts = &own;
  }
  std::vector<bool> in_s(g.order(), false);
  for (Elem x : s.elements) in_s[x] = true;
  const bool has_identity = in_s[g.identity()];
  std::vector<Elem> xs;
  for (const auto& alpha : *auts) {
    for (Elem y = 0; y < g.order(); ++y) {
      xs.clear();
      if (has_identity) {
        for (Elem t : s.elements) xs.push_back(g.mul(t, y));
      } else {
        for (Elem x = 0; x < g.order(); ++x) xs.push_back(x);
      }
      const Elem yinv = g.inv(y);
      for (Elem x : xs) {
        bool in_i = std::all_of(s.elements.begin(), s.elements.end(), [&](Elem e) {
          return in_s[g.mul(g.mul(x, g.inv(alpha(e))), yinv)];
        });
        if (!in_i) continue;
        Permutation d = delta_map(g, alpha, x, y);
        if (!in_rH(g, d * d)) continue;
        std::vector<Permutation> gens;
        for (Elem e : g.generators()) gens.push_back(r_map(g, e));
        gens.push_back(std::move(d));
        if (is_regular_certificate(2 * g.order(), gens)) return gens;
      }
    }
  }
  return std::nullopt;
}

NormalizerReport verify_normalizer(const FiniteGroup& g, const ConnectionSet& s) {
  NormalizerReport rep;
  PermGroup a = automorphism_group(haar_graph(g, s).graph);
  rep.aut_order = a.order();
  if (rep.aut_order > kNormalizerMaxOrder)
    throw ScaleExceeded("verify_normalizer: |Aut| = " + rep.aut_order.str() + " exceeds " +
                        std::to_string(kNormalizerMaxOrder));

  std::vector<Permutation> rgens;
  for (Elem x : g.generators()) rgens.push_back(r_map(g, x));
  auto normalizes = [&](const Permutation& p) {
    Permutation pinv = p.inverse();
    return std::all_of(rgens.begin(), rgens.end(),
                       [&](const Permutation& r) { return in_rH(g, pinv * r * p); });
  };
  std::vector<Permutation> enumerated;
  a.for_each_element(kNormalizerMaxOrder, [&](const Permutation& p) {
    if (normalizes(p)) enumerated.push_back(p);
    return true;
  });
  rep.enumerated_order = enumerated.size();

  auto auts = group_automorphisms(g);
  auto f = compute_F(g, s.elements, auts);
  auto i = compute_I(g, s.elements, auts);
  rep.f_size = f.size();
  rep.i_size = i.size();
  std::vector<Permutation> formula = rgens;
  for (const auto& e : f) formula.push_back(sigma_map(g, e.alpha, e.g));
  if (!i.empty()) formula.push_back(delta_map(g, i.front().alpha, i.front().x, i.front().y));
  PermGroup n(2 * g.order(), formula);
  rep.formula_order = n.order();
  rep.transitive = n.is_transitive();

  bool subset = std::all_of(formula.begin(), formula.end(),
                            [&](const Permutation& p) { return a.contains(p) && normalizes(p); });
  bool superset = std::all_of(enumerated.begin(), enumerated.end(),
                              [&](const Permutation& p) { return n.contains(p); });
  rep.equal = subset && superset && rep.formula_order == rep.enumerated_order;
  return rep;
}

nlohmann::json verdict_to_json(const CayleyVerdict& v, const std::string& group, const std::string& s,
                               bool connected) {
  nlohmann::json j{{"group", group},
                   {"S", s},
                   {"connected", connected},
                   {"vertex_transitive", v.vertex_transitive},
                   {"status", to_string(v.status)},
                   {"nodes_used", v.nodes_used},
                   {"resolution", to_string(v.resolution)},
                   {"aut_order", v.aut_order.str()}};
  if (v.status == CayleyStatus::Cayley) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& p : v.certificate) gens.push_back(p.to_cycle_string());
    j["certificate"] = gens;
  }
  if (v.reason != NotCayleyReason::None) j["reason"] = to_string(v.reason);
  return j;
}

}  // namespace haarlab
