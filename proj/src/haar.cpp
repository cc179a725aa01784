#include "haarlab/haar.hpp"

#include <algorithm>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

std::vector<bool> membership(const FiniteGroup& g, const std::vector<Elem>& s) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : s) in[x] = true;
  return in;
}

void check_cap(std::uint64_t candidates, const char* what) {
  if (candidates > kFICandidateCap) {
    throw ScaleExceeded(std::string(what) + ": " + std::to_string(candidates) +
                        " candidate checks exceed the cap of " + std::to_string(kFICandidateCap));
  }
}

}  // namespace

ConnectionSet ConnectionSet::make(const FiniteGroup& g, std::vector<Elem> elements, Role role) {
  for (Elem x : elements)
    if (x >= g.order()) throw InvalidConnectionSet("element index out of range");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (role == Role::S) {
    if (elements.empty()) throw InvalidConnectionSet("S must be nonempty");
  } else {
    const char* label = role == Role::R ? "R" : "L";
    for (Elem x : elements) {
      if (x == g.identity())
        throw InvalidConnectionSet(std::string(label) + " must not contain the identity");
      if (!std::binary_search(elements.begin(), elements.end(), g.inv(x)))
        throw InvalidConnectionSet(std::string(label) + " must be inverse-closed; missing inverse of " +
                                   g.element_name(x));
    }
  }
  return ConnectionSet{std::move(elements), role};
}

ConnectionSet ConnectionSet::parse(const FiniteGroup& g, std::string_view text, Role role) {
  return make(g, g.parse_set(text), role);
}

bool ConnectionSet::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::string BiGraph::vertex_name(Point v) const {
  return group->element_name(element_of(v)) + "_" + std::to_string(part_of(v));
}

Point BiGraph::parse_vertex(std::string_view text) const {
  auto underscore = text.rfind('_');
  if (underscore == std::string_view::npos || underscore + 2 != text.size() ||
      (text.back() != '0' && text.back() != '1')) {
    throw ParseError("vertex must look like <word>_0 or <word>_1, got \"" + std::string(text) + "\"");
  }
  return vertex(group->parse_word(text.substr(0, underscore)), text.back() - '0');
}

std::string BiGraph::to_dot(const std::string& name) const {
  std::vector<std::string> labels, colors;
  for (Point v = 0; v < graph.order(); ++v) {
    labels.push_back(vertex_name(v));
    colors.push_back(part_of(v) == 0 ? "lightblue" : "lightsalmon");
  }
  return graph.to_dot(name, labels, colors);
}

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& r) {
  ConnectionSet checked = ConnectionSet::make(g, r.elements, Role::R);
  Graph out(g.order());
  for (Elem h = 0; h < g.order(); ++h)
    for (Elem x : checked.elements) out.add_edge(h, g.mul(x, h));
  return out;
}

BiGraph bicayley_graph(std::shared_ptr<const FiniteGroup> g, const ConnectionSet& r,
                       const ConnectionSet& l, const ConnectionSet& s) {
  const FiniteGroup& grp = *g;
  ConnectionSet rr = ConnectionSet::make(grp, r.elements, Role::R);
  ConnectionSet ll = ConnectionSet::make(grp, l.elements, Role::L);
  ConnectionSet ss = ConnectionSet::make(grp, s.elements, Role::S);
  Graph graph(2 * grp.order());
  for (Elem h = 0; h < grp.order(); ++h) {
    for (Elem x : rr.elements) graph.add_edge(BiGraph::vertex(h, 0), BiGraph::vertex(grp.mul(x, h), 0));
    for (Elem x : ll.elements) graph.add_edge(BiGraph::vertex(h, 1), BiGraph::vertex(grp.mul(x, h), 1));
    for (Elem x : ss.elements) graph.add_edge(BiGraph::vertex(h, 0), BiGraph::vertex(grp.mul(x, h), 1));
  }
  return BiGraph{std::move(g), std::move(rr.elements), std::move(ll.elements), std::move(ss.elements),
                 std::move(graph)};
}

BiGraph bicayley_graph(const FiniteGroup& g, const ConnectionSet& r, const ConnectionSet& l,
                       const ConnectionSet& s) {
  return bicayley_graph(std::make_shared<const FiniteGroup>(g), r, l, s);
}

BiGraph haar_graph(std::shared_ptr<const FiniteGroup> g, const ConnectionSet& s) {
  ConnectionSet empty_r{{}, Role::R}, empty_l{{}, Role::L};
  return bicayley_graph(std::move(g), empty_r, empty_l, s);
}

BiGraph haar_graph(const FiniteGroup& g, const ConnectionSet& s) {
  return haar_graph(std::make_shared<const FiniteGroup>(g), s);
}

ConnectionSet normalize_connection_set(const FiniteGroup& g, const ConnectionSet& s) {
  if (s.elements.empty()) throw InvalidConnectionSet("S must be nonempty");
  Elem least = *std::min_element(s.elements.begin(), s.elements.end());
  Elem shift = g.inv(least);
  std::vector<Elem> out;
  for (Elem x : s.elements) out.push_back(g.mul(shift, x));
  return ConnectionSet::make(g, std::move(out), Role::S);
}

bool is_connected(const BiGraph& b) { return is_connected(b.graph); }

Permutation r_map(const FiniteGroup& g, Elem h) {
  std::vector<Point> images(2 * g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem xh = g.mul(x, h);
    images[BiGraph::vertex(x, 0)] = BiGraph::vertex(xh, 0);
    images[BiGraph::vertex(x, 1)] = BiGraph::vertex(xh, 1);
  }
  return Permutation::unchecked(std::move(images));
}

PermGroup rH_action(const FiniteGroup& g) {
  std::vector<Permutation> gens;
  for (Elem x : g.generators()) gens.push_back(r_map(g, x));
  return PermGroup(2 * g.order(), std::move(gens));
}

Permutation delta_map(const FiniteGroup& g, const GroupAutomorphism& alpha, Elem x, Elem y) {
  std::vector<Point> images(2 * g.order());
  for (Elem h = 0; h < g.order(); ++h) {
    images[BiGraph::vertex(h, 0)] = BiGraph::vertex(g.mul(x, alpha(h)), 1);
    images[BiGraph::vertex(h, 1)] = BiGraph::vertex(g.mul(y, alpha(h)), 0);
  }
  return Permutation::unchecked(std::move(images));
}

Permutation sigma_map(const FiniteGroup& g, const GroupAutomorphism& alpha, Elem gelem) {
  std::vector<Point> images(2 * g.order());
  for (Elem h = 0; h < g.order(); ++h) {
    images[BiGraph::vertex(h, 0)] = BiGraph::vertex(alpha(h), 0);
    images[BiGraph::vertex(h, 1)] = BiGraph::vertex(g.mul(gelem, alpha(h)), 1);
  }
  return Permutation::unchecked(std::move(images));
}

std::vector<FEntry> compute_F(const FiniteGroup& g, const std::vector<Elem>& s,
                              const std::vector<GroupAutomorphism>& auts) {
  const auto in_s = membership(g, s);
  std::vector<Elem> g_candidates;
  if (in_s[g.identity()]) {
    g_candidates = s;
  } else {
    for (Elem x = 0; x < g.order(); ++x) g_candidates.push_back(x);
  }
  check_cap(static_cast<std::uint64_t>(auts.size()) * g_candidates.size() * s.size(), "compute_F");
  std::vector<FEntry> out;
  for (const auto& alpha : auts)
    for (Elem c : g_candidates) {
      // S^α = c^-1 S  ⇔  c·s^α ∈ S for every s
      bool ok = std::all_of(s.begin(), s.end(), [&](Elem x) { return in_s[g.mul(c, alpha(x))]; });
      if (ok) out.push_back({alpha, c});
    }
  return out;
}

std::vector<IEntry> compute_I(const FiniteGroup& g, const std::vector<Elem>& s,
                              const std::vector<GroupAutomorphism>& auts) {
  const auto in_s = membership(g, s);
  const bool has_identity = in_s[g.identity()];
  const std::uint64_t per_y = has_identity ? s.size() : g.order();
  check_cap(static_cast<std::uint64_t>(auts.size()) * g.order() * per_y * s.size(), "compute_I");
  std::vector<IEntry> out;
  std::vector<Elem> xs;
  for (const auto& alpha : auts) {
    for (Elem y = 0; y < g.order(); ++y) {
      // 1 = y^-1 t^-1 x for some t in S, so x = t y
      xs.clear();
      if (has_identity) {
        for (Elem t : s) xs.push_back(g.mul(t, y));
        std::sort(xs.begin(), xs.end());
      } else {
        for (Elem x = 0; x < g.order(); ++x) xs.push_back(x);
      }
      const Elem yinv = g.inv(y);
      for (Elem x : xs) {
        // S^α = y^-1 S^-1 x  ⇔  x (s^α)^-1 y^-1 ∈ S for every s
        bool ok = std::all_of(s.begin(), s.end(),
                              [&](Elem e) { return in_s[g.mul(g.mul(x, g.inv(alpha(e))), yinv)]; });
        if (ok) out.push_back({alpha, x, y});
      }
    }
  }
  return out;
}

std::vector<Elem> difference_set(const FiniteGroup& g, const std::vector<Elem>& s) {
  std::vector<Elem> out;
  for (Elem a : s)
    for (Elem b : s) out.push_back(g.mul(g.inv(a), b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace haarlab
