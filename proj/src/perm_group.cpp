#include "haarlab/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

bool fixes_all(const Permutation& p, const std::vector<Point>& points) {
  return std::all_of(points.begin(), points.end(), [&](Point b) { return p[b] == b; });
}

// First point moved by `p` that is not already a base point.
Point new_base_point(const Permutation& p, const std::vector<Point>& base) {
  for (Point x = 0; x < p.degree(); ++x) {
    if (p[x] != x && std::find(base.begin(), base.end(), x) == base.end()) return x;
  }
  return *p.first_moved_point();
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree) {
  std::unordered_set<Permutation, PermutationHash> seen;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree));
    }
    if (g.is_identity() || !seen.insert(g).second) continue;
    generators_.push_back(std::move(g));
  }
  for (Point b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("base point out of range");
  }
  schreier_sims(std::move(base_prefix));
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[level.base_point] = 0;
  level.reps.assign(1, Permutation::identity(degree_));
  level.inverse_reps.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point beta = level.orbit[k];
    for (const auto& s : level.generators) {
      Point gamma = s[beta];
      if (level.orbit_index[gamma] >= 0) continue;
      level.orbit_index[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      Permutation rep = level.reps[k] * s;
      level.inverse_reps.push_back(rep.inverse());
      level.reps.push_back(std::move(rep));
    }
  }
}

PermGroup::SiftResult PermGroup::sift(const Permutation& p, std::size_t from_level) const {
  if (p.degree() != degree_) {
    throw DegreeMismatch("cannot sift a permutation of degree " + std::to_string(p.degree()) +
                         " through a group of degree " + std::to_string(degree_));
  }
  Permutation g = p;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point x = g[level.base_point];
    std::int32_t idx = level.orbit_index[x];
    if (idx < 0) return {std::move(g), l};
    g = g * level.inverse_reps[static_cast<std::size_t>(idx)];
  }
  return {std::move(g), levels_.size()};
}

// Deterministic Schreier-Sims in the formulation that walks the chain from
// the deepest level upwards and restarts at the deepest level that changed.
void PermGroup::schreier_sims(std::vector<Point> base_prefix) {
  std::vector<Point> base = std::move(base_prefix);
  for (const auto& g : generators_) {
    if (fixes_all(g, base)) base.push_back(new_base_point(g, base));
  }
  levels_.clear();
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level;
    level.base_point = base[i];
    std::vector<Point> prefix(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& g : generators_)
      if (fixes_all(g, prefix)) level.generators.push_back(g);
    rebuild_orbit(level);
    levels_.push_back(std::move(level));
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool changed = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !changed; ++k) {
      Point beta = levels_[li].orbit[k];
      for (std::size_t s_idx = 0; s_idx < levels_[li].generators.size(); ++s_idx) {
        const Level& level = levels_[li];
        const Permutation& s = level.generators[s_idx];
        Point gamma = s[beta];
        const auto gidx = static_cast<std::size_t>(level.orbit_index[gamma]);
        Permutation schreier = level.reps[k] * s * level.inverse_reps[gidx];
        if (schreier.is_identity()) continue;
        SiftResult r = sift(schreier, li + 1);
        bool extend = false;
        if (r.level < levels_.size()) {
          extend = true;
        } else if (!r.residue.is_identity()) {
          extend = true;
          Level fresh;
          fresh.base_point = new_base_point(r.residue, base);
          base.push_back(fresh.base_point);
          levels_.push_back(std::move(fresh));
        }
        if (extend) {
          std::size_t j = std::min(r.level, levels_.size() - 1);
          for (std::size_t l = li + 1; l <= j; ++l) {
            levels_[l].generators.push_back(r.residue);
            rebuild_orbit(levels_[l]);
          }
          i = static_cast<std::ptrdiff_t>(j);
          changed = true;
          break;
        }
      }
    }
    if (!changed) --i;
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& level : levels_)
    for (const auto& g : level.generators)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& p) const {
  SiftResult r = sift(p);
  return r.level == levels_.size() && r.residue.is_identity();
}

std::vector<Point> PermGroup::orbit(Point v) const {
  std::vector<Point> out{v};
  std::vector<bool> seen(degree_, false);
  seen[v] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      Point y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point v = 0; v < degree_; ++v) {
    if (seen[v]) continue;
    auto cell = orbit(v);
    for (Point x : cell) seen[x] = true;
    out.push_back(std::move(cell));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || orbit(0).size() == degree_;
}

PermGroup PermGroup::stabilizer(Point v) const {
  if (v >= degree_) throw std::invalid_argument("stabilizer point out of range");
  PermGroup rebased(degree_, strong_generators(), {v});
  std::vector<Permutation> gens;
  if (rebased.levels_.size() > 1) gens = rebased.levels_[1].generators;
  if (gens.empty()) return trivial(degree_);
  std::vector<Point> rest = rebased.base();
  rest.erase(rest.begin());
  return PermGroup(degree_, std::move(gens), std::move(rest));
}

bool PermGroup::is_semiregular() const {
  for (const auto& cell : orbits()) {
    if (stabilizer(cell.front()).order() != 1) return false;
  }
  return true;
}

bool PermGroup::is_regular() const {
  return is_transitive() && order() == degree_;
}

void PermGroup::for_each_element(std::uint64_t cap,
                                 const std::function<bool(const Permutation&)>& visit) const {
  if (order() > cap) {
    throw OrderExceedsCap("group order " + order().str() + " exceeds cap " + std::to_string(cap));
  }
  // Every element factors uniquely as u_{k-1} * ... * u_1 * u_0 with u_l a
  // transversal element of level l.
  const std::size_t depth = levels_.size();
  std::vector<std::size_t> idx(depth, 0);
  std::vector<Permutation> partial(depth + 1, Permutation::identity(degree_));
  auto rebuild_from = [&](std::size_t from) {
    // partial[l] = u_{k-1} * ... * u_l, so partial[0] is the element.
    for (std::size_t l = from + 1; l-- > 0;) {
      partial[l] = partial[l + 1] * levels_[l].reps[idx[l]];
    }
  };
  if (depth == 0) {
    visit(partial[0]);
    return;
  }
  rebuild_from(depth - 1);
  while (true) {
    if (!visit(partial[0])) return;
    std::size_t l = 0;
    while (l < depth && ++idx[l] == levels_[l].reps.size()) {
      idx[l] = 0;
      ++l;
    }
    if (l == depth) return;
    rebuild_from(l);
  }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  for_each_element(cap, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace haarlab
