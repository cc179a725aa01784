#include "haarlab/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

std::string letter_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

std::vector<std::string> letter_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(letter_name(i));
  return out;
}

std::string power_name(const std::string& gen, std::uint64_t e) {
  if (e == 0) return "";
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t order, std::vector<Elem> table,
                                    std::vector<Elem> generators,
                                    std::vector<std::string> generator_names) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  if (table.size() != order * order) throw std::invalid_argument("table has wrong size");
  if (generators.size() != generator_names.size())
    throw std::invalid_argument("one name per generator required");
  for (Elem x : table)
    if (x >= order) throw std::invalid_argument("table entry out of range");
  for (Elem g : generators)
    if (g >= order) throw std::invalid_argument("generator out of range");
  for (const auto& gn : generator_names)
    if (gn.size() != 1 || !std::islower(static_cast<unsigned char>(gn[0])))
      throw std::invalid_argument("generator names must be single lowercase letters");

  auto at = [&](Elem x, Elem y) { return table[x * order + y]; };

  // identity
  Elem e = kUnset;
  for (Elem c = 0; c < order && e == kUnset; ++c) {
    bool ok = true;
    for (Elem x = 0; x < order && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e == kUnset) throw std::invalid_argument(name + ": table has no identity");

  // canonical numbering by normal-form exponent tuples
  const std::size_t k = generators.size();
  std::vector<std::uint64_t> gen_orders(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t o = 1;
    for (Elem x = generators[i]; x != e; x = at(x, generators[i])) {
      if (++o > order) throw std::invalid_argument(name + ": generator of infinite order");
    }
    gen_orders[i] = o;
  }
  // exponent of g_i ranges over the index of <g_1..g_{i-1}> in <g_1..g_i>
  {
    std::vector<bool> in(order, false);
    std::vector<Elem> sub{e};
    in[e] = true;
    std::size_t previous = 1;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t q = 0; q < sub.size(); ++q)
        for (std::size_t j = 0; j <= i; ++j) {
          Elem y = at(sub[q], generators[j]);
          if (!in[y]) {
            in[y] = true;
            sub.push_back(y);
          }
        }
      gen_orders[i] = std::min<std::uint64_t>(gen_orders[i], sub.size() / previous);
      previous = sub.size();
    }
  }
  std::vector<Elem> new_index(order, kUnset);
  std::vector<Elem> old_of_new;
  std::vector<std::string> names;
  {
    std::vector<std::uint64_t> exps(k, 0);
    std::size_t budget = 64 * order + 64;
    while (budget-- > 0 && old_of_new.size() < order) {
      Elem x = e;
      std::string word;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::uint64_t j = 0; j < exps[i]; ++j) x = at(x, generators[i]);
        word += power_name(generator_names[i], exps[i]);
      }
      if (new_index[x] == kUnset) {
        new_index[x] = static_cast<Elem>(old_of_new.size());
        old_of_new.push_back(x);
        names.push_back(word.empty() ? "1" : word);
      }
      // odometer, last coordinate fastest
      std::size_t pos = k;
      while (pos > 0) {
        --pos;
        if (++exps[pos] < gen_orders[pos]) break;
        exps[pos] = 0;
        if (pos == 0) budget = 0;
      }
      if (k == 0) break;
    }
  }
  // breadth-first words for anything the tuples missed
  for (std::size_t q = 0; q < old_of_new.size() && old_of_new.size() < order; ++q) {
    for (std::size_t i = 0; i < k; ++i) {
      Elem y = at(old_of_new[q], generators[i]);
      if (new_index[y] != kUnset) continue;
      new_index[y] = static_cast<Elem>(old_of_new.size());
      old_of_new.push_back(y);
      names.push_back((names[q] == "1" ? "" : names[q]) + generator_names[i]);
    }
  }
  if (old_of_new.size() != order)
    throw std::invalid_argument(name + ": generators do not generate the group");

  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_.resize(order * order);
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y)
      g.table_[x * order + y] = new_index[at(old_of_new[x], old_of_new[y])];
  g.inverses_.assign(order, kUnset);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      if (g.mul(x, y) == 0) {
        if (g.mul(y, x) != 0) throw std::invalid_argument(g.name_ + ": one-sided inverse");
        g.inverses_[x] = y;
        break;
      }
    }
    if (g.inverses_[x] == kUnset) throw std::invalid_argument(g.name_ + ": missing inverse");
  }
  for (Elem gen : generators) g.generators_.push_back(new_index[gen]);
  g.generator_names_ = std::move(generator_names);
  g.names_ = std::move(names);
  if (!g.check_associativity()) throw std::invalid_argument(g.name_ + ": table is not associative");
  return g;
}

Elem FiniteGroup::pow(Elem x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  k %= static_cast<long long>(element_order(x));
  Elem result = identity();
  for (long long i = 0; i < k; ++i) result = mul(result, x);
  return result;
}

std::uint64_t FiniteGroup::element_order(Elem x) const {
  std::uint64_t o = 1;
  for (Elem y = x; y != identity(); y = mul(y, x)) ++o;
  return o;
}

std::optional<Elem> FiniteGroup::generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generator_names_[i] == name) return generators_[i];
  return std::nullopt;
}

Elem FiniteGroup::parse_word(std::string_view word) const {
  Elem result = identity();
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) ++pos;
  };
  skip_spaces();
  if (pos == word.size()) throw ParseError("empty group word");
  while (pos < word.size()) {
    char c = word[pos];
    Elem base;
    if (c == '1') {
      base = identity();
    } else {
      auto gen = generator(std::string_view(&word[pos], 1));
      if (!gen) {
        throw ParseError("unknown generator '" + std::string(1, c) + "' in word \"" +
                         std::string(word) + "\" for group " + name_);
      }
      base = *gen;
    }
    ++pos;
    long long exponent = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      bool brace = pos < word.size() && word[pos] == '{';
      if (brace) ++pos;
      bool negative = pos < word.size() && word[pos] == '-';
      if (negative) ++pos;
      if (pos >= word.size() || !std::isdigit(static_cast<unsigned char>(word[pos])))
        throw ParseError("missing exponent in word \"" + std::string(word) + "\"");
      exponent = 0;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos])))
        exponent = exponent * 10 + (word[pos++] - '0');
      if (negative) exponent = -exponent;
      if (brace) {
        if (pos >= word.size() || word[pos] != '}')
          throw ParseError("unbalanced brace in word \"" + std::string(word) + "\"");
        ++pos;
      }
    }
    result = mul(result, pow(base, exponent));
    skip_spaces();
  }
  return result;
}

std::vector<Elem> FiniteGroup::parse_set(std::string_view text) const {
  std::string body(text);
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '{' || c == '}'; }),
             body.end());
  std::vector<Elem> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string token = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    bool blank = std::all_of(token.begin(), token.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(parse_word(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string FiniteGroup::format_set(const std::vector<Elem>& elements) const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += element_name(elements[i]);
  }
  return out + "}";
}

FiniteGroup FiniteGroup::renamed(std::string name, std::vector<std::string> generator_names) const {
  std::vector<Elem> table = table_;
  return from_table(std::move(name), order_, std::move(table), generators_, std::move(generator_names));
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::size_t FiniteGroup::count_elements_of_order(std::uint64_t k) const {
  std::size_t count = 0;
  for (Elem x = 0; x < order_; ++x)
    if (element_order(x) == k) ++count;
  return count;
}

bool FiniteGroup::check_associativity(std::size_t samples) const {
  if (order_ <= 64) {
    for (Elem x = 0; x < order_; ++x)
      for (Elem y = 0; y < order_; ++y)
        for (Elem z = 0; z < order_; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order_ - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    Elem x = pick(rng), y = pick(rng), z = pick(rng);
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
  }
  return true;
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Elem>((x + y) % n);
  if (n == 1) return FiniteGroup::from_table("Z1", 1, std::move(table), {}, {});
  return FiniteGroup::from_table("Z" + std::to_string(n), n, std::move(table), {1}, {"a"});
}

FiniteGroup dihedral(std::size_t two_n) {
  if (two_n < 4 || two_n % 2 != 0)
    throw std::invalid_argument("dihedral group order must be even and >= 4");
  const std::size_t n = two_n / 2;
  // (i, j) = a^i b^j, index 2i + j
  std::vector<Elem> table(two_n * two_n);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          std::size_t i = (i1 + (j1 ? n - i2 : i2)) % n;
          std::size_t j = (j1 + j2) % 2;
          table[(2 * i1 + j1) * two_n + 2 * i2 + j2] = static_cast<Elem>(2 * i + j);
        }
  return FiniteGroup::from_table("D" + std::to_string(two_n), two_n, std::move(table), {2, 1},
                                 {"a", "b"});
}

FiniteGroup dicyclic(std::size_t m) {
  if (m < 2) throw std::invalid_argument("dicyclic parameter must be >= 2");
  const std::size_t n = 2 * m, order = 4 * m;
  std::vector<Elem> table(order * order);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          // a^i1 b^j1 a^i2 b^j2 = a^(i1 ± i2) b^(j1+j2), and b^2 = a^m
          std::size_t i = (i1 + (j1 ? n - i2 : i2)) % n;
          std::size_t j = j1 + j2;
          if (j == 2) {
            j = 0;
            i = (i + m) % n;
          }
          table[(2 * i1 + j1) * order + 2 * i2 + j2] = static_cast<Elem>(2 * i + j);
        }
  return FiniteGroup::from_table("Q" + std::to_string(order), order, std::move(table), {2, 1},
                                 {"a", "b"});
}

FiniteGroup quaternion8() { return dicyclic(2); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), order = ng * nh;
  std::vector<Elem> table(order * order);
  for (Elem x1 = 0; x1 < ng; ++x1)
    for (Elem y1 = 0; y1 < nh; ++y1)
      for (Elem x2 = 0; x2 < ng; ++x2)
        for (Elem y2 = 0; y2 < nh; ++y2)
          table[(x1 * nh + y1) * order + x2 * nh + y2] =
              static_cast<Elem>(g.mul(x1, x2) * nh + h.mul(y1, y2));
  std::vector<Elem> gens;
  for (Elem x : g.generators()) gens.push_back(static_cast<Elem>(x * nh));
  for (Elem y : h.generators()) gens.push_back(y);
  auto names = letter_names(gens.size());
  return FiniteGroup::from_table(g.name() + "x" + h.name(), order, std::move(table),
                                 std::move(gens), std::move(names));
}

std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                     const std::vector<Elem>& images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw std::invalid_argument("one image per generator required");
  std::vector<Elem> f(g.order(), kUnset);
  f[g.identity()] = h.identity();
  std::vector<Elem> queue{g.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g.mul(x, gens[i]);
      Elem fy = h.mul(f[x], images[i]);
      if (f[y] == kUnset) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return f;
}

std::optional<GroupAutomorphism> extend_to_automorphism(const FiniteGroup& g,
                                                        const std::vector<Elem>& images) {
  auto f = extend_homomorphism(g, g, images);
  if (!f) return std::nullopt;
  std::vector<bool> hit(g.order(), false);
  for (Elem y : *f) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  std::vector<Point> pts(f->begin(), f->end());
  return GroupAutomorphism{Permutation::unchecked(std::move(pts))};
}

bool is_automorphism(const FiniteGroup& g, const GroupAutomorphism& alpha) {
  if (alpha.map.degree() != g.order()) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (alpha(g.mul(x, y)) != g.mul(alpha(x), alpha(y))) return false;
  return true;
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<GroupAutomorphism>& action) {
  if (action.size() != k.generators().size())
    throw ActionNotWellDefined("one automorphism per generator of the acting group required");
  for (const auto& alpha : action) {
    if (!is_automorphism(n, alpha))
      throw ActionNotWellDefined("action image is not an automorphism of " + n.name());
  }
  const std::size_t nn = n.order(), nk = k.order(), order = nn * nk;
  // act[x] is the map n' -> n'^x for every x in k
  std::vector<std::vector<Elem>> act(nk);
  act[k.identity()].resize(nn);
  for (Elem y = 0; y < nn; ++y) act[k.identity()][y] = y;
  std::vector<Elem> queue{k.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    for (std::size_t i = 0; i < k.generators().size(); ++i) {
      Elem xg = k.mul(x, k.generators()[i]);
      std::vector<Elem> composed(nn);
      for (Elem y = 0; y < nn; ++y) composed[y] = action[i](act[x][y]);
      if (act[xg].empty()) {
        act[xg] = std::move(composed);
        queue.push_back(xg);
      } else if (act[xg] != composed) {
        throw ActionNotWellDefined("action is not a homomorphism from " + k.name() +
                                   " to Aut(" + n.name() + ")");
      }
    }
  }
  // (n1 k1)(n2 k2) = n1 (k1 n2 k1^-1) k1 k2 = (n1 * n2^(k1^-1), k1 k2)
  std::vector<Elem> table(order * order);
  for (Elem n1 = 0; n1 < nn; ++n1)
    for (Elem k1 = 0; k1 < nk; ++k1) {
      const auto& twist = act[k.inv(k1)];
      for (Elem n2 = 0; n2 < nn; ++n2)
        for (Elem k2 = 0; k2 < nk; ++k2)
          table[(n1 * nk + k1) * order + n2 * nk + k2] =
              static_cast<Elem>(n.mul(n1, twist[n2]) * nk + k.mul(k1, k2));
    }
  std::vector<Elem> gens;
  for (Elem x : n.generators()) gens.push_back(static_cast<Elem>(x * nk));
  for (Elem y : k.generators()) gens.push_back(y);
  auto names = letter_names(gens.size());
  try {
    return FiniteGroup::from_table(n.name() + ":" + k.name(), order, std::move(table),
                                   std::move(gens), std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ActionNotWellDefined(e.what());
  }
}

namespace {

// Checks that images of the first `m` generators extend consistently and
// injectively to the subgroup those generators span.
bool partial_extension_ok(const FiniteGroup& g, const std::vector<Elem>& images, std::size_t m) {
  const auto& gens = g.generators();
  std::vector<Elem> f(g.order(), kUnset);
  std::vector<bool> used(g.order(), false);
  f[g.identity()] = g.identity();
  used[g.identity()] = true;
  std::vector<Elem> queue{g.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    for (std::size_t i = 0; i < m; ++i) {
      Elem y = g.mul(x, gens[i]);
      Elem fy = g.mul(f[x], images[i]);
      if (f[y] == kUnset) {
        if (used[fy]) return false;
        used[fy] = true;
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

void search_automorphisms(const FiniteGroup& g, const std::vector<std::vector<Elem>>& candidates,
                          std::vector<Elem>& images, std::vector<GroupAutomorphism>& out) {
  const std::size_t i = images.size();
  if (i == candidates.size()) {
    if (auto alpha = extend_to_automorphism(g, images)) out.push_back(std::move(*alpha));
    if (out.size() > kMaxGroupAutomorphisms)
      throw ScaleExceeded(g.name() + " has more than " + std::to_string(kMaxGroupAutomorphisms) +
                          " automorphisms");
    return;
  }
  for (Elem c : candidates[i]) {
    images.push_back(c);
    if (partial_extension_ok(g, images, i + 1)) search_automorphisms(g, candidates, images, out);
    images.pop_back();
  }
}

}  // namespace

std::vector<GroupAutomorphism> group_automorphisms(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw ScaleExceeded("automorphism enumeration limited to order " + std::to_string(max_order) +
                        ", " + g.name() + " has order " + std::to_string(g.order()));
  }
  std::vector<std::vector<Elem>> candidates;
  for (Elem gen : g.generators()) {
    std::vector<Elem> same_order;
    const auto o = g.element_order(gen);
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == o) same_order.push_back(x);
    candidates.push_back(std::move(same_order));
  }
  std::vector<GroupAutomorphism> out;
  std::vector<Elem> images;
  search_automorphisms(g, candidates, images, out);
  // identity first, remaining in discovery order
  auto id = std::find_if(out.begin(), out.end(), [](const auto& a) { return a.map.is_identity(); });
  if (id != out.end()) std::rotate(out.begin(), id, id + 1);
  return out;
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<Elem> closure(const FiniteGroup& g, const std::vector<Elem>& seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (Elem s : seed) {
      Elem y = g.mul(out[q], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup right_regular_representation(const FiniteGroup& g) {
  std::vector<Permutation> gens;
  for (Elem x : g.generators()) {
    std::vector<Point> images(g.order());
    for (Elem h = 0; h < g.order(); ++h) images[h] = g.mul(h, x);
    gens.push_back(Permutation::unchecked(std::move(images)));
  }
  return PermGroup(g.order(), std::move(gens));
}

}  // namespace haarlab
