#include "haarlab/atlas.hpp"

#include <charconv>
#include <map>
#include <optional>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<std::size_t> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

GroupAutomorphism automorphism_from_words(const FiniteGroup& g, const std::vector<std::string>& words) {
  std::vector<Elem> images;
  for (const auto& w : words) images.push_back(g.parse_word(w));
  auto alpha = extend_to_automorphism(g, images);
  if (!alpha) throw ActionNotWellDefined("generator images do not define an automorphism of " + g.name());
  return *alpha;
}

std::string pw(const std::string& x, std::size_t e) { return x + "^" + std::to_string(e); }
std::string comm(const std::string& x, const std::string& y) {
  return x + "^-1" + y + "^-1" + x + y;
}
std::string conj_word(const std::string& x, const std::string& g) { return g + "^-1" + x + g; }

FiniteGroup checked_order(FiniteGroup g) {
  if (g.order() > kAtlasMaxOrder)
    throw ScaleExceeded(g.name() + " exceeds the atlas order limit " + std::to_string(kAtlasMaxOrder));
  return g;
}

// ---- named constructions ----

FiniteGroup d8_x_z2() { return direct_product(dihedral(8), cyclic(2)); }

FiniteGroup row2() {
  // (Z4 x Z2) with c: a -> a, b -> b a^2, so that [b, c] = a^2
  FiniteGroup n = direct_product(cyclic(4), cyclic(2));
  return semidirect_product(n, cyclic(2), {automorphism_from_words(n, {"a", "ba^2"})});
}

FiniteGroup z8_by_z2(const std::string& image) {
  FiniteGroup n = cyclic(8);
  return semidirect_product(n, cyclic(2), {automorphism_from_words(n, {image})});
}

FiniteGroup q8_x_z2_x_z2() {
  return direct_product(direct_product(quaternion8(), cyclic(2)), cyclic(2));
}

FiniteGroup a4() {
  FiniteGroup n = direct_product(cyclic(2), cyclic(2));
  return semidirect_product(n, cyclic(3), {automorphism_from_words(n, {"b", "ab"})});
}

FiniteGroup f20() {
  FiniteGroup n = cyclic(5);
  return semidirect_product(n, cyclic(4), {automorphism_from_words(n, {"a^2"})});
}

// Z_p^2 by an involution inverting the first generator (if invert_first) and the second.
FiniteGroup zp2_by_z2(std::size_t p, bool invert_first) {
  FiniteGroup n = direct_product(cyclic(p), cyclic(p));
  return semidirect_product(n, cyclic(2),
                            {automorphism_from_words(n, {invert_first ? "a^-1" : "a", "b^-1"})});
}

std::size_t odd_prime_arg(std::string_view name, std::string_view prefix) {
  std::string_view inner = name.substr(prefix.size());
  if (inner.size() < 3 || inner.front() != '(' || inner.back() != ')')
    throw UnknownName("unknown group name: " + std::string(name));
  auto p = parse_number(inner.substr(1, inner.size() - 2));
  if (!p || !is_prime(*p) || *p == 2)
    throw UnknownName(std::string(name) + ": parameter must be an odd prime");
  if (2 * *p * *p > kAtlasMaxOrder)
    throw ScaleExceeded(std::string(name) + " exceeds the atlas order limit");
  return *p;
}

FiniteGroup base_factor(std::string_view token) {
  if (token == "A4") return a4().renamed("A4", {"a", "b", "c"});
  if (token == "F20") return f20().renamed("F20", {"a", "g"});
  if (token == "SD16") return z8_by_z2("a^3").renamed("SD16", {"a", "b"});
  if (token.size() >= 2) {
    auto n = parse_number(token.substr(1));
    if (n) {
      if (*n > kAtlasMaxOrder) throw ScaleExceeded(std::string(token) + " exceeds the atlas order limit");
      if (token[0] == 'Z' && *n >= 1) return cyclic(*n);
      if (token[0] == 'D' && *n >= 4 && *n % 2 == 0) return dihedral(*n);
      if (token[0] == 'Q' && *n >= 8 && *n % 4 == 0) return dicyclic(*n / 4);
    }
  }
  throw UnknownName("unknown group factor: " + std::string(token));
}

FiniteGroup product_from_name(std::string_view name) {
  std::vector<FiniteGroup> factors;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t end = name.find('x', start);
    std::string_view token = name.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t repeat = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      auto r = parse_number(token.substr(caret + 1));
      if (!r || *r == 0) throw UnknownName("bad power in group name: " + std::string(name));
      repeat = *r;
      token = token.substr(0, caret);
    }
    FiniteGroup f = base_factor(token);
    for (std::size_t i = 0; i < repeat; ++i) factors.push_back(f);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.order();
    if (total > kAtlasMaxOrder)
      throw ScaleExceeded(std::string(name) + " exceeds the atlas order limit " + std::to_string(kAtlasMaxOrder));
  }
  FiniteGroup g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
  return g.renamed(std::string(name), g.generator_names());
}

std::vector<Relation> dihedral_relations(std::size_t n) {
  return {{pw("a", n), "1"}, {"b^2", "1"}, {conj_word("a", "b"), "a^-1"}};
}

std::vector<Relation> quaternion_relations() {
  return {{"a^4", "1"}, {"a^2", "b^2"}, {conj_word("a", "b"), "a^-1"}};
}

}  // namespace

FiniteGroup small_table_row6(int sign_a, int sign_b) {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
    throw std::invalid_argument("signs must be +1 or -1");
  FiniteGroup q8 = quaternion8();
  std::string image_a = sign_a > 0 ? "b" : "b^-1";
  std::string image_b = sign_b > 0 ? "ab" : "a^-1b";
  auto name = std::string("H6(") + (sign_a > 0 ? "+" : "-") + (sign_b > 0 ? "+" : "-") + ")";
  FiniteGroup g = semidirect_product(q8, cyclic(3), {automorphism_from_words(q8, {image_a, image_b})});
  return g.renamed(name, {"a", "b", "c"});
}

FiniteGroup atlas(std::string_view name) {
  const std::string n(name);
  if (n == "H1" || n == "H16_1") return d8_x_z2().renamed(n, {"a", "b", "c"});
  if (n == "H2" || n == "H16_2") return row2().renamed(n, {"a", "b", "c"});
  if (n == "H3" || n == "H16_3") return dicyclic(4).renamed(n, {"a", "b"});
  if (n == "H4" || n == "H16_4") return z8_by_z2("a^3").renamed(n, {"a", "b"});
  if (n == "H16_5") return dihedral(16).renamed(n, {"a", "b"});
  if (n == "H16_6") return direct_product(quaternion8(), cyclic(2)).renamed(n, {"a", "b", "c"});
  if (n == "H5") return q8_x_z2_x_z2().renamed(n, {"a", "b", "c", "d"});
  if (n == "H6") return small_table_row6(1, 1).renamed(n, {"a", "b", "c"});
  if (n == "H7") return a4().renamed(n, {"a", "b", "c"});
  if (n == "H8") return f20().renamed(n, {"a", "g"});
  if (n.rfind("H9(", 0) == 0) {
    std::size_t p = odd_prime_arg(name, "H9");
    return zp2_by_z2(p, true).renamed(n, {"a", "c", "b"});
  }
  if (n.rfind("H1(", 0) == 0) {
    std::size_t p = odd_prime_arg(name, "H1");
    return dihedral(2 * p * p).renamed(n, {"a", "b"});
  }
  if (n.rfind("H2(", 0) == 0) {
    std::size_t p = odd_prime_arg(name, "H2");
    return zp2_by_z2(p, true).renamed(n, {"a", "b", "c"});
  }
  if (n.rfind("H3(", 0) == 0) {
    std::size_t p = odd_prime_arg(name, "H3");
    return zp2_by_z2(p, false).renamed(n, {"a", "b", "c"});
  }
  if (n.empty() || n[0] == 'H') throw UnknownName("unknown group name: " + n);
  return checked_order(product_from_name(name));
}

std::vector<std::string> atlas_catalog() {
  return {"H1",    "H2",    "H3",    "H4",    "H5",    "H6",    "H7",    "H8",     "H9(3)",
          "H9(5)", "H16_1", "H16_2", "H16_3", "H16_4", "H16_5", "H16_6", "Q8xZ2xZ2", "H1(3)",
          "H2(3)", "H3(3)", "H1(5)", "H2(5)", "H3(5)"};
}

std::vector<Relation> atlas_relations(std::string_view name) {
  const std::string n(name);
  if (n == "H1" || n == "H16_1") {
    auto r = dihedral_relations(4);
    r.push_back({"c^2", "1"});
    r.push_back({comm("a", "c"), "1"});
    r.push_back({comm("b", "c"), "1"});
    return r;
  }
  if (n == "H2" || n == "H16_2") {
    return {{"a^4", "1"}, {"b^2", "1"}, {"c^2", "1"}, {comm("a", "b"), "1"}, {comm("a", "c"), "1"},
            {comm("b", "c"), "a^2"}};
  }
  if (n == "H3" || n == "H16_3") return {{"a^8", "1"}, {"b^2", "a^4"}, {conj_word("a", "b"), "a^-1"}};
  if (n == "H4" || n == "H16_4") return {{"a^8", "1"}, {"b^2", "1"}, {conj_word("a", "b"), "a^3"}};
  if (n == "H16_5") return dihedral_relations(8);
  if (n == "H16_6" || n == "Q8xZ2") {
    auto r = quaternion_relations();
    r.push_back({"c^2", "1"});
    r.push_back({comm("a", "c"), "1"});
    r.push_back({comm("b", "c"), "1"});
    return r;
  }
  if (n == "H5" || n == "Q8xZ2xZ2") {
    auto r = quaternion_relations();
    r.push_back({"b^4", "1"});
    r.push_back({"c^2", "1"});
    r.push_back({"d^2", "1"});
    for (auto [x, y] : {std::pair{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}})
      r.push_back({comm(x, y), "1"});
    return r;
  }
  if (n == "H6") {
    auto r = quaternion_relations();
    r.push_back({"b^4", "1"});
    r.push_back({"c^3", "1"});
    r.push_back({conj_word("a", "c"), "b"});
    r.push_back({conj_word("b", "c"), "ab"});
    return r;
  }
  if (n == "H7" || n == "A4") {
    return {{"a^2", "1"}, {"b^2", "1"}, {"c^3", "1"}, {comm("a", "b"), "1"}, {conj_word("a", "c"), "b"},
            {conj_word("b", "c"), "ab"}};
  }
  if (n == "H8" || n == "F20") return {{"a^5", "1"}, {"g^4", "1"}, {conj_word("a", "g"), "a^2"}};
  if (n == "Q8") return quaternion_relations();
  auto p_of = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (n.rfind(std::string(prefix) + "(", 0) != 0) return std::nullopt;
    return odd_prime_arg(name, prefix);
  };
  if (auto p = p_of("H9")) {
    return {{pw("a", *p), "1"}, {pw("c", *p), "1"}, {"b^2", "1"}, {comm("a", "c"), "1"},
            {conj_word("a", "b"), "a^-1"}, {conj_word("c", "b"), "c^-1"}};
  }
  if (auto p = p_of("H1")) return dihedral_relations(*p * *p);
  if (auto p = p_of("H2")) {
    return {{pw("a", *p), "1"}, {pw("b", *p), "1"}, {"c^2", "1"}, {comm("a", "b"), "1"},
            {conj_word("a", "c"), "a^-1"}, {conj_word("b", "c"), "b^-1"}};
  }
  if (auto p = p_of("H3")) {
    return {{pw("a", *p), "1"}, {pw("b", *p), "1"}, {"c^2", "1"}, {comm("a", "b"), "1"},
            {comm("a", "c"), "1"}, {conj_word("b", "c"), "b^-1"}};
  }
  return {};
}

std::string small_table_connection_set(int row) {
  static const std::map<int, std::string> sets{
      {1, "{1,a,b,c,ab,abc}"}, {2, "{1,a,b,ab,ac,abc}"},          {3, "{1,a,b,a^5,ab,a^5b}"},
      {4, "{1,a,b,ab}"},       {5, "{1,a,b,b^-1,ab,ac,bd,abd}"}, {6, "{1,a,bc,abc}"},
      {7, "{1,a,c,abc}"},      {8, "{1,a,g}"},                    {9, "{1,a,c,b,ab,cb}"}};
  auto it = sets.find(row);
  if (it == sets.end()) throw UnknownName("small-order table has rows 1..9, got " + std::to_string(row));
  return it->second;
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json gens = nlohmann::json::object();
  for (std::size_t i = 0; i < g.generators().size(); ++i) gens[g.generator_names()[i]] = g.generators()[i];
  nlohmann::json table = nlohmann::json::array();
  for (Elem x = 0; x < g.order(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (Elem y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
    table.push_back(std::move(row));
  }
  return {{"name", g.name()},
          {"order", g.order()},
          {"generators", std::move(gens)},
          {"element_names", g.element_names()},
          {"table", std::move(table)}};
}

}  // namespace haarlab
