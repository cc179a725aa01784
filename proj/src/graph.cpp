#include "haarlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

std::size_t common_neighbors(const Graph& g, Point a, Point b) {
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::size_t count = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

void require_vertex(const Graph& g, Point v) {
  if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(std::size_t n) : rows_(n, boost::dynamic_bitset<>(n)), adj_(n) {}

void Graph::add_edge(Point u, Point v) {
  require_vertex(*this, u);
  require_vertex(*this, v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (rows_[u][v]) return;
  rows_[u][v] = true;
  rows_[v][u] = true;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

std::vector<std::pair<Point, Point>> Graph::edges() const {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(edges_);
  for (Point u = 0; u < order(); ++u)
    for (Point v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != order()) return false;
  for (Point u = 0; u < order(); ++u)
    for (Point v : adj_[u])
      if (!rows_[p[u]][p[v]]) return false;
  return true;
}

std::string Graph::to_graph6() const {
  const std::size_t n = order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0, value = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      value = (value << 1) | (rows_[i][j] ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        bits = value = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  return out;
}

Graph Graph::from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  std::size_t pos = 0;
  auto take = [&]() -> std::size_t {
    if (pos >= text.size()) throw ParseError("graph6: truncated input");
    return static_cast<std::size_t>(text[pos++] - 63);
  };
  std::size_t n = take();
  if (n == 63) {
    std::size_t width = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      width = 6;
    }
    n = 0;
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | take();
  }
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (nbits + 5) / 6;
  if (text.size() != expected) throw ParseError("graph6: wrong length for " + std::to_string(n) + " vertices");
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      auto byte = static_cast<unsigned>(text[pos + bit / 6] - 63);
      if ((byte >> (5 - bit % 6)) & 1u) g.add_edge(static_cast<Point>(i), static_cast<Point>(j));
    }
  return g;
}

std::string Graph::to_dot(const std::string& name, const std::vector<std::string>& labels,
                          const std::vector<std::string>& colors) const {
  std::string out = "graph \"" + name + "\" {\n  node [style=filled];\n";
  for (Point v = 0; v < order(); ++v) {
    out += "  " + std::to_string(v) + " [";
    out += "label=\"" + (labels.empty() ? std::to_string(v) : labels[v]) + "\"";
    if (!colors.empty()) out += ", fillcolor=\"" + colors[v] + "\"";
    out += "];\n";
  }
  for (auto [u, v] : edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> sizes;
  std::vector<Point> queue;
  for (Point s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    queue.assign(1, s);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (Point w : g.neighbors(queue[k]))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    sizes.push_back(queue.size());
  }
  return sizes;
}

bool is_connected(const Graph& g) { return component_sizes(g).size() <= 1; }

std::vector<Point> neighborhood(const Graph& g, Point v) {
  require_vertex(g, v);
  return g.neighbors(v);
}

std::vector<Point> distance2_set(const Graph& g, Point v) {
  require_vertex(g, v);
  std::vector<Point> out;
  for (Point w : g.neighbors(v))
    for (Point x : g.neighbors(w))
      if (x != v && !g.has_edge(v, x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t four_cycles_through_edge(const Graph& g, Point u, Point w) {
  require_vertex(g, u);
  require_vertex(g, w);
  if (!g.has_edge(u, w))
    throw NotAnEdge("{" + std::to_string(u) + "," + std::to_string(w) + "} is not an edge");
  // u - w - x - y - u: x ranges over Γ(w)\{u}, y over Γ(x)∩Γ(u)\{w}
  std::size_t count = 0;
  for (Point x : g.neighbors(w)) {
    if (x == u) continue;
    count += common_neighbors(g, x, u) - 1;
  }
  return count;
}

std::size_t four_cycles_through_vertex(const Graph& g, Point v) {
  require_vertex(g, v);
  const auto& nv = g.neighbors(v);
  std::size_t count = 0;
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j) count += common_neighbors(g, nv[i], nv[j]) - 1;
  return count;
}

std::size_t four_cycles_through_path(const Graph& g, Point a, Point v, Point b) {
  require_vertex(g, a);
  require_vertex(g, v);
  require_vertex(g, b);
  if (a == b || !g.has_edge(a, v) || !g.has_edge(v, b))
    throw NotAnEdge("not a 2-path: " + std::to_string(a) + "-" + std::to_string(v) + "-" + std::to_string(b));
  return common_neighbors(g, a, b) - 1;
}

}  // namespace haarlab
