#include "haarlab/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "haarlab/error.hpp"

namespace haarlab {

namespace {

bool is_bijection(const std::vector<Point>& images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

std::vector<long long> parse_integers(std::string_view text) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in permutation text");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw std::invalid_argument("image list is not a bijection");
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x]) throw std::invalid_argument("cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_images(std::string_view text) {
  std::vector<Point> images;
  for (long long v : parse_integers(text)) {
    if (v < 0) throw ParseError("negative point in image list");
    images.push_back(static_cast<Point>(v));
  }
  if (!is_bijection(images)) throw ParseError("image list is not a bijection");
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle");
    std::vector<Point> cycle;
    for (long long v : parse_integers(text.substr(i + 1, close - i - 1))) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree) throw ParseError("point out of range");
      cycle.push_back(static_cast<Point>(v));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::has_fixed_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return true;
  return false;
}

std::optional<Point> Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::size_t Permutation::support_size() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) ++count;
  return count;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return unchecked(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_images_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ images_.size();
  for (Point x : images_) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[static_cast<Point>(i)]];
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(const Permutation& q, const Permutation& p) {
  return p.inverse() * q * p;
}

}  // namespace haarlab
