#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace haarlab {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1}.
///
/// Products act left to right: (p * q)(x) = q(p(x)). This is the only
/// convention used anywhere in the library, so exponent-style formulas such
/// as x^{gh} = (x^g)^h translate directly into `p * q`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Skips the bijection check; the caller guarantees `images` is valid.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses a one-line image list such as "2 0 1".
  static Permutation parse_images(std::string_view text);

  /// Parses cycle notation such as "(0 2 1)(3 4)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool has_fixed_point() const;
  std::optional<Point> first_moved_point() const;
  std::size_t support_size() const;

  Permutation inverse() const;

  /// Order of the permutation as an element of Sym(n).
  std::uint64_t order() const;

  std::string to_images_string() const;
  std::string to_cycle_string() const;

  std::size_t hash() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Returns x -> q(p(x)). Throws DegreeMismatch on unequal degrees.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// p^-1 * q * p, i.e. q conjugated by p in exponent notation.
Permutation conjugate(const Permutation& q, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace haarlab
