#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gcg {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image array.
///
/// Products follow the right-action convention: `p * q` applies p first, then q,
/// so `(p * q)[i] == q[p[i]]`. Conjugation `x^g` is `g^-1 * x * g`.
class Permutation {
 public:
  /// Identity on one point.
  Permutation() : images_{0} {}

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws ValidationError unless `images` is a bijection on 0..size-1.
  static Permutation from_images(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles, e.g. `from_cycles(3, {{0, 1, 2}})`.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// lcm of the cycle lengths. Throws std::overflow_error past 2^64.
  std::uint64_t order() const;

  /// Smallest point not fixed, or degree() for the identity.
  Point smallest_moved_point() const;

  /// GAP-style cycle notation with 0-based points: "(0,1,2)(3,4)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend Permutation conjugate(const Permutation& x, const Permutation& g);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic by images; the identity is the least permutation of its degree.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images, int) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Applies p first, then q. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// x^g = g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);

bool commute(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace gcg
