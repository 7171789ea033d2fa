#include "gcg/permutation.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "gcg/errors.hpp"

namespace gcg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw ValidationError("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw ValidationError("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point image = images[i];
    if (image >= images.size()) {
      throw ValidationError("image " + std::to_string(image) + " of point " + std::to_string(i) +
                            " is out of range for degree " + std::to_string(images.size()));
    }
    if (seen[image]) {
      throw ValidationError("image array is not a bijection: " + std::to_string(image) +
                            " appears twice");
    }
    seen[image] = true;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      const Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) throw ValidationError("cycle point out of range");
      if (used[from]) throw ValidationError("cycles are not disjoint");
      used[from] = true;
      result.images_[from] = to;
    }
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), 0);
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                  : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++length;
    }
    const std::uint64_t g = std::gcd(result, length);
    if (result / g > std::numeric_limits<std::uint64_t>::max() / length) {
      throw std::overflow_error("permutation order exceeds 64 bits");
    }
    result = result / g * length;
  }
  return result;
}

Point Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    Point p = static_cast<Point>(start);
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ',';
      out += std::to_string(p);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) throw DegreeMismatch(lhs.degree(), rhs.degree());
  std::vector<Point> images(lhs.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = rhs.images_[lhs.images_[i]];
  return Permutation(std::move(images), 0);
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree()) throw DegreeMismatch(x.degree(), g.degree());
  // x^g maps g(i) to g(x(i)).
  std::vector<Point> images(x.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[g.images_[i]] = g.images_[x.images_[i]];
  return Permutation(std::move(images), 0);
}

bool commute(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  for (Point i = 0; i < a.degree(); ++i) {
    if (b[a[i]] != a[b[i]]) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (const Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gcg
