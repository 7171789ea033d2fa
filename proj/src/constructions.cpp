#include "gcg/constructions.hpp"

#include <array>
#include <deque>
#include <set>
#include <unordered_set>

#include "gcg/errors.hpp"
#include "gcg/primes.hpp"
#include "gcg/structure.hpp"

namespace gcg {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> cycle;
  for (std::size_t i = 0; i < length; ++i) cycle.push_back(static_cast<Point>(first + i));
  return Permutation::from_cycles(degree, {cycle});
}

void require_params(std::string_view name, std::span<const std::uint64_t> params, std::size_t count) {
  if (params.size() != count) {
    throw ValidationError(std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                          std::to_string(params.size()));
  }
}

}  // namespace

PermGroup cyclic_group(std::uint64_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  if (n == 1) return PermGroup();
  return PermGroup(n, {cycle_on(n, 0, n)});
}

PermGroup dihedral_group(std::uint64_t order) {
  if (order < 6 || order % 2 != 0) {
    throw ValidationError("dihedral group order must be even and at least 6, got " + std::to_string(order));
  }
  const std::uint64_t m = order / 2;
  std::vector<Point> reflection(m);
  for (std::uint64_t i = 0; i < m; ++i) reflection[i] = static_cast<Point>((m - i) % m);
  return PermGroup(m, {cycle_on(m, 0, m), Permutation::from_images(reflection)});
}

PermGroup symmetric_group(std::uint64_t n) {
  if (n == 0) throw ValidationError("symmetric group degree must be positive");
  if (n == 1) return PermGroup();
  if (n == 2) return PermGroup(2, {cycle_on(2, 0, 2)});
  return PermGroup(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)});
}

PermGroup alternating_group(std::uint64_t n) {
  if (n == 0) throw ValidationError("alternating group degree must be positive");
  if (n < 3) return PermGroup(n, {});
  std::vector<Permutation> gens;
  for (std::uint64_t i = 0; i + 2 < n; ++i) gens.push_back(cycle_on(n, i, 3));
  return PermGroup(n, std::move(gens));
}

PermGroup elementary_abelian_group(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (k == 0) throw ValidationError("elementary abelian rank must be positive");
  std::vector<Permutation> gens;
  for (std::uint64_t i = 0; i < k; ++i) gens.push_back(cycle_on(p * k, i * p, p));
  return PermGroup(p * k, std::move(gens));
}

PermGroup quaternion8() {
  // element u + 4s stands for (-1)^s * unit u with units 1, i, j, k
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> table{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto right_multiplication = [&](int unit) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) {
      const auto [sign, product] = table[x % 4][unit];
      images[x] = static_cast<Point>(product + 4 * ((x / 4 + sign) % 2));
    }
    return Permutation::from_images(images);
  };
  return PermGroup(8, {right_multiplication(1), right_multiplication(2)});
}

PermGroup catalog_build(std::string_view name, std::span<const std::uint64_t> params) {
  if (name == "cyclic") {
    require_params(name, params, 1);
    return cyclic_group(params[0]);
  }
  if (name == "dihedral") {
    require_params(name, params, 1);
    return dihedral_group(params[0]);
  }
  if (name == "symmetric") {
    require_params(name, params, 1);
    return symmetric_group(params[0]);
  }
  if (name == "alternating") {
    require_params(name, params, 1);
    return alternating_group(params[0]);
  }
  if (name == "elementary_abelian") {
    require_params(name, params, 2);
    return elementary_abelian_group(params[0], params[1]);
  }
  if (name == "quaternion8") {
    require_params(name, params, 0);
    return quaternion8();
  }
  throw ValidationError("unknown catalog group '" + std::string(name) + "'");
}

std::size_t vector_index(std::span<const std::uint32_t> v, std::uint32_t p) {
  std::size_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * p + v[i];
  return index;
}

std::vector<std::uint32_t> index_vector(std::size_t index, std::uint32_t p, std::size_t k) {
  std::vector<std::uint32_t> v(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return v;
}

Permutation affine_permutation(std::uint32_t p, const Matrix& m, std::span<const std::uint32_t> b) {
  const std::size_t k = m.size();
  if (b.size() != k) throw ValidationError("translation vector has the wrong dimension");
  std::size_t points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= p;
  std::vector<Point> images(points);
  for (std::size_t x = 0; x < points; ++x) {
    const auto v = index_vector(x, p, k);
    std::vector<std::uint32_t> w(k);
    for (std::size_t r = 0; r < k; ++r) {
      std::uint64_t acc = b[r];
      for (std::size_t c = 0; c < k; ++c) acc += static_cast<std::uint64_t>(m[r][c]) * v[c];
      w[r] = static_cast<std::uint32_t>(acc % p);
    }
    images[x] = static_cast<Point>(vector_index(w, p));
  }
  return Permutation::from_images(std::move(images));
}

Matrix linear_part(std::uint32_t p, std::size_t k, const Permutation& x) {
  if (x[0] != 0) throw ValidationError("permutation does not fix the zero vector");
  Matrix m(k, std::vector<std::uint32_t>(k));
  std::size_t basis = 1;
  for (std::size_t c = 0; c < k; ++c) {
    const auto column = index_vector(x[static_cast<Point>(basis)], p, k);
    for (std::size_t r = 0; r < k; ++r) m[r][c] = column[r];
    basis *= p;
  }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::uint32_t p) {
  const std::size_t k = a.size();
  Matrix out(k, std::vector<std::uint32_t>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc += static_cast<std::uint64_t>(a[r][t]) * b[t][c];
      out[r][c] = static_cast<std::uint32_t>(acc % p);
    }
  }
  return out;
}

bool is_invertible(const Matrix& m, std::uint32_t p) {
  // Gaussian elimination mod p
  Matrix a = m;
  const std::size_t k = a.size();
  auto power = [p](std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
      if (e & 1U) r = r * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return r;
  };
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] % p == 0) ++pivot;
    if (pivot == k) return false;
    std::swap(a[pivot], a[col]);
    const std::uint64_t inv = power(a[col][col], p - 2);
    for (std::size_t r = col + 1; r < k; ++r) {
      const std::uint64_t factor = a[r][col] * inv % p;
      for (std::size_t c = col; c < k; ++c) {
        a[r][c] = static_cast<std::uint32_t>((a[r][c] + p * p - factor * a[col][c] % p) % p);
      }
    }
  }
  return true;
}

GroupPair affine_semidirect(std::uint32_t p, std::size_t k, const MatrixGroupSpec& h) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (k == 0) throw ValidationError("dimension must be positive");
  if (h.prime != p || h.dimension != k) throw ValidationError("matrix group does not match F_p^k");
  std::size_t points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= p;

  const std::vector<std::uint32_t> zero(k, 0);
  std::vector<Permutation> translations;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix identity(k, std::vector<std::uint32_t>(k, 0));
    for (std::size_t r = 0; r < k; ++r) identity[r][r] = 1;
    std::vector<std::uint32_t> e(k, 0);
    e[i] = 1;
    translations.push_back(affine_permutation(p, identity, e));
  }
  std::vector<Permutation> gens = translations;
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    const Matrix& m = h.generators[i];
    if (m.size() != k) throw ValidationError("generator " + std::to_string(i) + " has the wrong size");
    for (const auto& row : m) {
      if (row.size() != k) throw ValidationError("generator " + std::to_string(i) + " is not square");
      for (const auto entry : row) {
        if (entry >= p) throw ValidationError("matrix entry out of range 0..p-1");
      }
    }
    if (!is_invertible(m, p)) throw ValidationError("generator " + std::to_string(i) + " is singular");
    gens.push_back(affine_permutation(p, m, zero));
  }
  PermGroup g(points, std::move(gens));
  Subgroup n = Subgroup::generated_by(g, translations);
  return {std::move(g), std::move(n), "affine(" + std::to_string(p) + "," + std::to_string(k) + ")"};
}

Permutation DirectProduct::embed_first(const Permutation& a) const {
  if (a.degree() != first_degree) throw DegreeMismatch(first_degree, a.degree());
  std::vector<Point> images(first_degree + second_degree);
  for (std::size_t i = 0; i < first_degree; ++i) images[i] = a[static_cast<Point>(i)];
  for (std::size_t i = first_degree; i < images.size(); ++i) images[i] = static_cast<Point>(i);
  return Permutation::from_images(std::move(images));
}

Permutation DirectProduct::embed_second(const Permutation& b) const {
  if (b.degree() != second_degree) throw DegreeMismatch(second_degree, b.degree());
  std::vector<Point> images(first_degree + second_degree);
  for (std::size_t i = 0; i < first_degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < second_degree; ++i) {
    images[first_degree + i] = static_cast<Point>(first_degree + b[static_cast<Point>(i)]);
  }
  return Permutation::from_images(std::move(images));
}

DirectProduct direct_product(const PermGroup& a, const PermGroup& b) {
  DirectProduct dp;
  dp.first_degree = a.degree();
  dp.second_degree = b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& x : a.generators()) gens.push_back(dp.embed_first(x));
  for (const Permutation& y : b.generators()) gens.push_back(dp.embed_second(y));
  Limits limits = a.limits();
  limits.enumeration_cap = std::max(a.limits().enumeration_cap, b.limits().enumeration_cap);
  dp.group = PermGroup(dp.first_degree + dp.second_degree, std::move(gens), limits);
  return dp;
}

namespace {

// F_8 = F_2[t]/(t^3 + t + 1), elements as bit masks of polynomial coefficients.
std::uint32_t f8_multiply(std::uint32_t a, std::uint32_t b) {
  std::uint32_t product = 0;
  for (int bit = 0; bit < 3; ++bit) {
    if (b & (1U << bit)) product ^= a << bit;
  }
  for (int bit = 4; bit >= 3; --bit) {
    if (product & (1U << bit)) product ^= 0b1011U << (bit - 3);
  }
  return product;
}

}  // namespace

GroupPair agl_semilinear(std::uint64_t q) {
  if (q != 8) throw ValidationError("semilinear affine group is only built for q = 8");
  auto map = [](auto f) {
    std::vector<Point> images(8);
    for (std::uint32_t x = 0; x < 8; ++x) images[x] = f(x);
    return Permutation::from_images(images);
  };
  std::vector<Permutation> translations;
  for (std::uint32_t b : {1U, 2U, 4U}) {
    translations.push_back(map([b](std::uint32_t x) { return x ^ b; }));
  }
  const Permutation times_t = map([](std::uint32_t x) { return f8_multiply(x, 2); });
  const Permutation frobenius = map([](std::uint32_t x) { return f8_multiply(x, x); });
  PermGroup g(8, {translations[0], times_t, frobenius});
  Subgroup n = Subgroup::generated_by(g, translations);
  return {std::move(g), std::move(n), "agl1:8"};
}

namespace {

using M2 = std::array<std::uint32_t, 4>;  // [[a, b], [c, d]]
constexpr std::uint32_t kP11 = 11;

M2 mul2(const M2& x, const M2& y) {
  return {(x[0] * y[0] + x[1] * y[2]) % kP11, (x[0] * y[1] + x[1] * y[3]) % kP11,
          (x[2] * y[0] + x[3] * y[2]) % kP11, (x[2] * y[1] + x[3] * y[3]) % kP11};
}

constexpr M2 kIdentity2{1, 0, 0, 1};

unsigned order2(const M2& x) {
  M2 power = x;
  unsigned order = 1;
  while (power != kIdentity2) {
    power = mul2(power, x);
    ++order;
  }
  return order;
}

std::uint32_t encode(const M2& x) { return ((x[0] * kP11 + x[1]) * kP11 + x[2]) * kP11 + x[3]; }

// Closure of <a, b>; stops early once it exceeds `cap` elements.
std::vector<M2> matrix_closure(const M2& a, const M2& b, std::size_t cap) {
  std::unordered_set<std::uint32_t> seen{encode(kIdentity2)};
  std::vector<M2> elements{kIdentity2};
  for (std::size_t i = 0; i < elements.size() && elements.size() <= cap; ++i) {
    for (const M2& g : {a, b}) {
      const M2 next = mul2(elements[i], g);
      if (seen.insert(encode(next)).second) elements.push_back(next);
    }
  }
  return elements;
}

bool fixes_nonzero_vector(const M2& x) {
  // det(x - I) == 0
  const std::uint32_t a = (x[0] + kP11 - 1) % kP11;
  const std::uint32_t d = (x[3] + kP11 - 1) % kP11;
  return (a * d + kP11 * kP11 - x[1] * x[2] % kP11) % kP11 == 0;
}

Matrix to_matrix(const M2& x) { return {{x[0], x[1]}, {x[2], x[3]}}; }

}  // namespace

MatrixGroupSpec find_sl25_in_sl211() {
  std::vector<M2> order4;
  std::vector<M2> order3;
  for (std::uint32_t a = 0; a < kP11; ++a) {
    for (std::uint32_t b = 0; b < kP11; ++b) {
      for (std::uint32_t c = 0; c < kP11; ++c) {
        for (std::uint32_t d = 0; d < kP11; ++d) {
          if ((a * d + kP11 * kP11 - b * c) % kP11 != 1) continue;
          const M2 x{a, b, c, d};
          const unsigned order = order2(x);
          if (order == 4) order4.push_back(x);
          if (order == 3) order3.push_back(x);
        }
      }
    }
  }
  for (const M2& s : order4) {
    for (const M2& t : order3) {
      const unsigned product_order = order2(mul2(s, t));
      if (product_order != 5 && product_order != 10) continue;
      const auto elements = matrix_closure(s, t, 120);
      if (elements.size() != 120) continue;
      bool free_action = true;
      for (const M2& x : elements) {
        if (x != kIdentity2 && fixes_nonzero_vector(x)) {
          free_action = false;
          break;
        }
      }
      if (free_action) return {kP11, 2, {to_matrix(s), to_matrix(t)}};
    }
  }
  throw GroupError("no fixed-point-free SL(2,5) found in SL(2,11)");
}

MatrixGroupSpec sl25_fixture() {
  return {kP11, 2, {{{0, 1}, {10, 0}}, {{0, 2}, {5, 10}}}};
}

PermGroup sl25_on_plane() {
  const MatrixGroupSpec spec = sl25_fixture();
  const std::vector<std::uint32_t> zero(2, 0);
  std::vector<Permutation> gens;
  for (const Matrix& m : spec.generators) gens.push_back(affine_permutation(spec.prime, m, zero));
  PermGroup h(121, std::move(gens));
  if (h.order() != 120) throw GroupError("SL(2,5) fixture does not generate a group of order 120");
  return h;
}

GroupPair example1_pair() {
  const PermGroup h = sl25_on_plane();
  const Subgroup p = sylow(h, 5);
  const Subgroup normalizer_of_p = normalizer(h, p);
  MatrixGroupSpec spec{kP11, 2, {}};
  for (const Permutation& x : normalizer_of_p.group().generators()) {
    spec.generators.push_back(linear_part(kP11, 2, x));
  }
  GroupPair pair = affine_semidirect(kP11, 2, spec);
  std::vector<Permutation> n_gens = pair.n.group().generators();
  for (const Permutation& x : p.group().generators()) n_gens.push_back(x);
  pair.n = Subgroup::generated_by(pair.g, std::move(n_gens));
  pair.label = "ex1";
  return pair;
}

GroupPair example2_three_factor() {
  const MatrixGroupSpec h{3, 2, {{{1, 1}, {0, 1}}, {{2, 0}, {0, 1}}}};
  GroupPair pair = affine_semidirect(3, 2, h);
  pair.label = "ex2:P";
  return pair;
}

GroupPair example2_composite() {
  const GroupPair three = example2_three_factor();
  const GroupPair semilinear = agl_semilinear(8);
  const DirectProduct dp = direct_product(three.g, semilinear.g);
  std::vector<Permutation> n_gens;
  for (const Permutation& x : three.n.group().generators()) n_gens.push_back(dp.embed_first(x));
  for (const Permutation& y : semilinear.n.group().generators()) n_gens.push_back(dp.embed_second(y));
  Subgroup n = Subgroup::generated_by(dp.group, std::move(n_gens));
  return {dp.group, std::move(n), "ex2"};
}

}  // namespace gcg
