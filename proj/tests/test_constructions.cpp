#include <doctest.h>

#include <algorithm>
#include <map>

#include "gcg/constructions.hpp"
#include "gcg/errors.hpp"
#include "gcg/group_ops.hpp"
#include "gcg/structure.hpp"
#include "oracles.hpp"

using namespace gcg;

namespace {

std::vector<std::uint64_t> size_set(const PermGroup& g, const Subgroup& n) {
  std::vector<std::uint64_t> out;
  for (const GClass& c : g_classes_in(g, n)) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> size_multiset(const PermGroup& g) {
  std::vector<std::uint64_t> out;
  for (const GClass& c : conjugacy_classes(g)) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("catalog") {
  const std::vector<std::uint64_t> three{3};
  CHECK(catalog_build("symmetric", three).order() == 6);
  const std::vector<std::uint64_t> ea{2, 3};
  const PermGroup e8 = catalog_build("elementary_abelian", ea);
  CHECK(e8.order() == 8);
  for (const Permutation& x : e8.elements()) CHECK(x.pow(2).is_identity());
  CHECK(e8.is_abelian());

  const PermGroup d12 = dihedral_group(12);
  CHECK(d12.order() == 12);
  CHECK(d12.degree() == 6);
  bool has_c6 = false;
  for (const Permutation& x : d12.elements()) has_c6 = has_c6 || x.order() == 6;
  CHECK(has_c6);

  CHECK(alternating_group(5).order() == 60);
  CHECK(cyclic_group(9).order() == 9);
  CHECK(quaternion8().order() == 8);
  CHECK(size_multiset(quaternion8()) == std::vector<std::uint64_t>{1, 1, 2, 2, 2});

  const std::vector<std::uint64_t> none;
  CHECK_THROWS_AS(catalog_build("mathieu", three), ValidationError);
  CHECK_THROWS_AS(catalog_build("symmetric", none), ValidationError);
  CHECK_THROWS_AS(dihedral_group(7), ValidationError);
  CHECK_THROWS_AS(elementary_abelian_group(4, 2), ValidationError);
}

TEST_CASE("affine semidirect products") {
  const GroupPair v = affine_semidirect(5, 2, {5, 2, {}});
  CHECK(v.g.order() == 25);
  CHECK(v.n.order() == 25);

  const GroupPair p54 = example2_three_factor();
  CHECK(p54.g.order() == 54);
  std::vector<std::uint64_t> sizes;
  for (const GClass& c : g_classes_in(p54.g, p54.n)) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{1, 2, 3, 3});

  // the linear part alone: orbit sizes of H on F_3^2 by brute force
  const Matrix a{{1, 1}, {0, 1}};
  const Matrix b{{2, 0}, {0, 1}};
  std::set<Matrix> h{{{1, 0}, {0, 1}}};
  for (bool grew = true; grew;) {
    grew = false;
    for (const Matrix& m : std::set<Matrix>(h)) {
      for (const Matrix* s : {&a, &b}) grew = h.insert(multiply(m, *s, 3)).second || grew;
    }
  }
  CHECK(h.size() == 6);

  CHECK_THROWS_AS(affine_semidirect(3, 2, {3, 2, {{{1, 1}, {1, 1}}}}), ValidationError);
  CHECK_FALSE(is_invertible({{1, 1}, {1, 1}}, 3));
  CHECK(is_invertible({{0, 1}, {10, 0}}, 11));
}

TEST_CASE("property: translation subgroup is normal, regular and of order p^k") {
  const std::vector<std::pair<std::uint32_t, MatrixGroupSpec>> cases{
      {2, {2, 3, {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}}}},
      {3, {3, 2, {{{0, 2}, {1, 0}}}}},
      {5, {5, 1, {{{2}}}}},
      {7, {7, 1, {{{3}}}}},
  };
  for (const auto& [p, spec] : cases) {
    const GroupPair pair = affine_semidirect(p, spec.dimension, spec);
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < spec.dimension; ++i) points *= p;
    CHECK(pair.n.order() == points);
    CHECK(is_normal(pair.n));
    for (Point target = 0; target < points; ++target) {
      std::size_t hits = 0;
      for (const Permutation& t : pair.n.group().elements()) hits += t[0] == target ? 1 : 0;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("affine helpers round trip") {
  for (std::size_t i = 0; i < 27; ++i) CHECK(vector_index(index_vector(i, 3, 3), 3) == i);
  const Matrix m{{1, 2}, {0, 1}};
  const std::vector<std::uint32_t> zero{0, 0};
  CHECK(linear_part(3, 2, affine_permutation(3, m, zero)) == m);
}

TEST_CASE("direct products") {
  const PermGroup s3 = symmetric_group(3);
  const DirectProduct trivial = direct_product(s3, PermGroup());
  CHECK(trivial.group.order() == 6);
  CHECK(size_multiset(trivial.group) == size_multiset(s3));

  const DirectProduct s3s3 = direct_product(s3, s3);
  CHECK(s3s3.group.order() == 36);
  std::map<std::uint64_t, int> sizes;
  for (const GClass& c : conjugacy_classes(s3s3.group)) ++sizes[c.size];
  CHECK(sizes == std::map<std::uint64_t, int>{{1, 1}, {2, 2}, {3, 2}, {4, 1}, {6, 2}, {9, 1}});
}

TEST_CASE("property: class sizes multiply across a direct product") {
  const std::vector<PermGroup> groups{symmetric_group(3), quaternion8(), alternating_group(4), dihedral_group(10)};
  for (const PermGroup& a : groups) {
    for (const PermGroup& b : groups) {
      const DirectProduct d = direct_product(a, b);
      CHECK(d.group.order() == a.order() * b.order());
      for (const GClass& ca : conjugacy_classes(a)) {
        for (const GClass& cb : conjugacy_classes(b)) {
          const Permutation x = d.embed_first(ca.representative) * d.embed_second(cb.representative);
          CHECK(d.group.order() / centralizer(d.group, x).order() == ca.size * cb.size);
        }
      }
    }
  }
}

TEST_CASE("semilinear affine group on F_8") {
  const GroupPair p = agl_semilinear(8);
  CHECK(p.g.order() == 168);
  CHECK(p.n.order() == 8);
  CHECK(is_normal(p.n));
  CHECK(p.n.group().is_abelian());
  for (const Permutation& x : p.n.group().elements()) CHECK(x.pow(2).is_identity());
  CHECK(size_set(p.g, p.n) == std::vector<std::uint64_t>{1, 7});

  std::size_t stabilizer = 0;
  std::set<Point> orbit;
  for (const Permutation& x : p.g.elements()) {
    if (x[0] == 0) {
      ++stabilizer;
      orbit.insert(x[1]);
    }
  }
  CHECK(stabilizer == 21);
  CHECK(orbit.size() == 7);
  CHECK_THROWS_AS(agl_semilinear(9), ValidationError);
}

TEST_CASE("SL(2,5) inside SL(2,11) acts freely") {
  const MatrixGroupSpec frozen = sl25_fixture();
  const MatrixGroupSpec found = find_sl25_in_sl211();
  CHECK(found.generators == frozen.generators);

  const PermGroup h = sl25_on_plane();
  CHECK(h.order() == 120);
  for (const Permutation& x : h.elements()) {
    CHECK(x[0] == 0);
    if (x.is_identity()) continue;
    for (Point v = 1; v < 121; ++v) CHECK(x[v] != v);
  }
}

TEST_CASE("first example pair") {
  const GroupPair p = example1_pair();
  CHECK(p.g.order() == 2420);
  CHECK(p.n.order() == 605);
  CHECK(p.g.degree() == 121);
  CHECK(is_normal(p.n));
  CHECK(size_set(p.g, p.n) == std::vector<std::uint64_t>{1, 20, 242});
  const StructureReport r = classify_structure(p.n.group());
  CHECK(r.kind == StructureKind::quasi_frobenius_abelian);
  CHECK(r.kernel->group().is_abelian());
  CHECK(r.complement->group().is_abelian());
}

TEST_CASE("second example composite") {
  const GroupPair p = example2_composite();
  CHECK(p.g.order() == 54 * 168);
  CHECK(p.n.order() == 72);
  CHECK(is_normal(p.n));
  CHECK(p.n.group().is_abelian());
  CHECK(center(p.n.group()).order() == 72);
  CHECK(size_set(p.g, p.n) == std::vector<std::uint64_t>{1, 2, 3, 7, 14, 21});
}
