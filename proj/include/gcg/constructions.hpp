#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcg/perm_group.hpp"

namespace gcg {

/// Square matrix over F_p, row-major, entries in 0..p-1.
using Matrix = std::vector<std::vector<std::uint32_t>>;

struct MatrixGroupSpec {
  std::uint32_t prime = 2;
  std::size_t dimension = 1;
  std::vector<Matrix> generators;
};

/// A finite group with a distinguished normal subgroup.
struct GroupPair {
  PermGroup g;
  Subgroup n;
  std::string label;
};

/// name in {cyclic, dihedral, symmetric, alternating, elementary_abelian, quaternion8}.
/// dihedral takes the group order (an even number >= 6); elementary_abelian takes (p, k).
PermGroup catalog_build(std::string_view name, std::span<const std::uint64_t> params);

PermGroup cyclic_group(std::uint64_t n);
PermGroup dihedral_group(std::uint64_t order);
PermGroup symmetric_group(std::uint64_t n);
PermGroup alternating_group(std::uint64_t n);
PermGroup elementary_abelian_group(std::uint64_t p, std::uint64_t k);
PermGroup quaternion8();

/// Point index of a vector of F_p^k: sum of v[i] p^i.
std::size_t vector_index(std::span<const std::uint32_t> v, std::uint32_t p);
std::vector<std::uint32_t> index_vector(std::size_t index, std::uint32_t p, std::size_t k);

/// The affine map x -> Mx + b on the p^k points of F_p^k.
Permutation affine_permutation(std::uint32_t p, const Matrix& m, std::span<const std::uint32_t> b);
/// Recovers M from a permutation induced by a linear map (fixing the zero vector).
Matrix linear_part(std::uint32_t p, std::size_t k, const Permutation& x);

bool is_invertible(const Matrix& m, std::uint32_t p);
Matrix multiply(const Matrix& a, const Matrix& b, std::uint32_t p);

/// G = V x| H acting on the points of V = F_p^k; N is the translation subgroup V.
/// Throws ValidationError for a singular generator.
GroupPair affine_semidirect(std::uint32_t p, std::size_t k, const MatrixGroupSpec& h);

struct DirectProduct {
  PermGroup group;
  std::size_t first_degree = 1;
  std::size_t second_degree = 1;

  Permutation embed_first(const Permutation& a) const;
  Permutation embed_second(const Permutation& b) const;
};

/// G1 x G2 on the disjoint union of the point sets (G1 first).
DirectProduct direct_product(const PermGroup& a, const PermGroup& b);

/// AGammaL(1, q): x -> a x^(2^i) + b on F_q; N is the translation subgroup. Only q = 8.
GroupPair agl_semilinear(std::uint64_t q);

/// Frozen generators of SL(2,5) inside SL(2,11), as found by find_sl25_in_sl211().
MatrixGroupSpec sl25_fixture();

/// Deterministic search over pairs of SL(2,11) matrices (orders 4 and 3, lexicographic)
/// for an order-120 subgroup in which no non-identity element fixes a nonzero vector.
MatrixGroupSpec find_sl25_in_sl211();

/// The fixture acting linearly on the 121 points of F_11^2.
PermGroup sl25_on_plane();

/// G = K x| N_H(P) and N = K x| P with K = F_11^2, H = SL(2,5), P a Sylow 5-subgroup.
GroupPair example1_pair();

/// (F_3^2 x| H_6) x AGammaL(1,8) with N = F_3^2 x F_8 translations.
GroupPair example2_composite();

/// The order-54 factor F_3^2 x| <[[1,1],[0,1]], [[2,0],[0,1]]>.
GroupPair example2_three_factor();

}  // namespace gcg
