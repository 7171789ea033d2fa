#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcg/group_ops.hpp"
#include "gcg/perm_group.hpp"
#include "gcg/primes.hpp"

namespace gcg {

struct PrimaryPart {
  std::uint64_t prime;
  Permutation element;  // a power of x of order prime^k
};

/// Writes x as a product of commuting prime-power-order powers of x, one per prime
/// dividing its order, ascending by prime. Throws NotAMember if x is not in g.
std::vector<PrimaryPart> primary_decomposition(const Permutation& x, const PermGroup& g);

/// A Sylow p-subgroup, grown one factor of p at a time inside successive normalizers.
/// Trivial when p does not divide |g|.
Subgroup sylow(const PermGroup& g, std::uint64_t p);

/// N_G(H) by element filtering.
Subgroup normalizer(const PermGroup& g, const Subgroup& h);

/// All normal subgroups of n, sorted by order then by least distinguishing element.
std::vector<Subgroup> normal_subgroups(const PermGroup& n);

/// Largest normal π-subgroup.
Subgroup o_pi(const PermGroup& n, const PrimeSet& pi);
/// Largest normal π'-subgroup (order coprime to every prime in pi).
Subgroup o_pi_complement(const PermGroup& n, const PrimeSet& pi);

/// Both normal in n, trivial intersection, |a||b| = |n|.
bool is_direct_factorization(const PermGroup& n, const Subgroup& a, const Subgroup& b);

/// The Frobenius kernel of n if n is a Frobenius group: a proper nontrivial normal
/// subgroup K with C_n(k) <= K for every non-identity k in K.
std::optional<Subgroup> frobenius_kernel(const PermGroup& n);

enum class StructureKind { quasi_frobenius_abelian, p_group_times_central, neither, inconclusive };

std::string to_string(StructureKind kind);

struct StructureReport {
  StructureKind kind = StructureKind::neither;
  std::optional<Subgroup> kernel;      // preimage in n of the Frobenius kernel of n/Z(n)
  std::optional<Subgroup> complement;  // abelian H with Z(n) <= H, H cap kernel = Z(n), H kernel = n
  std::optional<std::uint64_t> prime;
  std::optional<Subgroup> p_part;
  std::optional<Subgroup> a_part;
  std::string notes;
};

/// n = P x A with P = Syl_p(n) normal and A the p'-part of Z(n), if that holds for p.
std::optional<StructureReport> p_group_times_central(const PermGroup& n, std::uint64_t p);

/// n/Z(n) Frobenius with abelian kernel preimage and an abelian complement preimage.
/// Returns quasi_frobenius_abelian or neither (with the failing step in notes).
StructureReport quasi_frobenius_abelian(const PermGroup& n);

/// Tests the p-group-times-central branch first (the preferred prime, when it divides
/// |n|, before the others in ascending order), then the quasi-Frobenius branch.
StructureReport classify_structure(const PermGroup& n,
                                   std::optional<std::uint64_t> preferred_prime = std::nullopt);

}  // namespace gcg
