#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcg/perm_group.hpp"
#include "gcg/primes.hpp"

namespace gcg {

/// One G-conjugacy class of elements of a normal subgroup N.
struct GClass {
  Permutation representative;  // least member in N's element order
  std::uint64_t size = 1;
  PrimeSet primes;             // prime divisors of size
  ElementSet members;          // over N's element index
  std::size_t least_member = 0;
};

bool is_normal(const Subgroup& n);

/// Throws NotNormal naming a generator g of the parent and a generator x of `n`
/// with x^g outside `n`.
void require_normal(const Subgroup& n, const std::string& name = "N");

/// Orbits of G acting by conjugation on N, sorted by (size, least member index).
std::vector<GClass> g_classes_in(const PermGroup& g, const Subgroup& n);

/// Ordinary conjugacy classes of a group.
std::vector<GClass> conjugacy_classes(const PermGroup& g);

/// C_G(x) by element filtering. Throws NotAMember if x is not in G.
Subgroup centralizer(const PermGroup& g, const Permutation& x);

/// Number of elements of G commuting with every element of `xs`.
std::uint64_t centralizer_order(const PermGroup& g, const std::vector<Permutation>& xs);

Subgroup center(const PermGroup& g);

/// Smallest subgroup of G containing `s` and closed under conjugation by G.
Subgroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);

/// Derived subgroup [G, G].
Subgroup derived_subgroup(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// G/K realized by the action on right cosets of K.
class Quotient {
 public:
  const PermGroup& group() const { return group_; }
  std::size_t coset_count() const { return coset_reps_.size(); }
  /// Coset label of an element of G (the coset K itself is label 0).
  std::size_t coset_of(const Permutation& x) const;
  /// Image of x in G/K.
  Permutation project(const Permutation& x) const;
  /// Members of G mapping into the given set of elements of G/K.
  ElementSet preimage(const ElementSet& quotient_members) const;

 private:
  friend Quotient quotient(const PermGroup& g, const Subgroup& k);
  Quotient() = default;

  PermGroup source_;
  PermGroup group_;
  std::vector<std::size_t> coset_of_;     // G element index -> coset label
  std::vector<std::size_t> coset_reps_;   // coset label -> least G element index
};

/// Throws NotNormal if k is not normal in g.
Quotient quotient(const PermGroup& g, const Subgroup& k);

}  // namespace gcg
