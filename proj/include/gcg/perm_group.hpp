#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gcg/permutation.hpp"

namespace gcg {

/// Bitset over the canonical element index of an enumerated group.
using ElementSet = boost::dynamic_bitset<>;

struct Limits {
  std::size_t max_degree = 4096;
  std::uint64_t enumeration_cap = 1'000'000;
};

namespace detail {
struct GroupData;
}

/// A finitely generated permutation group with an eagerly computed stabilizer chain.
///
/// The chain comes from deterministic Schreier-Sims; each new base point is the
/// smallest point moved by the sifted residue that required it. When the order is
/// at most `Limits::enumeration_cap` the elements are materialized in lexicographic
/// order of their image arrays; that order is the canonical element index used by
/// every ElementSet over this group (the identity always has index 0).
///
/// Copies share the immutable data.
class PermGroup {
 public:
  /// Trivial group on one point.
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Permutation> generators, Limits limits = {});

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t order() const;
  const Limits& limits() const;

  const std::vector<Point>& base() const;
  std::vector<std::size_t> transversal_sizes() const;
  std::vector<Permutation> strong_generators() const;

  /// Sifts p through the chain. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;

  Permutation identity() const { return Permutation(degree()); }
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  bool is_enumerated() const;
  /// All elements in canonical order. Throws TooLargeToEnumerate.
  const std::vector<Permutation>& elements() const;
  const Permutation& element(std::size_t index) const { return elements()[index]; }
  std::optional<std::size_t> find(const Permutation& p) const;
  /// Throws NotAMember.
  std::size_t index_of(const Permutation& p) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_index(std::size_t a) const;
  /// Index of element(a)^element(g).
  std::size_t conjugate_index(std::size_t a, std::size_t g) const;
  ElementSet empty_set() const;

 private:
  std::shared_ptr<const detail::GroupData> data_;
};

/// Closure of `start` under right multiplication by the elements indexed by `gens`.
/// With start = {identity} (or any subgroup generated by a subset of gens) this is
/// the subgroup generated by gens.
ElementSet close_under(const PermGroup& ambient, ElementSet start, std::span<const std::size_t> gens);

/// Subgroup of an enumerated group generated by the given element indices.
ElementSet generate_subgroup(const PermGroup& ambient, std::span<const std::size_t> gens);

/// Greedy irredundant generating sequence for the subgroup generated by `seeds`.
std::vector<std::size_t> reduce_generators(const PermGroup& ambient, std::span<const std::size_t> seeds);

/// A group together with the group it was taken from.
class Subgroup {
 public:
  /// Throws NotAMember if a generator of `group` is outside `parent`.
  Subgroup(PermGroup parent, PermGroup group);

  static Subgroup whole(const PermGroup& parent);
  static Subgroup trivial(const PermGroup& parent);
  static Subgroup generated_by(const PermGroup& parent, std::vector<Permutation> generators);
  /// `members` must be closed under multiplication; a short generating set is chosen greedily.
  static Subgroup from_members(const PermGroup& parent, const ElementSet& members);

  const PermGroup& parent() const { return parent_; }
  const PermGroup& group() const { return group_; }
  std::uint64_t order() const { return group_.order(); }
  bool contains(const Permutation& p) const { return group_.contains(p); }
  /// Member bitset over the parent's element index. Throws TooLargeToEnumerate.
  const ElementSet& members() const;
  bool is_subgroup_of(const Subgroup& other) const;

 private:
  PermGroup parent_;
  PermGroup group_;
  std::shared_ptr<const ElementSet> members_;
};

}  // namespace gcg
