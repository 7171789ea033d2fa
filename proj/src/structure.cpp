#include "gcg/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit values
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  __int128 result = old_s % static_cast<__int128>(m);
  if (result < 0) result += m;
  return static_cast<std::uint64_t>(result);
}

std::vector<std::size_t> set_indices(const ElementSet& set) {
  std::vector<std::size_t> out;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

// a before b when the least element on which they differ belongs to a.
bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const ElementSet diff = a ^ b;
  const auto first = diff.find_first();
  return first != ElementSet::npos && a.test(first);
}

struct LatticeEntry {
  ElementSet members;
  std::vector<std::size_t> gens;
};

template <typename Accept>
Subgroup largest_normal_with(const PermGroup& n, Accept accept) {
  const auto classes = conjugacy_classes(n);
  std::vector<std::size_t> gens;
  ElementSet result = n.empty_set();
  result.set(0);
  for (const GClass& cls : classes) {
    if (cls.least_member == 0 || result.test(cls.least_member)) continue;
    const auto seeds = reduce_generators(n, set_indices(cls.members));
    const ElementSet closure = generate_subgroup(n, seeds);
    if (!accept(closure.count())) continue;
    gens.insert(gens.end(), seeds.begin(), seeds.end());
    result = close_under(n, std::move(result), gens);
  }
  return Subgroup::from_members(n, result);
}

}  // namespace

std::vector<PrimaryPart> primary_decomposition(const Permutation& x, const PermGroup& g) {
  if (!g.contains(x)) throw NotAMember(x.to_cycle_string() + " is not an element of the group");
  const std::uint64_t order = x.order();
  std::vector<PrimaryPart> parts;
  const PrimeSet primes = primes_of(order);
  for (const std::uint64_t p : primes.primes()) {
    const std::uint64_t q = p_part(order, p);
    const std::uint64_t rest = order / q;
    // exponent is 1 mod q and 0 mod rest
    const std::uint64_t exponent =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(rest) * mod_inverse(rest, q)) % order);
    parts.push_back({p, x.pow(static_cast<std::int64_t>(exponent))});
  }
  return parts;
}

Subgroup sylow(const PermGroup& g, std::uint64_t p) {
  const std::uint64_t target = p_part(g.order(), p);
  const auto& elems = g.elements();
  std::vector<std::size_t> gens;
  ElementSet current = g.empty_set();
  current.set(0);
  while (current.count() < target) {
    bool extended = false;
    for (std::size_t i = 0; i < elems.size() && !extended; ++i) {
      if (current.test(i)) continue;
      // i must normalize the current subgroup and have order p modulo it
      const bool normalizes = std::all_of(gens.begin(), gens.end(), [&](std::size_t h) {
        return current.test(g.conjugate_index(h, i));
      });
      if (!normalizes) continue;
      std::size_t power = i;
      for (std::uint64_t k = 1; k < p; ++k) power = g.multiply(power, i);
      if (!current.test(power)) continue;
      gens.push_back(i);
      current = close_under(g, std::move(current), gens);
      extended = true;
    }
    if (!extended) throw GroupError("Sylow construction stalled; chain data is inconsistent");
  }
  std::vector<Permutation> perms;
  for (const std::size_t i : gens) perms.push_back(elems[i]);
  return Subgroup::generated_by(g, std::move(perms));
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
  ElementSet members = g.empty_set();
  const auto& elems = g.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const bool normalizes = std::all_of(
        h.group().generators().begin(), h.group().generators().end(),
        [&](const Permutation& x) { return h.contains(conjugate(x, elems[i])); });
    if (normalizes) members.set(i);
  }
  return Subgroup::from_members(g, members);
}

std::vector<Subgroup> normal_subgroups(const PermGroup& n) {
  const auto classes = conjugacy_classes(n);
  std::vector<LatticeEntry> lattice;
  std::map<ElementSet, std::size_t> seen;
  auto add = [&](LatticeEntry entry) {
    if (seen.count(entry.members)) return;
    seen.emplace(entry.members, lattice.size());
    lattice.push_back(std::move(entry));
  };

  {
    ElementSet trivial = n.empty_set();
    trivial.set(0);
    add({std::move(trivial), {}});
  }
  // normal closure of each class
  for (const GClass& cls : classes) {
    if (cls.least_member == 0) continue;
    auto seeds = reduce_generators(n, set_indices(cls.members));
    ElementSet closure = generate_subgroup(n, seeds);
    add({std::move(closure), std::move(seeds)});
  }
  // join closure: the product of two normal subgroups is normal
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ElementSet& a = lattice[i].members;
      const ElementSet& b = lattice[j].members;
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
      std::vector<std::size_t> gens = lattice[i].gens;
      for (const std::size_t s : lattice[j].gens) {
        if (!a.test(s)) gens.push_back(s);
      }
      ElementSet joined = close_under(n, lattice[i].members, gens);
      if (seen.count(joined)) continue;
      add({std::move(joined), reduce_generators(n, gens)});
    }
  }

  std::sort(lattice.begin(), lattice.end(), [](const LatticeEntry& a, const LatticeEntry& b) {
    const auto ca = a.members.count();
    const auto cb = b.members.count();
    return ca != cb ? ca < cb : canonical_less(a.members, b.members);
  });
  std::vector<Subgroup> out;
  out.reserve(lattice.size());
  for (const LatticeEntry& entry : lattice) {
    std::vector<Permutation> gens;
    for (const std::size_t i : entry.gens) gens.push_back(n.element(i));
    out.push_back(Subgroup::generated_by(n, std::move(gens)));
  }
  return out;
}

Subgroup o_pi(const PermGroup& n, const PrimeSet& pi) {
  return largest_normal_with(n, [&](std::uint64_t order) { return pi.is_pi_number(order); });
}

Subgroup o_pi_complement(const PermGroup& n, const PrimeSet& pi) {
  return largest_normal_with(n, [&](std::uint64_t order) { return pi.is_complement_number(order); });
}

bool is_direct_factorization(const PermGroup& n, const Subgroup& a, const Subgroup& b) {
  const Subgroup sa(n, a.group());
  const Subgroup sb(n, b.group());
  if (!is_normal(sa) || !is_normal(sb)) return false;
  if (a.order() * b.order() != n.order()) return false;
  const Subgroup& smaller = a.order() <= b.order() ? a : b;
  const Subgroup& larger = a.order() <= b.order() ? b : a;
  for (const Permutation& x : smaller.group().elements()) {
    if (!x.is_identity() && larger.contains(x)) return false;
  }
  return true;
}

std::optional<Subgroup> frobenius_kernel(const PermGroup& n) {
  if (n.order() < 2) return std::nullopt;
  const auto classes = conjugacy_classes(n);
  auto candidates = normal_subgroups(n);
  // largest first
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Subgroup& k = *it;
    if (k.order() == 1 || k.order() == n.order()) continue;
    const ElementSet& kmembers = k.members();
    bool ok = true;
    for (const GClass& cls : classes) {
      if (!ok) break;
      if (cls.least_member == 0 || !kmembers.test(cls.least_member)) continue;
      // C_n(rep) must lie inside k; conjugates behave the same because k is normal
      const Permutation& rep = cls.representative;
      for (std::size_t i = 0; i < n.elements().size(); ++i) {
        if (!kmembers.test(i) && commute(n.element(i), rep)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::quasi_frobenius_abelian:
      return "quasi_frobenius_abelian";
    case StructureKind::p_group_times_central:
      return "p_group_times_central";
    case StructureKind::neither:
      return "neither";
    case StructureKind::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::optional<StructureReport> p_group_times_central(const PermGroup& n, std::uint64_t p) {
  Subgroup p_sub = sylow(n, p);
  if (!is_normal(p_sub)) return std::nullopt;
  const Subgroup z = center(n);
  const std::uint64_t complement_part = n.order() / p_part(n.order(), p);
  if (z.order() / p_part(z.order(), p) != complement_part) return std::nullopt;
  ElementSet a_members = n.empty_set();
  const ElementSet& zm = z.members();
  for (auto i = zm.find_first(); i != ElementSet::npos; i = zm.find_next(i)) {
    if (n.element(i).order() % p != 0) a_members.set(i);
  }
  StructureReport report;
  report.kind = StructureKind::p_group_times_central;
  report.prime = p;
  report.p_part = std::move(p_sub);
  report.a_part = Subgroup::from_members(n, a_members);
  report.notes = "Sylow " + std::to_string(p) + "-subgroup is normal; p'-part of Z(N) completes it";
  return report;
}

StructureReport quasi_frobenius_abelian(const PermGroup& n) {
  StructureReport report;
  report.kind = StructureKind::neither;
  const Subgroup z = center(n);
  if (z.order() == n.order()) {
    report.notes = "N is abelian, so N/Z(N) is trivial and not Frobenius";
    return report;
  }

  ElementSet kernel_members;
  bool image_kernel_abelian = false;
  if (z.order() == 1) {
    auto kernel = frobenius_kernel(n);
    if (!kernel) {
      report.notes = "N/Z(N) has no Frobenius kernel";
      return report;
    }
    kernel_members = kernel->members();
    image_kernel_abelian = kernel->group().is_abelian();
  } else {
    const Quotient q = quotient(n, z);
    auto kernel = frobenius_kernel(q.group());
    if (!kernel) {
      report.notes = "N/Z(N) has no Frobenius kernel";
      return report;
    }
    kernel_members = q.preimage(kernel->members());
    image_kernel_abelian = kernel->group().is_abelian();
  }

  Subgroup kernel = Subgroup::from_members(n, kernel_members);
  if (!kernel.group().is_abelian()) {
    report.notes = std::string("N/Z(N) is Frobenius but the kernel preimage is not abelian") +
                   (image_kernel_abelian ? " (the kernel image is abelian)" : "");
    report.kernel = std::move(kernel);
    return report;
  }

  // An abelian complement of a Frobenius kernel is cyclic, so H = <Z(N), c> for a single
  // c; scanning every c outside the kernel is exhaustive.
  const ElementSet& zmembers = z.members();
  const std::vector<std::size_t> zgens = [&] {
    std::vector<std::size_t> out;
    for (const Permutation& s : z.group().generators()) out.push_back(n.index_of(s));
    return out;
  }();
  const std::uint64_t target = n.order() / kernel.order() * z.order();
  for (std::size_t c = 0; c < n.elements().size(); ++c) {
    if (kernel_members.test(c)) continue;
    std::vector<std::size_t> gens = zgens;
    gens.push_back(c);
    const ElementSet h = close_under(n, zmembers, gens);
    if (h.count() != target) continue;
    if ((h & kernel_members) != zmembers) continue;
    report.kind = StructureKind::quasi_frobenius_abelian;
    report.kernel = std::move(kernel);
    report.complement = Subgroup::from_members(n, h);
    report.notes = "N/Z(N) is Frobenius; kernel and complement preimages are abelian";
    return report;
  }
  report.kernel = std::move(kernel);
  report.notes = "N/Z(N) is Frobenius with abelian kernel preimage but no abelian complement preimage";
  return report;
}

StructureReport classify_structure(const PermGroup& n, std::optional<std::uint64_t> preferred_prime) {
  if (n.order() == 1) {
    StructureReport report;
    report.kind = StructureKind::p_group_times_central;
    report.p_part = Subgroup::trivial(n);
    report.a_part = Subgroup::whole(n);
    report.notes = "trivial group";
    return report;
  }
  std::vector<std::uint64_t> primes = primes_of(n.order()).primes();
  if (preferred_prime && n.order() % *preferred_prime == 0) {
    std::stable_partition(primes.begin(), primes.end(),
                          [&](std::uint64_t p) { return p == *preferred_prime; });
  }
  for (const std::uint64_t p : primes) {
    if (auto report = p_group_times_central(n, p)) return *report;
  }
  return quasi_frobenius_abelian(n);
}

}  // namespace gcg
