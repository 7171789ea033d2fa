#include "gcg/group_ops.hpp"

#include <algorithm>
#include <deque>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

void require_inside(const PermGroup& g, const Subgroup& n) {
  if (n.group().degree() != g.degree()) throw DegreeMismatch(g.degree(), n.group().degree());
  for (const Permutation& x : n.group().generators()) {
    if (!g.contains(x)) throw NotAMember(x.to_cycle_string() + " is not an element of G");
  }
}

PermGroup unenumerated(std::size_t degree, std::vector<Permutation> gens, Limits limits) {
  limits.enumeration_cap = 0;
  return PermGroup(degree, std::move(gens), limits);
}

}  // namespace

bool is_normal(const Subgroup& n) {
  for (const Permutation& g : n.parent().generators()) {
    for (const Permutation& x : n.group().generators()) {
      if (!n.contains(conjugate(x, g))) return false;
    }
  }
  return true;
}

void require_normal(const Subgroup& n, const std::string& name) {
  for (const Permutation& g : n.parent().generators()) {
    for (const Permutation& x : n.group().generators()) {
      if (!n.contains(conjugate(x, g))) {
        throw NotNormal(name, g.to_cycle_string(), x.to_cycle_string());
      }
    }
  }
}

std::vector<GClass> g_classes_in(const PermGroup& g, const Subgroup& n) {
  require_inside(g, n);
  require_normal(Subgroup(g, n.group()));
  const PermGroup& ngroup = n.group();
  const auto& elems = ngroup.elements();
  std::vector<bool> assigned(elems.size(), false);
  std::vector<GClass> classes;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (assigned[start]) continue;
    GClass cls;
    cls.representative = elems[start];
    cls.least_member = start;
    cls.members = ElementSet(elems.size());
    std::deque<std::size_t> queue{start};
    assigned[start] = true;
    cls.members.set(start);
    while (!queue.empty()) {
      const std::size_t current = queue.front();
      queue.pop_front();
      for (const Permutation& h : g.generators()) {
        const std::size_t next = ngroup.index_of(conjugate(elems[current], h));
        if (assigned[next]) continue;
        assigned[next] = true;
        cls.members.set(next);
        queue.push_back(next);
      }
    }
    cls.size = cls.members.count();
    cls.primes = primes_of(cls.size);
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const GClass& a, const GClass& b) {
    return a.size != b.size ? a.size < b.size : a.least_member < b.least_member;
  });
  return classes;
}

std::vector<GClass> conjugacy_classes(const PermGroup& g) {
  return g_classes_in(g, Subgroup::whole(g));
}

Subgroup centralizer(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw NotAMember(x.to_cycle_string() + " is not an element of G");
  ElementSet members = g.empty_set();
  const auto& elems = g.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (commute(elems[i], x)) members.set(i);
  }
  return Subgroup::from_members(g, members);
}

std::uint64_t centralizer_order(const PermGroup& g, const std::vector<Permutation>& xs) {
  std::uint64_t count = 0;
  for (const Permutation& e : g.elements()) {
    if (std::all_of(xs.begin(), xs.end(), [&](const Permutation& x) { return commute(e, x); })) {
      ++count;
    }
  }
  return count;
}

Subgroup center(const PermGroup& g) {
  ElementSet members = g.empty_set();
  const auto& elems = g.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](const Permutation& s) { return commute(elems[i], s); });
    if (central) members.set(i);
  }
  return Subgroup::from_members(g, members);
}

Subgroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s) {
  std::vector<Permutation> gens;
  for (const Permutation& x : s) {
    if (!g.contains(x)) throw NotAMember(x.to_cycle_string() + " is not an element of G");
    if (!x.is_identity()) gens.push_back(x);
  }
  PermGroup current = unenumerated(g.degree(), gens, g.limits());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Permutation& h : g.generators()) {
      Permutation c = conjugate(gens[i], h);
      if (current.contains(c)) continue;
      gens.push_back(std::move(c));
      current = unenumerated(g.degree(), gens, g.limits());
    }
  }
  return Subgroup::generated_by(g, std::move(gens));
}

Subgroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> commutators;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure(g, commutators);
}

bool is_solvable(const PermGroup& g) {
  PermGroup current = g;
  while (!current.is_trivial()) {
    Subgroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = next.group();
  }
  return true;
}

std::size_t Quotient::coset_of(const Permutation& x) const { return coset_of_[source_.index_of(x)]; }

Permutation Quotient::project(const Permutation& x) const {
  const std::size_t xi = source_.index_of(x);
  std::vector<Point> images(coset_reps_.size());
  for (std::size_t c = 0; c < coset_reps_.size(); ++c) {
    images[c] = static_cast<Point>(coset_of_[source_.multiply(coset_reps_[c], xi)]);
  }
  return Permutation::from_images(std::move(images));
}

ElementSet Quotient::preimage(const ElementSet& quotient_members) const {
  // An element of G/K is determined by where it sends the coset K (label 0).
  std::vector<bool> wanted(coset_reps_.size(), false);
  for (auto i = quotient_members.find_first(); i != ElementSet::npos;
       i = quotient_members.find_next(i)) {
    wanted[group_.element(i)[0]] = true;
  }
  ElementSet out = source_.empty_set();
  for (std::size_t i = 0; i < coset_of_.size(); ++i) {
    if (wanted[coset_of_[i]]) out.set(i);
  }
  return out;
}

Quotient quotient(const PermGroup& g, const Subgroup& k) {
  require_inside(g, k);
  require_normal(Subgroup(g, k.group()), "K");
  const auto& elems = g.elements();
  std::vector<std::size_t> kernel;
  for (const Permutation& x : k.group().elements()) kernel.push_back(g.index_of(x));

  Quotient q;
  q.source_ = g;
  q.coset_of_.assign(elems.size(), elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (q.coset_of_[i] != elems.size()) continue;
    const std::size_t label = q.coset_reps_.size();
    q.coset_reps_.push_back(i);
    for (const std::size_t kk : kernel) q.coset_of_[g.multiply(kk, i)] = label;
  }
  std::vector<Permutation> gens;
  for (const Permutation& s : g.generators()) gens.push_back(q.project(s));
  q.group_ = PermGroup(q.coset_reps_.size(), std::move(gens), g.limits());
  return q;
}

}  // namespace gcg
