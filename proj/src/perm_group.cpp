#include "gcg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

constexpr std::int32_t kNotInOrbit = -1;

struct Level {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;  // point -> index into orbit, or kNotInOrbit
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;
  std::vector<std::vector<bool>> checked;  // [orbit index][generator index]
};

class ChainBuilder {
 public:
  explicit ChainBuilder(std::size_t degree) : degree_(degree) {}

  void add_generator(const Permutation& g) {
    auto [residue, level] = sift(g, 0);
    if (!residue.is_identity()) absorb(residue, 0, level);
  }

  std::vector<Level> take() { return std::move(levels_); }

 private:
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& level = levels_[l];
      const Point image = g[level.base];
      const std::int32_t pos = level.position[image];
      if (pos == kNotInOrbit) return {std::move(g), l};
      g = g * level.transversal_inverse[static_cast<std::size_t>(pos)];
    }
    return {std::move(g), levels_.size()};
  }

  void add_level(Point base) {
    Level level;
    level.base = base;
    level.orbit.push_back(base);
    level.position.assign(degree_, kNotInOrbit);
    level.position[base] = 0;
    level.transversal.emplace_back(degree_);
    level.transversal_inverse.emplace_back(degree_);
    levels_.push_back(std::move(level));
  }

  // Extends the orbit of a level with whatever its current generators reach; existing
  // transversal entries never change.
  void extend_orbit(std::size_t l) {
    Level& level = levels_[l];
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
      for (const Permutation& s : level.generators) {
        const Point next = s[level.orbit[i]];
        if (level.position[next] != kNotInOrbit) continue;
        level.position[next] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(next);
        Permutation u = level.transversal[i] * s;
        level.transversal_inverse.push_back(u.inverse());
        level.transversal.push_back(std::move(u));
      }
    }
  }

  // `residue` fixes the base points of levels [0, to) and must join the strong
  // generators of levels [from, to].
  void absorb(const Permutation& residue, std::size_t from, std::size_t to) {
    if (to == levels_.size()) add_level(residue.smallest_moved_point());
    for (std::size_t l = from; l <= to; ++l) {
      levels_[l].generators.push_back(residue);
      extend_orbit(l);
    }
    for (std::size_t l = to + 1; l-- > from;) close(l);
  }

  // Makes every Schreier generator of level l sift to the identity through the
  // deeper levels.
  void close(std::size_t l) {
    for (std::size_t oi = 0; oi < levels_[l].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < levels_[l].generators.size(); ++si) {
        auto& checked = levels_[l].checked;
        if (checked.size() <= oi) checked.resize(oi + 1);
        if (checked[oi].size() <= si) checked[oi].resize(si + 1, false);
        if (checked[oi][si]) continue;

        const Level& level = levels_[l];
        const Permutation& s = level.generators[si];
        const Point image = s[level.orbit[oi]];
        const auto target = static_cast<std::size_t>(level.position[image]);
        const Permutation schreier =
            level.transversal[oi] * s * level.transversal_inverse[target];
        while (true) {
          auto [residue, depth] = sift(schreier, l + 1);
          if (residue.is_identity()) break;
          absorb(residue, l + 1, depth);
        }
        levels_[l].checked[oi][si] = true;
      }
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("group order exceeds 64 bits");
  }
  return a * b;
}

}  // namespace

namespace detail {

struct GroupData {
  std::size_t degree = 1;
  Limits limits;
  std::vector<Permutation> generators;
  std::vector<Level> chain;
  std::vector<Point> base;
  std::uint64_t order = 1;
  bool enumerated = false;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
};

}  // namespace detail

namespace {

void enumerate_chain(const std::vector<Level>& chain, std::size_t level, const Permutation& suffix,
                     std::vector<Permutation>& out) {
  if (level == chain.size()) {
    out.push_back(suffix);
    return;
  }
  // Every element factors uniquely as t_{k-1} * ... * t_1 * t_0 with t_i from level i.
  for (const Permutation& t : chain[level].transversal) {
    enumerate_chain(chain, level + 1, t * suffix, out);
  }
}

std::shared_ptr<const detail::GroupData> build(std::size_t degree, std::vector<Permutation> gens,
                                               Limits limits) {
  if (degree == 0) throw ValidationError("group degree must be positive");
  if (degree > limits.max_degree) {
    throw ValidationError("degree " + std::to_string(degree) + " exceeds the degree cap " +
                          std::to_string(limits.max_degree));
  }
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->limits = limits;
  ChainBuilder builder(degree);
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
    builder.add_generator(g);
  }
  data->generators = std::move(gens);
  data->chain = builder.take();
  for (const Level& level : data->chain) {
    data->base.push_back(level.base);
    data->order = checked_product(data->order, level.orbit.size());
  }
  if (data->order <= limits.enumeration_cap) {
    data->enumerated = true;
    data->elements.reserve(data->order);
    enumerate_chain(data->chain, 0, Permutation(degree), data->elements);
    std::sort(data->elements.begin(), data->elements.end());
    data->index.reserve(data->elements.size());
    for (std::size_t i = 0; i < data->elements.size(); ++i) data->index.emplace(data->elements[i], i);
  }
  return data;
}

}  // namespace

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, Limits limits)
    : data_(build(degree, std::move(generators), limits)) {}

std::size_t PermGroup::degree() const { return data_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }
std::uint64_t PermGroup::order() const { return data_->order; }
const Limits& PermGroup::limits() const { return data_->limits; }

const std::vector<Point>& PermGroup::base() const { return data_->base; }

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> sizes;
  for (const Level& level : data_->chain) sizes.push_back(level.orbit.size());
  return sizes;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  if (!data_->chain.empty()) out = data_->chain.front().generators;
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) throw DegreeMismatch(degree(), p.degree());
  Permutation g = p;
  for (const Level& level : data_->chain) {
    const std::int32_t pos = level.position[g[level.base]];
    if (pos == kNotInOrbit) return false;
    g = g * level.transversal_inverse[static_cast<std::size_t>(pos)];
  }
  return g.is_identity();
}

bool PermGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool PermGroup::is_enumerated() const { return data_->enumerated; }

const std::vector<Permutation>& PermGroup::elements() const {
  if (!data_->enumerated) throw TooLargeToEnumerate(order(), limits().enumeration_cap);
  return data_->elements;
}

std::optional<std::size_t> PermGroup::find(const Permutation& p) const {
  if (!data_->enumerated) throw TooLargeToEnumerate(order(), limits().enumeration_cap);
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto found = find(p);
  if (!found) throw NotAMember(p.to_cycle_string() + " is not an element of the group");
  return *found;
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(data_->elements[a] * data_->elements[b]);
}

std::size_t PermGroup::inverse_index(std::size_t a) const {
  return index_of(data_->elements[a].inverse());
}

std::size_t PermGroup::conjugate_index(std::size_t a, std::size_t g) const {
  return index_of(conjugate(data_->elements[a], data_->elements[g]));
}

ElementSet PermGroup::empty_set() const { return ElementSet(elements().size()); }

ElementSet close_under(const PermGroup& ambient, ElementSet start, std::span<const std::size_t> gens) {
  std::deque<std::size_t> queue;
  for (auto i = start.find_first(); i != ElementSet::npos; i = start.find_next(i)) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t current = queue.front();
    queue.pop_front();
    for (const std::size_t g : gens) {
      const std::size_t next = ambient.multiply(current, g);
      if (start.test(next)) continue;
      start.set(next);
      queue.push_back(next);
    }
  }
  return start;
}

ElementSet generate_subgroup(const PermGroup& ambient, std::span<const std::size_t> gens) {
  ElementSet start = ambient.empty_set();
  start.set(0);
  return close_under(ambient, std::move(start), gens);
}

std::vector<std::size_t> reduce_generators(const PermGroup& ambient,
                                           std::span<const std::size_t> seeds) {
  std::vector<std::size_t> kept;
  ElementSet current = ambient.empty_set();
  current.set(0);
  for (const std::size_t s : seeds) {
    if (current.test(s)) continue;
    kept.push_back(s);
    current = close_under(ambient, std::move(current), kept);
  }
  return kept;
}

Subgroup::Subgroup(PermGroup parent, PermGroup group)
    : parent_(std::move(parent)), group_(std::move(group)) {
  if (group_.degree() != parent_.degree()) throw DegreeMismatch(parent_.degree(), group_.degree());
  for (const Permutation& g : group_.generators()) {
    if (!parent_.contains(g)) {
      throw NotAMember("subgroup generator " + g.to_cycle_string() + " is not in the parent group");
    }
  }
  if (parent_.is_enumerated()) {
    ElementSet members = parent_.empty_set();
    for (const Permutation& h : group_.elements()) members.set(parent_.index_of(h));
    members_ = std::make_shared<const ElementSet>(std::move(members));
  }
}

Subgroup Subgroup::whole(const PermGroup& parent) { return Subgroup(parent, parent); }

Subgroup Subgroup::trivial(const PermGroup& parent) {
  return Subgroup(parent, PermGroup(parent.degree(), {}, parent.limits()));
}

Subgroup Subgroup::generated_by(const PermGroup& parent, std::vector<Permutation> generators) {
  return Subgroup(parent, PermGroup(parent.degree(), std::move(generators), parent.limits()));
}

Subgroup Subgroup::from_members(const PermGroup& parent, const ElementSet& members) {
  std::vector<std::size_t> seeds;
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
    seeds.push_back(i);
  }
  std::vector<Permutation> gens;
  for (const std::size_t i : reduce_generators(parent, seeds)) gens.push_back(parent.element(i));
  return generated_by(parent, std::move(gens));
}

const ElementSet& Subgroup::members() const {
  if (!members_) throw TooLargeToEnumerate(parent_.order(), parent_.limits().enumeration_cap);
  return *members_;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(group_.generators().begin(), group_.generators().end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

}  // namespace gcg
