#include "gcg/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gcg/errors.hpp"

namespace gcg {

std::string to_string(Applicability a) { return a == Applicability::applies ? "applies" : "vacuous"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::counterexample:
      return "counterexample";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

using VertexPair = std::pair<std::size_t, std::size_t>;
using PairCheck = std::function<std::optional<Counterexample>(const Analysis&, std::size_t, std::size_t,
                                                              PairWitness&)>;

bool central_in(const Permutation& x, const PermGroup& group) {
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [&](const Permutation& s) { return commute(x, s); });
}

bool subgroup_central_in(const Subgroup& s, const PermGroup& group) {
  return std::all_of(s.group().generators().begin(), s.group().generators().end(),
                     [&](const Permutation& x) { return central_in(x, group); });
}

PrimaryPart noncentral_component(const Permutation& x, const Analysis& a) {
  for (PrimaryPart& part : primary_decomposition(x, a.n.group())) {
    if (!central_in(part.element, a.g)) return part;
  }
  throw GroupError("class representative " + x.to_cycle_string() + " has only central components");
}

std::vector<std::size_t> indices_of(const ElementSet& set) {
  std::vector<std::size_t> out;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

void fill_pair_basics(const Analysis& a, std::size_t x, std::size_t y, PairWitness& w) {
  const GClass& cx = a.graph.vertices[x];
  const GClass& cy = a.graph.vertices[y];
  w.x_vertex = x;
  w.y_vertex = y;
  w.x = cx.representative;
  w.y = cy.representative;
  w.x_size = cx.size;
  w.y_size = cy.size;
  w.pi_x = cx.primes;
  w.pi_y = cy.primes;
  w.pi = cx.primes.unite(cy.primes);
}

Counterexample pair_failure(const PairWitness& w, std::string clause, std::string detail) {
  return {std::move(clause), {w.x, w.y}, std::move(detail)};
}

VerificationOutcome run_pairs(std::string statement, const Analysis& a, const std::vector<VertexPair>& pairs,
                              const PairCheck& check) {
  VerificationOutcome outcome;
  outcome.statement = std::move(statement);
  if (pairs.empty()) {
    outcome.note = "no qualifying class pair";
    return outcome;
  }
  outcome.applicability = Applicability::applies;
  for (const auto& [x, y] : pairs) {
    PairWitness witness;
    fill_pair_basics(a, x, y, witness);
    try {
      auto failure = check(a, x, y, witness);
      if (failure && !outcome.counterexample) {
        outcome.counterexample = std::move(failure);
        outcome.verdict = Verdict::counterexample;
      }
    } catch (const TooLargeToEnumerate& e) {
      if (outcome.verdict == Verdict::verified) outcome.verdict = Verdict::inconclusive;
      outcome.note = e.what();
    }
    outcome.witnesses.push_back(std::move(witness));
  }
  return outcome;
}

std::vector<VertexPair> coprime_pairs(const ClassGraph& graph) {
  std::vector<VertexPair> pairs;
  for (std::size_t x = 0; x < graph.size(); ++x) {
    for (std::size_t y = x + 1; y < graph.size(); ++y) {
      if (!graph.vertices[x].primes.intersects(graph.vertices[y].primes)) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

std::vector<VertexPair> pairs_at_distance(const ClassGraph& graph, int d) {
  std::vector<VertexPair> pairs;
  for (std::size_t x = 0; x < graph.size(); ++x) {
    for (std::size_t y = x + 1; y < graph.size(); ++y) {
      if (graph.distance(x, y) == d) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

ElementSet product_set(const PermGroup& group, const ElementSet& lhs, const ElementSet& rhs) {
  ElementSet out = group.empty_set();
  const auto right = indices_of(rhs);
  for (auto i = lhs.find_first(); i != ElementSet::npos; i = lhs.find_next(i)) {
    for (const std::size_t j : right) out.set(group.multiply(i, j));
  }
  return out;
}

// <X X^-1> for a class X given by its member set.
ElementSet difference_subgroup(const PermGroup& group, const ElementSet& x) {
  std::vector<std::size_t> seeds;
  const auto members = indices_of(x);
  for (const std::size_t i : members) {
    for (const std::size_t j : members) seeds.push_back(group.multiply(i, group.inverse_index(j)));
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return generate_subgroup(group, reduce_generators(group, seeds));
}

std::optional<Counterexample> lemma3_pair(const Analysis& a, std::size_t bi, std::size_t ci,
                                          PairWitness& w) {
  const PermGroup& ng = a.n.group();
  const GClass& b = a.graph.vertices[bi];
  const GClass& c = a.graph.vertices[ci];

  // (a) C_G(b) C_G(c) = G
  const std::uint64_t cb = centralizer_order(a.g, {b.representative});
  const std::uint64_t cc = centralizer_order(a.g, {c.representative});
  const std::uint64_t cbc = centralizer_order(a.g, {b.representative, c.representative});
  w.facts["a.product_of_centralizers"] = std::to_string(cb * cc / cbc);
  if (cb * cc != a.g.order() * cbc) {
    return pair_failure(w, "lemma3.a", "|C_G(b)||C_G(c)|/|C_G(b) cap C_G(c)| = " +
                                           std::to_string(cb * cc / cbc) + " != |G|");
  }

  // (b) BC = CB is a non-central G-class with |BC| dividing |B||C|
  const ElementSet bc = product_set(ng, b.members, c.members);
  const ElementSet cb_set = product_set(ng, c.members, b.members);
  const std::uint64_t bc_size = bc.count();
  w.facts["b.|BC|"] = std::to_string(bc_size);
  if (bc != cb_set) return pair_failure(w, "lemma3.b", "BC != CB");
  const auto first = bc.find_first();
  const auto cls = std::find_if(a.classes.begin(), a.classes.end(),
                                [&](const GClass& k) { return k.members.test(first); });
  if (cls == a.classes.end() || cls->members != bc) return pair_failure(w, "lemma3.b", "BC is not a single G-class");
  if (bc_size == 1) return pair_failure(w, "lemma3.b", "BC is a central class");
  if ((b.size * c.size) % bc_size != 0) return pair_failure(w, "lemma3.b", "|BC| does not divide |B||C|");

  // (c) only for pairs at distance >= 3 (or in different components)
  const int d = a.graph.distance(bi, ci);
  if (d != ClassGraph::kUnreachable && d < 3) return std::nullopt;
  const GClass& small = b.size < c.size ? b : c;
  const GClass& large = b.size < c.size ? c : b;
  w.facts["c.applies"] = "true";
  if (bc_size != large.size) {
    return pair_failure(w, "lemma3.c", "|BC| = " + std::to_string(bc_size) + " but the larger class has " +
                                           std::to_string(large.size) + " elements");
  }
  const ElementSet small_diff = difference_subgroup(ng, small.members);
  const ElementSet large_diff = difference_subgroup(ng, large.members);
  w.facts["c.|<BB^-1>|"] = std::to_string(small_diff.count());
  w.facts["c.|<CC^-1>|"] = std::to_string(large_diff.count());
  if (product_set(ng, large.members, small_diff) != large.members) {
    return pair_failure(w, "lemma3.c", "C<BB^-1> != C");
  }
  if (!small_diff.is_subset_of(large_diff)) return pair_failure(w, "lemma3.c", "<BB^-1> is not inside <CC^-1>");
  if (large.size % small_diff.count() != 0) {
    return pair_failure(w, "lemma3.c", "|<BB^-1>| does not divide |C|");
  }
  return std::nullopt;
}

std::optional<Counterexample> step1_pair(const Analysis& a, std::size_t x, std::size_t y, PairWitness& w) {
  const PrimaryPart px = noncentral_component(w.x, a);
  const PrimaryPart py = noncentral_component(w.y, a);
  const bool commuting = commute(px.element, py.element);
  w.facts["p"] = std::to_string(px.prime);
  w.facts["q"] = std::to_string(py.prime);
  w.facts["x_p"] = px.element.to_cycle_string();
  w.facts["y_q"] = py.element.to_cycle_string();
  w.facts["commute"] = commuting ? "true" : "false";
  (void)x;
  (void)y;
  if ((px.prime == py.prime) != commuting) {
    return Counterexample{"step1", {px.element, py.element},
                          "primes " + std::to_string(px.prime) + ", " + std::to_string(py.prime) +
                              (commuting ? " differ but the components commute"
                                         : " agree but the components do not commute")};
  }
  return std::nullopt;
}

std::optional<std::size_t> vertex_of(const Analysis& a, const Permutation& x) {
  const auto index = a.n.group().find(x);
  if (!index) return std::nullopt;
  for (std::size_t v = 0; v < a.graph.size(); ++v) {
    if (a.graph.vertices[v].members.test(*index)) return v;
  }
  return std::nullopt;
}

}  // namespace

Analysis analyze(const PermGroup& g, const Subgroup& n) {
  Analysis a{g, n, g_classes_in(g, n), {}, {}};
  a.graph = graph_from_classes(a.classes);
  a.summary = summarize(a.graph);
  return a;
}

std::optional<Counterexample> theorem_a_pair(const Analysis& a, std::size_t x, std::size_t y, bool g_central,
                                             PairWitness& w) {
  fill_pair_basics(a, x, y, w);
  if (std::gcd(w.x_size, w.y_size) != 1) {
    return pair_failure(w, "hypothesis_coprime", "isolated pair with non-coprime class sizes");
  }
  const PermGroup& ng = a.n.group();
  const Subgroup opi = o_pi(ng, w.pi);
  const Subgroup opc = o_pi_complement(ng, w.pi);
  w.o_pi_order = opi.order();
  w.o_pi_complement_order = opc.order();
  if (!is_direct_factorization(ng, opc, opi)) {
    return pair_failure(w, "direct_factorization",
                        "N is not O_pi'(N) x O_pi(N) for pi = " + w.pi.to_string() + " (|O_pi| = " +
                            std::to_string(opi.order()) + ", |O_pi'| = " + std::to_string(opc.order()) + ")");
  }
  if (!opi.contains(w.x) || !opi.contains(w.y)) {
    return pair_failure(w, "x_y_in_O_pi", "a class representative lies outside O_pi(N)");
  }
  if (g_central && !subgroup_central_in(opc, a.g)) {
    return pair_failure(w, "O_pi_complement_central", "O_pi'(N) is not contained in Z(G)");
  }

  const PrimaryPart px = noncentral_component(w.x, a);
  const PrimaryPart py = noncentral_component(w.y, a);
  const PermGroup& og = opi.group();
  const PermGroup& centre_scope = g_central ? a.g : ng;

  std::vector<std::uint64_t> primes = primes_of(og.order()).primes();
  if (px.prime == py.prime) {
    std::stable_partition(primes.begin(), primes.end(), [&](std::uint64_t p) { return p == px.prime; });
  }
  for (const std::uint64_t p : primes) {
    auto report = p_group_times_central(og, p);
    if (!report || !subgroup_central_in(*report->a_part, centre_scope)) continue;
    w.structure = report->kind;
    w.structure_prime = p;
    w.p_part_order = report->p_part->order();
    w.a_part_order = report->a_part->order();
    w.facts["a_part_central_in"] = g_central ? "Z(G)" : "Z(N)";
    return std::nullopt;
  }
  const StructureReport qf = quasi_frobenius_abelian(og);
  w.structure = qf.kind;
  if (qf.kernel) w.kernel_order = qf.kernel->order();
  if (qf.complement) w.complement_order = qf.complement->order();
  w.facts["structure_notes"] = qf.notes;
  if (qf.kind == StructureKind::quasi_frobenius_abelian) return std::nullopt;
  if (qf.kind == StructureKind::inconclusive) throw TooLargeToEnumerate(og.order(), og.limits().enumeration_cap);
  return pair_failure(w, "structure",
                      "O_pi(N) is neither quasi-Frobenius with abelian kernel and complement nor P x A "
                      "with A central: " + qf.notes);
}

VerificationOutcome check_theorem_a(const Analysis& a) {
  const auto pairs = isolated_pairs(a.graph);
  auto outcome = run_pairs("theorem_a", a, pairs, [](const Analysis& an, std::size_t x, std::size_t y, PairWitness& w) {
    return theorem_a_pair(an, x, y, false, w);
  });
  if (pairs != far_pairs(a.graph) && !outcome.counterexample) {
    outcome.verdict = Verdict::counterexample;
    outcome.counterexample = Counterexample{"isolated_equals_far", {}, "isolated pairs differ from far pairs"};
  }
  return outcome;
}

VerificationOutcome check_corollary_b(const Analysis& a) {
  std::vector<VertexPair> pairs;
  if (a.summary.component_count >= 2) pairs = coprime_pairs(a.graph);
  auto outcome = run_pairs("corollary_b", a, pairs, [](const Analysis& an, std::size_t x, std::size_t y, PairWitness& w) {
    return theorem_a_pair(an, x, y, true, w);
  });
  if (a.summary.component_count < 2) outcome.note = "graph is not disconnected";
  return outcome;
}

VerificationOutcome check_corollary_c(const Analysis& a) {
  std::vector<VertexPair> pairs;
  if (a.summary.diameter.is(3)) pairs = pairs_at_distance(a.graph, 3);
  auto outcome = run_pairs("corollary_c", a, pairs, [](const Analysis& an, std::size_t x, std::size_t y, PairWitness& w) {
    return theorem_a_pair(an, x, y, false, w);
  });
  if (!a.summary.diameter.is(3)) outcome.note = "graph is not connected with diameter 3";
  return outcome;
}

VerificationOutcome check_lemma3(const Analysis& a) {
  return run_pairs("lemma3", a, coprime_pairs(a.graph), lemma3_pair);
}

VerificationOutcome check_step1_property(const Analysis& a) {
  return run_pairs("step1", a, isolated_pairs(a.graph), step1_pair);
}

VerificationOutcome check_diameter_bound(const Analysis& a) {
  VerificationOutcome outcome;
  outcome.statement = "diameter_bound";
  outcome.facts["diameter"] = a.summary.diameter.to_string();
  if (a.summary.vertex_count == 0) {
    outcome.note = "empty graph";
    return outcome;
  }
  outcome.applicability = Applicability::applies;
  if (a.summary.diameter.kind == Diameter::Kind::finite && a.summary.diameter.value > 3) {
    outcome.verdict = Verdict::counterexample;
    for (std::size_t x = 0; x < a.graph.size(); ++x) {
      for (std::size_t y = 0; y < a.graph.size(); ++y) {
        if (!outcome.counterexample && a.graph.distance(x, y) > 3) {
          outcome.counterexample = Counterexample{
              "diameter_bound",
              {a.graph.vertices[x].representative, a.graph.vertices[y].representative},
              "classes at distance " + std::to_string(a.graph.distance(x, y))};
        }
      }
    }
  }
  return outcome;
}

VerificationOutcome check_complete_components(const Analysis& a) {
  VerificationOutcome outcome;
  outcome.statement = "complete_components";
  outcome.facts["components"] = std::to_string(a.summary.component_count);
  if (a.summary.component_count < 2) {
    outcome.note = "graph is not disconnected";
    return outcome;
  }
  outcome.applicability = Applicability::applies;
  for (const auto& component : a.summary.components) {
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (std::size_t j = i + 1; j < component.size(); ++j) {
        if (a.graph.adjacent(component[i], component[j]) || outcome.counterexample) continue;
        outcome.verdict = Verdict::counterexample;
        outcome.counterexample = Counterexample{
            "complete_components",
            {a.graph.vertices[component[i]].representative, a.graph.vertices[component[j]].representative},
            "non-adjacent classes in one component"};
      }
    }
  }
  return outcome;
}

VerificationOutcome check_lemma1(const PermGroup& g, const PrimeSet& pi) {
  VerificationOutcome outcome;
  outcome.statement = "lemma1";
  outcome.facts["pi"] = pi.to_string();
  if (!is_solvable(g)) {
    outcome.skipped = true;
    outcome.note = "skipped: group is not solvable";
    return outcome;
  }
  outcome.applicability = Applicability::applies;
  std::optional<Permutation> offender;
  for (const GClass& cls : conjugacy_classes(g)) {
    if (pi.is_pi_number(cls.representative.order()) && !pi.is_pi_number(cls.size)) {
      offender = cls.representative;
      break;
    }
  }
  const bool class_lengths = !offender;
  const Subgroup opi = o_pi(g, pi);
  const Subgroup opc = o_pi_complement(g, pi);
  const bool factorizes = is_direct_factorization(g, opi, opc);
  outcome.facts["pi_class_lengths_are_pi_numbers"] = class_lengths ? "true" : "false";
  outcome.facts["factorizes"] = factorizes ? "true" : "false";
  outcome.facts["|O_pi|"] = std::to_string(opi.order());
  outcome.facts["|O_pi'|"] = std::to_string(opc.order());
  if (class_lengths != factorizes) {
    outcome.verdict = Verdict::counterexample;
    std::vector<Permutation> payload = offender ? std::vector<Permutation>{*offender} : opi.group().generators();
    outcome.counterexample = Counterexample{
        "lemma1", payload,
        std::string("class-length condition is ") + (class_lengths ? "true" : "false") +
            " but the Hall factorization is " + (factorizes ? "present" : "absent") + " for pi = " + pi.to_string()};
  }
  return outcome;
}

VerificationOutcome check_lemma2(const PermGroup& g, std::uint64_t p) {
  VerificationOutcome outcome;
  outcome.statement = "lemma2";
  outcome.facts["p"] = std::to_string(p);
  for (const GClass& cls : conjugacy_classes(g)) {
    if (cls.representative.order() % p != 0 && cls.size % p == 0) {
      outcome.note = "hypothesis fails at " + cls.representative.to_cycle_string();
      return outcome;
    }
  }
  outcome.applicability = Applicability::applies;
  const Subgroup s = sylow(g, p);
  std::vector<std::size_t> p_prime_elements;
  for (std::size_t i = 0; i < g.elements().size(); ++i) {
    if (g.element(i).order() % p != 0) p_prime_elements.push_back(i);
  }
  const Subgroup m = Subgroup::from_members(g, generate_subgroup(g, reduce_generators(g, p_prime_elements)));
  outcome.facts["|Syl_p|"] = std::to_string(s.order());
  outcome.facts["|<p'-elements>|"] = std::to_string(m.order());
  if (!is_normal(s) || !is_direct_factorization(g, s, m)) {
    outcome.verdict = Verdict::counterexample;
    outcome.counterexample = Counterexample{"lemma2", s.group().generators(),
                                            "Sylow " + std::to_string(p) + "-subgroup is not a direct factor"};
  }
  return outcome;
}

namespace {

VerificationOutcome aggregate(std::string statement, std::vector<VerificationOutcome> parts) {
  VerificationOutcome out;
  out.statement = std::move(statement);
  for (VerificationOutcome& part : parts) {
    std::string key;
    for (const auto& [k, v] : part.facts) {
      if (k == "pi" || k == "p") key = k + "=" + v;
    }
    if (part.skipped) {
      out.skipped = true;
      out.note = part.note;
    }
    if (part.applicability == Applicability::applies) out.applicability = Applicability::applies;
    std::string summary = to_string(part.applicability) + "/" + to_string(part.verdict);
    out.facts[key] = summary;
    if (part.counterexample && !out.counterexample) {
      out.counterexample = part.counterexample;
      out.verdict = Verdict::counterexample;
    }
  }
  if (out.skipped) out.applicability = Applicability::vacuous;
  return out;
}

}  // namespace

VerificationOutcome check_lemma1_all(const PermGroup& g) {
  const auto primes = primes_of(g.order()).primes();
  std::vector<VerificationOutcome> parts;
  if (primes.size() >= 2) {
    if (!is_solvable(g)) {
      VerificationOutcome out;
      out.statement = "lemma1";
      out.skipped = true;
      out.note = "skipped: group is not solvable";
      return out;
    }
    for (std::uint64_t mask = 1; mask + 1 < (1ULL << primes.size()); ++mask) {
      PrimeSet pi;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (mask & (1ULL << i)) pi = pi.unite(PrimeSet{primes[i]});
      }
      parts.push_back(check_lemma1(g, pi));
    }
  }
  auto out = aggregate("lemma1", std::move(parts));
  if (primes.size() < 2) out.note = "fewer than two primes divide |G|";
  return out;
}

VerificationOutcome check_lemma2_all(const PermGroup& g) {
  std::vector<VerificationOutcome> parts;
  const PrimeSet primes = primes_of(g.order());
  for (const std::uint64_t p : primes.primes()) parts.push_back(check_lemma2(g, p));
  auto out = aggregate("lemma2", std::move(parts));
  if (parts.empty() && g.order() == 1) out.note = "trivial group";
  return out;
}

bool reproduces(const VerificationOutcome& outcome, const Analysis& a) {
  if (!outcome.counterexample) return false;
  const Counterexample& ce = outcome.counterexample.value();
  const std::string& s = outcome.statement;
  if (s == "lemma1") return check_lemma1_all(a.n.group()).counterexample.has_value();
  if (s == "lemma2") return check_lemma2_all(a.n.group()).counterexample.has_value();
  if (s == "diameter_bound") return check_diameter_bound(a).counterexample.has_value();
  if (s == "complete_components") return check_complete_components(a).counterexample.has_value();
  if (ce.elements.size() < 2) {
    return s == "theorem_a" && isolated_pairs(a.graph) != far_pairs(a.graph);
  }
  const auto x = vertex_of(a, ce.elements[0]);
  const auto y = vertex_of(a, ce.elements[1]);
  if (!x || !y) return false;
  PairWitness w;
  std::optional<Counterexample> again;
  if (s == "theorem_a" || s == "corollary_c") again = theorem_a_pair(a, *x, *y, false, w);
  if (s == "corollary_b") again = theorem_a_pair(a, *x, *y, true, w);
  if (s == "lemma3") {
    fill_pair_basics(a, *x, *y, w);
    again = lemma3_pair(a, *x, *y, w);
  }
  if (s == "step1") {
    // the payload holds the primary components; their classes are the pair
    fill_pair_basics(a, *x, *y, w);
    again = step1_pair(a, *x, *y, w);
  }
  return again && again->clause == ce.clause;
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::theorem_a:
      return "theoremA";
    case Suite::corollary_b:
      return "corB";
    case Suite::corollary_c:
      return "corC";
    case Suite::lemma1:
      return "lemma1";
    case Suite::lemma2:
      return "lemma2";
    case Suite::lemma3:
      return "lemma3";
    case Suite::step1:
      return "step1";
    case Suite::diameter_bound:
      return "diameter_bound";
    case Suite::complete_components:
      return "complete_components";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::theorem_a, Suite::corollary_b, Suite::corollary_c,      Suite::lemma1,
          Suite::lemma2,    Suite::lemma3,      Suite::step1,            Suite::diameter_bound,
          Suite::complete_components};
}

std::vector<Suite> parse_suites(const std::string& list) {
  std::vector<Suite> out;
  std::stringstream in(list);
  std::string item;
  const auto known = all_suites();
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") return known;
    auto it = std::find_if(known.begin(), known.end(), [&](Suite s) { return to_string(s) == item; });
    if (it == known.end()) throw ValidationError("unknown suite '" + item + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  if (out.empty()) throw ValidationError("no suite selected");
  return out;
}

std::vector<GroupPair> builtin_pairs() {
  std::vector<GroupPair> pairs{example1_pair(), example2_composite(), agl_semilinear(8)};
  pairs[2].label = "agl1:8";
  return pairs;
}

namespace {

CorpusSource from_group(std::string label, std::function<PermGroup()> load) {
  return {std::move(label), std::move(load), nullptr};
}

PermGroup linear_group_on_points(const MatrixGroupSpec& spec) {
  std::size_t points = 1;
  for (std::size_t i = 0; i < spec.dimension; ++i) points *= spec.prime;
  const std::vector<std::uint32_t> zero(spec.dimension, 0);
  std::vector<Permutation> gens;
  for (const Matrix& m : spec.generators) gens.push_back(affine_permutation(spec.prime, m, zero));
  return PermGroup(points, std::move(gens));
}

}  // namespace

std::vector<CorpusSource> builtin_corpus() {
  std::vector<CorpusSource> corpus;
  for (std::uint64_t n : {1, 2, 4, 6, 8, 12}) {
    corpus.push_back(from_group("cyc:" + std::to_string(n), [n] { return cyclic_group(n); }));
  }
  for (std::uint64_t n : {6, 8, 10, 12, 14, 16, 18, 20, 30}) {
    corpus.push_back(from_group("dih:" + std::to_string(n), [n] { return dihedral_group(n); }));
  }
  for (std::uint64_t n : {3, 4, 5}) {
    corpus.push_back(from_group("sym:" + std::to_string(n), [n] { return symmetric_group(n); }));
  }
  for (std::uint64_t n : {4, 5}) {
    corpus.push_back(from_group("alt:" + std::to_string(n), [n] { return alternating_group(n); }));
  }
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    corpus.push_back(from_group("ea:" + std::to_string(p) + "," + std::to_string(k),
                                [p = p, k = k] { return elementary_abelian_group(p, k); }));
  }
  corpus.push_back(from_group("q8", [] { return quaternion8(); }));
  corpus.push_back(from_group("agl1:8", [] { return agl_semilinear(8).g; }));
  corpus.push_back(from_group("ex2:P", [] { return example2_three_factor().g; }));
  corpus.push_back(from_group("agl1:5", [] { return affine_semidirect(5, 1, {5, 1, {{{2}}}}).g; }));
  corpus.push_back(from_group("agl1:7", [] { return affine_semidirect(7, 1, {7, 1, {{{3}}}}).g; }));
  corpus.push_back(from_group("frob21", [] { return affine_semidirect(7, 1, {7, 1, {{{2}}}}).g; }));
  corpus.push_back(from_group("frob72", [] {
    // Q8 acting fixed-point-freely on F_3^2
    return affine_semidirect(3, 2, {3, 2, {{{0, 2}, {1, 0}}, {{1, 1}, {1, 2}}}}).g;
  }));
  corpus.push_back(from_group("agl2:3", [] {
    return affine_semidirect(3, 2, {3, 2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}, {{2, 0}, {0, 1}}}}).g;
  }));
  corpus.push_back(from_group("sl2:3", [] {
    return linear_group_on_points({3, 2, {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}}});
  }));
  corpus.push_back(from_group("sl2:5", [] { return sl25_on_plane(); }));
  auto product = [](std::string label, std::function<PermGroup()> a, std::function<PermGroup()> b) {
    return from_group(std::move(label), [a, b] { return direct_product(a(), b()).group; });
  };
  corpus.push_back(product("sym:3xsym:3", [] { return symmetric_group(3); }, [] { return symmetric_group(3); }));
  corpus.push_back(product("sym:3xcyc:3", [] { return symmetric_group(3); }, [] { return cyclic_group(3); }));
  corpus.push_back(product("q8xcyc:3", [] { return quaternion8(); }, [] { return cyclic_group(3); }));
  corpus.push_back(product("alt:4xcyc:2", [] { return alternating_group(4); }, [] { return cyclic_group(2); }));
  corpus.push_back(product("dih:8xcyc:2", [] { return dihedral_group(8); }, [] { return cyclic_group(2); }));
  corpus.push_back(product("agl1:5xsym:3", [] { return affine_semidirect(5, 1, {5, 1, {{{2}}}}).g; },
                           [] { return symmetric_group(3); }));
  corpus.push_back(product("ex2:Pxagl1:8", [] { return example2_three_factor().g; },
                           [] { return agl_semilinear(8).g; }));
  return corpus;
}

PairReport run_pair(const std::string& label, const PermGroup& g, const Subgroup& n,
                    const std::vector<Suite>& suites) {
  const Analysis a = analyze(g, n);
  PairReport report;
  report.label = label;
  report.g_order = g.order();
  report.n_order = n.order();
  for (const GClass& cls : a.classes) report.class_sizes.push_back(cls.size);
  std::sort(report.class_sizes.begin(), report.class_sizes.end());
  report.summary = a.summary;
  for (const Suite s : suites) {
    switch (s) {
      case Suite::theorem_a:
        report.outcomes.push_back(check_theorem_a(a));
        break;
      case Suite::corollary_b:
        report.outcomes.push_back(check_corollary_b(a));
        break;
      case Suite::corollary_c:
        report.outcomes.push_back(check_corollary_c(a));
        break;
      case Suite::lemma1:
        report.outcomes.push_back(check_lemma1_all(n.group()));
        break;
      case Suite::lemma2:
        report.outcomes.push_back(check_lemma2_all(n.group()));
        break;
      case Suite::lemma3:
        report.outcomes.push_back(check_lemma3(a));
        break;
      case Suite::step1:
        report.outcomes.push_back(check_step1_property(a));
        break;
      case Suite::diameter_bound:
        report.outcomes.push_back(check_diameter_bound(a));
        break;
      case Suite::complete_components:
        report.outcomes.push_back(check_complete_components(a));
        break;
    }
  }
  return report;
}

CorpusReport run_corpus(const std::vector<CorpusSource>& corpus, const std::vector<Suite>& suites,
                        std::uint64_t max_order, bool include_builtin_pairs) {
  CorpusReport report;
  auto attempt = [&](const std::string& label, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report.errors.push_back(label + ": " + e.what());
    }
  };
  if (include_builtin_pairs) {
    attempt("builtin pairs", [&] {
      for (const GroupPair& p : builtin_pairs()) {
        attempt(p.label, [&] { report.pairs.push_back(run_pair(p.label + "|N", p.g, p.n, suites)); });
      }
    });
  }
  for (const CorpusSource& source : corpus) {
    attempt(source.label, [&] {
      const PermGroup g = source.load();
      if (g.order() <= max_order) {
        const auto normals = normal_subgroups(g);
        for (std::size_t i = 0; i < normals.size(); ++i) {
          std::string index = std::to_string(i);
          index.insert(0, index.size() < 3 ? 3 - index.size() : 0, '0');
          const std::string label =
              source.label + "|n" + index + "(order " + std::to_string(normals[i].order()) + ")";
          attempt(label, [&] { report.pairs.push_back(run_pair(label, g, normals[i], suites)); });
        }
      }
      if (source.named) {
        for (const auto& [name, sub] : source.named(g)) {
          const std::string label = source.label + "|" + name;
          attempt(label, [&] { report.pairs.push_back(run_pair(label, g, sub, suites)); });
        }
      }
    });
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const PairReport& a, const PairReport& b) { return a.label < b.label; });
  std::sort(report.errors.begin(), report.errors.end());
  for (const PairReport& pair : report.pairs) {
    for (const VerificationOutcome& o : pair.outcomes) {
      if (o.verdict == Verdict::counterexample) {
        ++report.counterexamples;
      } else if (o.verdict == Verdict::inconclusive) {
        ++report.inconclusive;
      } else if (o.skipped) {
        ++report.skipped;
      } else if (o.applicability == Applicability::vacuous) {
        ++report.vacuous;
      } else {
        ++report.verified;
      }
      if (o.statement == "theorem_a" && o.applicability == Applicability::applies) {
        ++report.theorem_a_applications;
      }
    }
  }
  return report;
}

}  // namespace gcg
