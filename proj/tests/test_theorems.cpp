#include <doctest.h>

#include <algorithm>

#include "gcg/constructions.hpp"
#include "gcg/errors.hpp"
#include "gcg/group_ops.hpp"
#include "gcg/structure.hpp"
#include "gcg/theorems.hpp"
#include "oracles.hpp"

using namespace gcg;

namespace {

Analysis whole(const PermGroup& g) { return analyze(g, Subgroup::whole(g)); }

Analysis of(const GroupPair& p) { return analyze(p.g, p.n); }

std::set<Permutation> product_set(const GClass& b, const GClass& c, const PermGroup& n) {
  std::set<Permutation> out;
  for (auto i = b.members.find_first(); i != ElementSet::npos; i = b.members.find_next(i)) {
    for (auto j = c.members.find_first(); j != ElementSet::npos; j = c.members.find_next(j)) {
      out.insert(n.element(i) * n.element(j));
    }
  }
  return out;
}

bool verified_applies(const VerificationOutcome& o) {
  return o.applicability == Applicability::applies && o.verdict == Verdict::verified;
}

bool vacuous(const VerificationOutcome& o) {
  return o.applicability == Applicability::vacuous && o.verdict == Verdict::verified;
}

}  // namespace

TEST_CASE("isolated-pair factorization on the examples") {
  CHECK(vacuous(check_theorem_a(of(example1_pair()))));

  const VerificationOutcome ex2 = check_theorem_a(of(example2_composite()));
  REQUIRE(verified_applies(ex2));
  REQUIRE_FALSE(ex2.witnesses.empty());
  for (const PairWitness& w : ex2.witnesses) {
    CHECK(w.pi == PrimeSet{2, 3});
    CHECK(*w.o_pi_order == 72);
    CHECK(*w.o_pi_complement_order == 1);
    CHECK(*w.structure == StructureKind::p_group_times_central);
    CHECK(*w.structure_prime == 3);
    CHECK(*w.p_part_order == 9);
    CHECK(*w.a_part_order == 8);
  }

  const VerificationOutcome s3 = check_theorem_a(whole(symmetric_group(3)));
  REQUIRE(verified_applies(s3));
  REQUIRE(s3.witnesses.size() == 1);
  const PairWitness& w = s3.witnesses[0];
  CHECK(w.pi == PrimeSet{2, 3});
  CHECK(*w.o_pi_order == 6);
  CHECK(*w.o_pi_complement_order == 1);
  CHECK(*w.structure == StructureKind::quasi_frobenius_abelian);
  CHECK(*w.kernel_order == 3);
  CHECK(*w.complement_order == 2);
}

TEST_CASE("disconnected graphs put the complement in the center") {
  const VerificationOutcome s3 = check_corollary_b(whole(symmetric_group(3)));
  CHECK(verified_applies(s3));
  CHECK(*s3.witnesses.at(0).o_pi_complement_order == 1);
  CHECK(vacuous(check_corollary_b(of(example2_composite()))));
  CHECK(vacuous(check_corollary_b(whole(quaternion8()))));
}

TEST_CASE("distance-3 pairs") {
  const VerificationOutcome ex2 = check_corollary_c(of(example2_composite()));
  CHECK(verified_applies(ex2));
  for (const PairWitness& w : ex2.witnesses) CHECK(*w.structure_prime == 3);
  CHECK(vacuous(check_corollary_c(of(example1_pair()))));
  CHECK(vacuous(check_corollary_c(whole(symmetric_group(3)))));
}

TEST_CASE("class products on S3") {
  const Analysis a = whole(symmetric_group(3));
  const VerificationOutcome o = check_lemma3(a);
  CHECK(verified_applies(o));
  const auto bc = product_set(a.graph.vertices[0], a.graph.vertices[1], a.n.group());
  CHECK(bc.size() <= 6);
  CHECK(6 % bc.size() == 0);
  // BC is the class of transpositions
  CHECK(bc.size() == 3);
  CHECK(o.witnesses.at(0).facts.at("b.|BC|") == "3");
}

TEST_CASE("class products on the diameter-3 composite") {
  const Analysis a = of(example2_composite());
  const VerificationOutcome o = check_lemma3(a);
  CHECK(verified_applies(o));
  bool witnessed = false;
  for (const PairWitness& w : o.witnesses) {
    if (w.x_size != 2 || w.y_size != 3) continue;
    const auto bc = product_set(a.graph.vertices[w.x_vertex], a.graph.vertices[w.y_vertex], a.n.group());
    CHECK(bc.size() == 3);
    CHECK(w.facts.at("c.applies") == "true");
    witnessed = true;
  }
  CHECK(witnessed);
  CHECK(vacuous(check_lemma3(whole(quaternion8()))));
}

TEST_CASE("pi-class lengths versus Hall factorization") {
  const PermGroup e = elementary_abelian_group(2, 2);
  CHECK(check_lemma1(e, PrimeSet{2}).verdict == Verdict::verified);
  CHECK(check_lemma1(cyclic_group(6), PrimeSet{2}).verdict == Verdict::verified);
  CHECK(check_lemma1(cyclic_group(6), PrimeSet{2}).facts.at("factorizes") == "true");

  const VerificationOutcome s3 = check_lemma1(symmetric_group(3), PrimeSet{3});
  CHECK(verified_applies(s3));
  CHECK(s3.facts.at("pi_class_lengths_are_pi_numbers") == "false");
  CHECK(s3.facts.at("factorizes") == "false");

  const VerificationOutcome a5 = check_lemma1(alternating_group(5), PrimeSet{2});
  CHECK(a5.skipped);
  CHECK(a5.applicability == Applicability::vacuous);
  CHECK(check_lemma1_all(alternating_group(5)).skipped);
}

TEST_CASE("Sylow direct factor from coprime class lengths") {
  const VerificationOutcome q8 = check_lemma2(quaternion8(), 2);
  CHECK(verified_applies(q8));
  CHECK(q8.facts.at("|Syl_p|") == "8");
  CHECK(verified_applies(check_lemma2(cyclic_group(6), 2)));
  CHECK(vacuous(check_lemma2(symmetric_group(3), 2)));
}

TEST_CASE("primary components commute iff their primes agree") {
  const VerificationOutcome ex2 = check_step1_property(of(example2_composite()));
  CHECK(verified_applies(ex2));
  for (const PairWitness& w : ex2.witnesses) {
    CHECK(w.facts.at("p") == "3");
    CHECK(w.facts.at("q") == "3");
    CHECK(w.facts.at("commute") == "true");
  }
  const VerificationOutcome s3 = check_step1_property(whole(symmetric_group(3)));
  CHECK(verified_applies(s3));
  CHECK(s3.witnesses.at(0).facts.at("p") != s3.witnesses.at(0).facts.at("q"));
  CHECK(s3.witnesses.at(0).facts.at("commute") == "false");
  CHECK(vacuous(check_step1_property(of(example1_pair()))));
}

TEST_CASE("harness flags a corrupted graph and the payload reproduces") {
  Analysis a = of(example2_composite());
  // pretend two classes sit at distance 4
  a.graph.distances[0][1] = a.graph.distances[1][0] = 4;
  a.summary.diameter = Diameter{Diameter::Kind::finite, 4};
  const VerificationOutcome d = check_diameter_bound(a);
  CHECK(d.verdict == Verdict::counterexample);
  REQUIRE(d.counterexample);
  CHECK(d.counterexample->elements.size() == 2);
  CHECK(reproduces(d, a));
  CHECK_FALSE(reproduces(check_diameter_bound(of(example2_composite())), a));

  Analysis s = whole(direct_product(symmetric_group(3), cyclic_group(3)).group);
  const std::size_t v = s.graph.size();
  // split the graph artificially and remove an edge inside a component
  s.summary.component_count = 2;
  s.summary.components = {{0}, {}};
  for (std::size_t i = 1; i < v; ++i) s.summary.components[1].push_back(i);
  bool removed = false;
  for (std::size_t i = 1; i < v && !removed; ++i) {
    for (std::size_t j = i + 1; j < v && !removed; ++j) {
      if (s.graph.adjacency[i][j]) {
        s.graph.adjacency[i][j] = s.graph.adjacency[j][i] = false;
        removed = true;
      }
    }
  }
  REQUIRE(removed);
  const VerificationOutcome c = check_complete_components(s);
  CHECK(c.verdict == Verdict::counterexample);
  CHECK(reproduces(c, s));
}

TEST_CASE("suite names") {
  CHECK(parse_suites("all").size() == 9);
  CHECK(parse_suites("theoremA,corB") == std::vector<Suite>{Suite::theorem_a, Suite::corollary_b});
  CHECK(parse_suites("lemma3,lemma3") == std::vector<Suite>{Suite::lemma3});
  CHECK_THROWS_AS(parse_suites("theoremZ"), ValidationError);
  CHECK_THROWS_AS(parse_suites(""), ValidationError);
  for (const Suite s : all_suites()) CHECK(parse_suites(to_string(s)) == std::vector<Suite>{s});
}

TEST_CASE("corpus of S3 alone") {
  const std::vector<CorpusSource> corpus{{"sym:3", [] { return symmetric_group(3); }, nullptr}};
  const CorpusReport r = run_corpus(corpus, all_suites(), 2000, false);
  CHECK(r.pairs.size() == 3);
  CHECK(r.counterexamples == 0);
  CHECK(r.errors.empty());
  CHECK(r.theorem_a_applications == 1);
}

TEST_CASE("corpus entries that fail to load are reported and skipped") {
  const std::vector<CorpusSource> corpus{
      {"broken", []() -> PermGroup { throw ValidationError("unreadable"); }, nullptr},
      {"cyc:3", [] { return cyclic_group(3); }, nullptr}};
  const CorpusReport r = run_corpus(corpus, parse_suites("diameter_bound"), 2000, false);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0] == "broken: unreadable");
  CHECK(r.pairs.size() == 2);
}

TEST_CASE("max order limits the lattice walk but not named subgroups") {
  const std::vector<CorpusSource> corpus{{"sym:4",
                                          [] { return symmetric_group(4); },
                                          [](const PermGroup& g) {
                                            return std::vector<std::pair<std::string, Subgroup>>{
                                                {"D", derived_subgroup(g)}};
                                          }}};
  const CorpusReport r = run_corpus(corpus, parse_suites("theoremA"), 10, false);
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].label == "sym:4|D");
  CHECK(r.pairs[0].n_order == 12);
}

TEST_CASE("property: built-in corpus is consistent") {
  const CorpusReport r = run_corpus(builtin_corpus(), all_suites(), 2000);
  CHECK(r.errors.empty());
  CHECK(r.counterexamples == 0);
  CHECK(r.inconclusive == 0);
  CHECK(r.theorem_a_applications >= 3);
  CHECK(std::is_sorted(r.pairs.begin(), r.pairs.end(),
                       [](const PairReport& a, const PairReport& b) { return a.label < b.label; }));
  for (const PairReport& p : r.pairs) {
    for (const VerificationOutcome& o : p.outcomes) {
      if (o.applicability == Applicability::vacuous) CHECK(o.witnesses.empty());
      if (o.verdict == Verdict::counterexample) CHECK(o.counterexample.has_value());
    }
  }
}
