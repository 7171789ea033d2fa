#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcg/classgraph.hpp"
#include "gcg/constructions.hpp"
#include "gcg/structure.hpp"

namespace gcg {

enum class Applicability { applies, vacuous };
enum class Verdict { verified, counterexample, inconclusive };

std::string to_string(Applicability a);
std::string to_string(Verdict v);

/// Evidence gathered for one class pair (x^G, y^G).
struct PairWitness {
  std::size_t x_vertex = 0;
  std::size_t y_vertex = 0;
  Permutation x;
  Permutation y;
  std::uint64_t x_size = 0;
  std::uint64_t y_size = 0;
  PrimeSet pi_x;
  PrimeSet pi_y;
  PrimeSet pi;
  std::optional<std::uint64_t> o_pi_order;
  std::optional<std::uint64_t> o_pi_complement_order;
  std::optional<StructureKind> structure;
  std::optional<std::uint64_t> structure_prime;
  std::optional<std::uint64_t> p_part_order;
  std::optional<std::uint64_t> a_part_order;
  std::optional<std::uint64_t> kernel_order;
  std::optional<std::uint64_t> complement_order;
  std::map<std::string, std::string> facts;
};

struct Counterexample {
  std::string clause;
  std::vector<Permutation> elements;  // the class representatives the clause failed on
  std::string detail;
};

struct VerificationOutcome {
  std::string statement;
  Applicability applicability = Applicability::vacuous;
  Verdict verdict = Verdict::verified;
  bool skipped = false;  // precondition of the statement could not be established
  std::vector<PairWitness> witnesses;
  std::map<std::string, std::string> facts;
  std::optional<Counterexample> counterexample;
  std::string note;
};

/// Everything the checkers share for one (G, N).
struct Analysis {
  PermGroup g;
  Subgroup n;
  std::vector<GClass> classes;
  ClassGraph graph;
  GraphSummary summary;
};

/// Throws NotNormal / TooLargeToEnumerate like g_classes_in.
Analysis analyze(const PermGroup& g, const Subgroup& n);

VerificationOutcome check_theorem_a(const Analysis& a);
VerificationOutcome check_corollary_b(const Analysis& a);
VerificationOutcome check_corollary_c(const Analysis& a);
VerificationOutcome check_lemma3(const Analysis& a);
VerificationOutcome check_step1_property(const Analysis& a);
VerificationOutcome check_diameter_bound(const Analysis& a);
VerificationOutcome check_complete_components(const Analysis& a);

/// Class lengths of π-elements are π-numbers iff G = O_π(G) x O_π'(G). Vacuous (and
/// marked skipped) unless G is solvable.
VerificationOutcome check_lemma1(const PermGroup& g, const PrimeSet& pi);
/// If every p'-element has class length prime to p, Syl_p(G) is a direct factor.
VerificationOutcome check_lemma2(const PermGroup& g, std::uint64_t p);

/// The class-length test over every nonempty proper subset of π(G), and the Sylow
/// direct-factor test over every prime of |G|.
VerificationOutcome check_lemma1_all(const PermGroup& g);
VerificationOutcome check_lemma2_all(const PermGroup& g);

/// Re-runs the failed clause on the counterexample payload; true iff it fails again.
bool reproduces(const VerificationOutcome& outcome, const Analysis& a);

/// Factorization and structure clauses for one pair of vertices. `g_central` switches the
/// centrality requirements to Z(G), as needed for disconnected graphs; returns the failing
/// clause, if any.
std::optional<Counterexample> theorem_a_pair(const Analysis& a, std::size_t x, std::size_t y,
                                             bool g_central, PairWitness& witness);

enum class Suite {
  theorem_a,
  corollary_b,
  corollary_c,
  lemma1,
  lemma2,
  lemma3,
  step1,
  diameter_bound,
  complete_components,
};

std::string to_string(Suite s);
/// Comma-separated suite names; "all" selects every suite. Throws ValidationError.
std::vector<Suite> parse_suites(const std::string& list);
std::vector<Suite> all_suites();

/// A corpus group; `load` may throw, which is reported per entry.
struct CorpusSource {
  std::string label;
  std::function<PermGroup()> load;
  /// Extra named normal subgroups (always analyzed, regardless of max_order).
  std::function<std::vector<std::pair<std::string, Subgroup>>(const PermGroup&)> named;
};

struct PairReport {
  std::string label;
  std::uint64_t g_order = 0;
  std::uint64_t n_order = 0;
  std::vector<std::uint64_t> class_sizes;  // one entry per class, ascending
  GraphSummary summary;
  std::vector<VerificationOutcome> outcomes;
};

struct CorpusReport {
  std::vector<PairReport> pairs;
  std::vector<std::string> errors;
  std::size_t verified = 0;
  std::size_t counterexamples = 0;
  std::size_t inconclusive = 0;
  std::size_t vacuous = 0;
  std::size_t skipped = 0;
  std::size_t theorem_a_applications = 0;

  bool has_counterexample() const { return counterexamples > 0; }
};

/// The fixed example pairs: ex1, ex2 and agl1:8 with its translation subgroup.
std::vector<GroupPair> builtin_pairs();
/// Catalog and small constructed groups used as the default corpus.
std::vector<CorpusSource> builtin_corpus();

PairReport run_pair(const std::string& label, const PermGroup& g, const Subgroup& n,
                    const std::vector<Suite>& suites);

/// Every fixed pair, plus every normal subgroup of each corpus group of order at most
/// max_order, plus each source's named subgroups. Results are sorted by label.
CorpusReport run_corpus(const std::vector<CorpusSource>& corpus, const std::vector<Suite>& suites,
                        std::uint64_t max_order, bool include_builtin_pairs = true);

}  // namespace gcg
