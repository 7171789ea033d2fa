// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "gcg/cli.hpp"
#include "gcg/constructions.hpp"
#include "gcg/group_ops.hpp"
#include "gcg/report.hpp"
#include "gcg/structure.hpp"
#include "gcg/theorems.hpp"
#include "oracles.hpp"

using namespace gcg;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(seconds < limit_seconds, "took longer than " + std::to_string(limit_seconds) + " s");
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << seconds;
  std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << time.str() << " s)";
  if (!r.detail.empty()) std::cout << " -- " << r.detail;
  std::cout << std::endl;
  if (!r.ok) ++failures;
}

std::vector<std::uint64_t> size_set(const std::vector<GClass>& classes) {
  std::vector<std::uint64_t> out;
  for (const GClass& c : classes) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gcg");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  if (cli_main(static_cast<int>(argv.size()), argv.data(), out, err) != 0) throw std::runtime_error(err.str());
  return out.str();
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

const VerificationOutcome* find_outcome(const CorpusReport& r, const std::string& label, const std::string& statement) {
  for (const PairReport& p : r.pairs) {
    if (p.label != label) continue;
    for (const VerificationOutcome& o : p.outcomes) {
      if (o.statement == statement) return &o;
    }
  }
  return nullptr;
}

}  // namespace

int main() {
  criterion(1, "first example: sizes {1, 20, 242}, one edge, diameter 1, Frobenius N", 10.0, [] {
    Result r;
    const std::string text = cli({"analyze", "--group", "ex1"});
    r.require(contains(text, "order of G: 2420"), "|G| != 2420");
    r.require(contains(text, "normal subgroup: N (order 605)"), "|N| != 605");
    r.require(contains(text, "class size set: {1, 20, 242}"), "class size set");
    r.require(contains(text, "size graph: 2 vertices {20, 242}, 1 edge(s)"), "size graph");
    r.require(contains(text, "diameter: 1"), "diameter");
    r.require(contains(text, "isolated pairs: none"), "isolated pairs");

    const GroupPair p = example1_pair();
    const Analysis a = analyze(p.g, p.n);
    r.require(size_set(a.classes) == std::vector<std::uint64_t>{1, 20, 242}, "library class sizes");
    r.require(a.summary.diameter.is(1), "library diameter");
    r.require(isolated_pairs(a.graph).empty(), "library isolated pairs");
    const auto kernel = frobenius_kernel(p.n.group());
    r.require(kernel && kernel->order() == 121 && kernel->group().is_abelian(), "abelian kernel of order 121");
    const StructureReport s = classify_structure(p.n.group());
    r.require(s.kind == StructureKind::quasi_frobenius_abelian && s.complement &&
                  s.complement->group().is_abelian() && center(p.n.group()).order() == 1,
              "abelian complement");
    r.detail = r.ok ? "class graph has " + std::to_string(a.graph.size()) +
                          " class vertices (sizes 20 and 242), merged by size into 2 vertices and 1 edge"
                    : r.detail;
    return r;
  });

  criterion(2, "semilinear affine group: order 168, translation class sizes {1, 7}", 1.0, [] {
    Result r;
    const std::string text = cli({"analyze", "--group", "agl1:8", "--normal", "A"});
    r.require(contains(text, "order of G: 168"), "order");
    r.require(contains(text, "class size set: {1, 7}"), "class sizes");
    const GroupPair p = agl_semilinear(8);
    r.require(size_set(g_classes_in(p.g, p.n)) == std::vector<std::uint64_t>{1, 7}, "library class sizes");
    return r;
  });

  criterion(3, "diameter-3 composite: sizes {1, 2, 3, 7, 14, 21}, P x A with P the Sylow 3", 30.0, [] {
    Result r;
    const std::string text = cli({"analyze", "--group", "ex2"});
    r.require(contains(text, "class size set: {1, 2, 3, 7, 14, 21}"), "class sizes");
    r.require(contains(text, "diameter: 3"), "diameter");
    const GroupPair p = example2_composite();
    const Analysis a = analyze(p.g, p.n);
    r.require(a.summary.component_count == 1 && a.summary.diameter.is(3), "connected with diameter 3");
    const std::uint64_t sylow3 = sylow(p.n.group(), 3).order();
    for (const VerificationOutcome& o : {check_theorem_a(a), check_corollary_c(a)}) {
      r.require(o.applicability == Applicability::applies && o.verdict == Verdict::verified,
                o.statement + " not verified");
      r.require(!o.witnesses.empty(), o.statement + " has no witnesses");
      for (const PairWitness& w : o.witnesses) {
        r.require(w.structure == StructureKind::p_group_times_central && w.structure_prime == 3u &&
                      w.p_part_order == sylow3 && w.facts.count("a_part_central_in") &&
                      w.facts.at("a_part_central_in") == "Z(N)",
                  o.statement + " branch");
      }
    }
    return r;
  });

  criterion(4, "diameter at most 3 and complete components over the corpus", 300.0, [] {
    Result r;
    const CorpusReport report =
        run_corpus(builtin_corpus(), parse_suites("diameter_bound,complete_components"), 2000);
    r.require(report.errors.empty(), "corpus errors");
    r.require(report.counterexamples == 0, std::to_string(report.counterexamples) + " violations");
    r.require(report.inconclusive == 0, "inconclusive outcomes");
    std::size_t disconnected = 0;
    for (const PairReport& p : report.pairs) disconnected += p.summary.component_count > 1 ? 1 : 0;
    r.detail = std::to_string(report.pairs.size()) + " pairs, " + std::to_string(disconnected) + " disconnected" +
               (r.detail.empty() ? "" : "; " + r.detail);
    return r;
  });

  CorpusReport full;
  criterion(5, "every suite over the corpus: no counterexamples, isolated-pair factorization applied", 600.0, [&] {
    Result r;
    full = run_corpus(builtin_corpus(), all_suites(), 2000);
    r.require(full.errors.empty(), "corpus errors");
    r.require(full.counterexamples == 0, std::to_string(full.counterexamples) + " counterexamples");
    r.require(full.inconclusive == 0, "inconclusive outcomes");
    r.require(full.theorem_a_applications >= 3, "fewer than 3 theoremA applications");
    const auto applied = [&](const std::string& label, const std::string& statement) {
      const VerificationOutcome* o = find_outcome(full, label, statement);
      return o && o->applicability == Applicability::applies && o->verdict == Verdict::verified;
    };
    r.require(applied("sym:3|n002(order 6)", "theorem_a"), "S3");
    r.require(applied("ex2|N", "theorem_a"), "ex2");
    r.require(applied("sym:3|n002(order 6)", "corollary_b"), "disconnected corB instance");
    r.detail = std::to_string(full.theorem_a_applications) + " theoremA applications, " +
               std::to_string(full.verified) + " verified, " + std::to_string(full.vacuous) + " vacuous, " +
               std::to_string(full.skipped) + " skipped" + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
  });

  criterion(6, "stabilizer chain and G-classes agree with brute force", 600.0, [] {
    Result r;
    std::vector<std::pair<std::string, GroupPair>> groups;
    for (const CorpusSource& s : builtin_corpus()) {
      const PermGroup g = s.load();
      groups.push_back({s.label, {g, Subgroup::whole(g), s.label}});
    }
    for (const GroupPair& p : builtin_pairs()) groups.push_back({p.label, p});
    std::size_t checked = 0;
    for (const auto& [label, p] : groups) {
      if (p.g.order() > 5000) continue;
      const auto closure = oracle::closure(p.g.degree(), p.g.generators());
      r.require(closure.size() == p.g.order(), label + " order");
      const std::set<Permutation> n(p.n.group().elements().begin(), p.n.group().elements().end());
      std::vector<std::uint64_t> ours;
      for (const GClass& c : g_classes_in(p.g, p.n)) ours.push_back(c.size);
      std::sort(ours.begin(), ours.end());
      r.require(ours == oracle::orbit_sizes(oracle::conjugation_orbits(closure, n)), label + " classes");
      ++checked;
    }
    r.detail = std::to_string(checked) + " groups" + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
  });

  criterion(7, "class product clauses on every coprime class pair", 600.0, [&] {
    Result r;
    std::size_t pairs = 0;
    std::size_t far = 0;
    for (const PairReport& p : full.pairs) {
      for (const VerificationOutcome& o : p.outcomes) {
        if (o.statement != "lemma3") continue;
        r.require(o.verdict == Verdict::verified, p.label + " " + to_string(o.verdict));
        pairs += o.witnesses.size();
        for (const PairWitness& w : o.witnesses) far += w.facts.count("c.applies");
      }
    }
    const GroupPair ex2 = example2_composite();
    const VerificationOutcome o = check_lemma3(analyze(ex2.g, ex2.n));
    bool witnessed = false;
    for (const PairWitness& w : o.witnesses) {
      if (w.x_size == 2 && w.y_size == 3 && w.facts.count("c.applies") && w.facts.at("b.|BC|") == "3") {
        witnessed = true;
      }
    }
    r.require(witnessed, "ex2 |BC| = |C| = 3 witness");
    r.require(pairs > 0, "no coprime pairs");
    r.detail = std::to_string(pairs) + " coprime pairs, " + std::to_string(far) + " at distance >= 3" +
               (r.detail.empty() ? "" : "; " + r.detail);
    return r;
  });

  criterion(8, "two full corpus runs give byte-identical json", 600.0, [&] {
    Result r;
    const std::string first = report_json(full);
    const std::string second = report_json(run_corpus(builtin_corpus(), all_suites(), 2000));
    r.require(first == second, "reports differ");
    r.detail = std::to_string(first.size()) + " bytes" + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
