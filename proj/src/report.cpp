#include "gcg/report.hpp"

#include <sstream>

namespace gcg {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json primes_json(const PrimeSet& s) { return json(s.primes()); }

}  // namespace

json to_json(const PairWitness& w) {
  json out;
  out["x_vertex"] = w.x_vertex;
  out["y_vertex"] = w.y_vertex;
  out["x"] = w.x.to_cycle_string();
  out["y"] = w.y.to_cycle_string();
  out["x_class_size"] = w.x_size;
  out["y_class_size"] = w.y_size;
  out["pi_x"] = primes_json(w.pi_x);
  out["pi_y"] = primes_json(w.pi_y);
  out["pi"] = primes_json(w.pi);
  out["o_pi_order"] = optional_json(w.o_pi_order);
  out["o_pi_complement_order"] = optional_json(w.o_pi_complement_order);
  out["structure"] = w.structure ? json(to_string(*w.structure)) : json(nullptr);
  out["structure_prime"] = optional_json(w.structure_prime);
  out["p_part_order"] = optional_json(w.p_part_order);
  out["a_part_order"] = optional_json(w.a_part_order);
  out["kernel_order"] = optional_json(w.kernel_order);
  out["complement_order"] = optional_json(w.complement_order);
  out["facts"] = w.facts;
  return out;
}

json to_json(const VerificationOutcome& o) {
  json out;
  out["statement"] = o.statement;
  out["applicability"] = to_string(o.applicability);
  out["verdict"] = to_string(o.verdict);
  out["skipped"] = o.skipped;
  out["witnesses"] = json::array();
  for (const PairWitness& w : o.witnesses) out["witnesses"].push_back(to_json(w));
  out["facts"] = o.facts;
  if (o.counterexample) {
    json ce;
    ce["clause"] = o.counterexample->clause;
    ce["detail"] = o.counterexample->detail;
    ce["elements"] = json::array();
    for (const Permutation& p : o.counterexample->elements) ce["elements"].push_back(p.to_cycle_string());
    out["counterexample"] = std::move(ce);
  } else {
    out["counterexample"] = nullptr;
  }
  out["note"] = o.note;
  return out;
}

json to_json(const GraphSummary& s) {
  json out;
  out["vertex_count"] = s.vertex_count;
  out["component_count"] = s.component_count;
  out["components"] = s.components;
  out["diameter"] = s.diameter.to_string();
  return out;
}

json to_json(const PairReport& r) {
  json out;
  out["label"] = r.label;
  out["g_order"] = r.g_order;
  out["n_order"] = r.n_order;
  out["class_sizes"] = r.class_sizes;
  out["graph"] = to_json(r.summary);
  out["outcomes"] = json::array();
  for (const VerificationOutcome& o : r.outcomes) out["outcomes"].push_back(to_json(o));
  return out;
}

json to_json(const CorpusReport& r) {
  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["totals"] = {{"pairs", r.pairs.size()},
                   {"verified", r.verified},
                   {"counterexamples", r.counterexamples},
                   {"inconclusive", r.inconclusive},
                   {"vacuous", r.vacuous},
                   {"skipped", r.skipped},
                   {"theorem_a_applications", r.theorem_a_applications},
                   {"errors", r.errors.size()}};
  out["errors"] = r.errors;
  out["pairs"] = json::array();
  for (const PairReport& p : r.pairs) out["pairs"].push_back(to_json(p));
  return out;
}

std::string report_json(const CorpusReport& r) { return to_json(r).dump(2) + "\n"; }

std::string report_text(const CorpusReport& r) {
  std::ostringstream out;
  for (const PairReport& p : r.pairs) {
    for (const VerificationOutcome& o : p.outcomes) {
      if (o.applicability == Applicability::vacuous && o.verdict == Verdict::verified) continue;
      out << p.label << "  " << o.statement << "  " << to_string(o.verdict);
      if (o.counterexample) out << "  [" << o.counterexample->clause << "] " << o.counterexample->detail;
      if (o.verdict == Verdict::inconclusive) out << "  (" << o.note << ")";
      out << "\n";
    }
  }
  for (const std::string& e : r.errors) out << "error: " << e << "\n";
  out << "pairs: " << r.pairs.size() << ", verified: " << r.verified << ", counterexamples: " << r.counterexamples
      << ", inconclusive: " << r.inconclusive << ", vacuous: " << r.vacuous << ", skipped: " << r.skipped
      << ", theoremA applications: " << r.theorem_a_applications << ", errors: " << r.errors.size() << "\n";
  return out.str();
}

}  // namespace gcg
