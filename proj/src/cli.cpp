#include "gcg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "gcg/classgraph.hpp"
#include "gcg/constructions.hpp"
#include "gcg/group_io.hpp"
#include "gcg/report.hpp"
#include "gcg/structure.hpp"
#include "gcg/theorems.hpp"

namespace gcg {

namespace {

namespace fs = std::filesystem;

std::vector<std::uint64_t> parse_numbers(const std::string& spec, const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw ValidationError("bad parameter '" + item + "' in group spec '" + spec + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

ResolvedGroup from_pair(const std::string& label, const GroupPair& pair, std::vector<std::string> names) {
  ResolvedGroup out{label, pair.g, {}, "N"};
  for (const std::string& name : names) out.named.emplace_back(name, pair.n);
  return out;
}

std::string join_sizes(const std::vector<std::uint64_t>& sizes) {
  std::string out = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? ", " : "") + std::to_string(sizes[i]);
  return out + "}";
}

}  // namespace

ResolvedGroup resolve_group_spec(const std::string& spec) {
  if (spec == "ex1") return from_pair(spec, example1_pair(), {"N"});
  if (spec == "ex2") return from_pair(spec, example2_composite(), {"N"});
  if (spec == "agl1:8") return from_pair(spec, agl_semilinear(8), {"N", "A"});
  if (spec == "q8") return {spec, quaternion8(), {}, "G"};
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::string sub;
    if (const auto hash = path.rfind('#'); hash != std::string::npos) {
      sub = path.substr(hash + 1);
      path = path.substr(0, hash);
    }
    LoadedGroup loaded = parse_group_file(read_file(path));
    ResolvedGroup out{spec, loaded.group, std::move(loaded.normal_subgroups), "G"};
    if (!sub.empty()) {
      const bool known = std::any_of(out.named.begin(), out.named.end(), [&](const auto& e) { return e.first == sub; });
      if (!known) throw ValidationError("file " + path + " has no normal subgroup named '" + sub + "'");
      out.default_normal = sub;
    }
    return out;
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ValidationError("unknown group spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const auto params = parse_numbers(spec, spec.substr(colon + 1));
  static const std::map<std::string, std::pair<std::string, std::size_t>> kinds{
      {"sym", {"symmetric", 1}},   {"cyc", {"cyclic", 1}}, {"dih", {"dihedral", 1}},
      {"alt", {"alternating", 1}}, {"ea", {"elementary_abelian", 2}}};
  const auto it = kinds.find(kind);
  if (it == kinds.end()) throw ValidationError("unknown group spec '" + spec + "'");
  if (params.size() != it->second.second) {
    throw ValidationError("group spec '" + spec + "' takes " + std::to_string(it->second.second) + " parameter(s)");
  }
  return {spec, catalog_build(it->second.first, params), {}, "G"};
}

Subgroup find_normal(const ResolvedGroup& group, const std::string& name) {
  for (const auto& [n, sub] : group.named) {
    if (n == name) return sub;
  }
  if (name == "G") return Subgroup::whole(group.g);
  if (name == "Z") return center(group.g);
  if (name == "1") return Subgroup::trivial(group.g);
  if (name.size() > 1 && name[0] == 'n') {
    std::size_t index = 0;
    const auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
    if (ec == std::errc() && end == name.data() + name.size()) {
      const auto normals = normal_subgroups(group.g);
      if (index < normals.size()) return normals[index];
      throw ValidationError(group.label + " has only " + std::to_string(normals.size()) + " normal subgroups");
    }
  }
  throw ValidationError("unknown normal subgroup '" + name + "' for " + group.label);
}

std::string analyze_text(const ResolvedGroup& group, const std::string& normal_name) {
  const Subgroup n = find_normal(group, normal_name);
  const Analysis a = analyze(group.g, n);
  std::ostringstream out;
  out << "group: " << group.label << "\n";
  out << "order of G: " << group.g.order() << "\n";
  out << "normal subgroup: " << normal_name << " (order " << n.order() << ")\n";
  out << "G-classes in N: " << a.classes.size() << "\n";

  std::map<std::uint64_t, std::size_t> multiplicity;
  for (const GClass& cls : a.classes) ++multiplicity[cls.size];
  out << "class sizes:";
  std::vector<std::uint64_t> distinct;
  for (const auto& [size, count] : multiplicity) {
    out << " " << size << "x" << count;
    distinct.push_back(size);
  }
  out << "\nclass size set: " << join_sizes(distinct) << "\n";

  std::size_t edges = 0;
  for (std::size_t i = 0; i < a.graph.size(); ++i) {
    for (std::size_t j = i + 1; j < a.graph.size(); ++j) edges += a.graph.adjacent(i, j) ? 1 : 0;
  }
  out << "graph: " << a.summary.vertex_count << " vertices (classes), " << edges << " edges, "
      << a.summary.component_count << " component(s)\n";
  const SizeGraph sg = size_graph(a.graph);
  out << "size graph: " << sg.sizes.size() << " vertices " << join_sizes(sg.sizes) << ", " << sg.edges.size()
      << " edge(s)\n";
  out << "diameter: " << a.summary.diameter.to_string() << "\n";

  const auto pairs = isolated_pairs(a.graph);
  out << "isolated pairs:";
  if (pairs.empty()) out << " none";
  out << "\n";
  for (const auto& [x, y] : pairs) {
    const GClass& cx = a.graph.vertices[x];
    const GClass& cy = a.graph.vertices[y];
    out << "  " << cx.representative.to_cycle_string() << " (size " << cx.size << ") / "
        << cy.representative.to_cycle_string() << " (size " << cy.size << ")\n";
  }

  const VerificationOutcome theorem = check_theorem_a(a);
  out << "isolated-pair factorization (theoremA): " << to_string(theorem.applicability) << ", " << to_string(theorem.verdict) << "\n";
  for (const PairWitness& w : theorem.witnesses) {
    out << "  pi = " << w.pi.to_string();
    if (w.o_pi_order) out << ", |O_pi(N)| = " << *w.o_pi_order << ", |O_pi'(N)| = " << *w.o_pi_complement_order;
    if (w.structure) out << ", " << to_string(*w.structure);
    if (w.structure_prime) out << " p = " << *w.structure_prime << " |P| = " << *w.p_part_order << " |A| = " << *w.a_part_order;
    if (w.kernel_order) out << " kernel " << *w.kernel_order;
    if (w.complement_order) out << " complement " << *w.complement_order;
    out << "\n";
  }
  if (theorem.counterexample) out << "  failed clause: " << theorem.counterexample->clause << "\n";

  try {
    const StructureReport r = classify_structure(n.group());
    out << "structure of N: " << to_string(r.kind);
    if (r.kind == StructureKind::quasi_frobenius_abelian) {
      out << " (kernel order " << r.kernel->order() << ", complement order " << r.complement->order() << ")";
    } else if (r.kind == StructureKind::p_group_times_central) {
      out << " (p = " << *r.prime << ", |P| = " << r.p_part->order() << ", |A| = " << r.a_part->order() << ")";
    } else if (!r.notes.empty()) {
      out << " (" << r.notes << ")";
    }
    out << "\n";
    if (const auto k = frobenius_kernel(n.group())) {
      out << "frobenius kernel of N: order " << k->order() << (k->group().is_abelian() ? ", abelian" : ", non-abelian")
          << "\n";
    } else {
      out << "frobenius kernel of N: none\n";
    }
  } catch (const TooLargeToEnumerate& e) {
    out << "structure of N: inconclusive (" << e.what() << ")\n";
  }
  return out.str();
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy class size graphs of normal subgroups", "gcg"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "List the group specs understood by --group");

  std::string group_spec;
  std::string normal_name;
  auto* analyze_cmd = app.add_subcommand("analyze", "Class sizes, graph summary, isolated pairs and structure");
  analyze_cmd->add_option("--group", group_spec, "Group spec")->required();
  analyze_cmd->add_option("--normal", normal_name, "Normal subgroup name");

  std::string format = "dot";
  auto* graph_cmd = app.add_subcommand("graph", "Export the class graph");
  graph_cmd->add_option("--group", group_spec, "Group spec")->required();
  graph_cmd->add_option("--normal", normal_name, "Normal subgroup name");
  graph_cmd->add_option("--format", format, "dot or json");

  std::string suites = "all";
  std::string corpus_dir;
  std::string json_path;
  std::uint64_t max_order = 2000;
  bool no_builtin = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites over the corpus");
  verify_cmd->add_option("--suite", suites, "Comma-separated suites, or all");
  verify_cmd->add_option("--corpus", corpus_dir, "Directory of group documents (*.json) to add to the corpus");
  verify_cmd->add_option("--max-order", max_order, "Largest group whose whole normal lattice is checked");
  verify_cmd->add_option("--json", json_path, "Write the json report here ('-' for stdout)");
  verify_cmd->add_flag("--no-builtin", no_builtin, "Skip the built-in groups and example pairs");

  std::string file_path;
  bool check = false;
  auto* import_cmd = app.add_subcommand("import", "Load and validate a group document");
  import_cmd->add_option("--file", file_path, "Group document")->required();
  import_cmd->add_flag("--check", check, "Validate generators and normality");

  std::string output_path;
  auto* export_cmd = app.add_subcommand("export", "Write a group as a group document");
  export_cmd->add_option("--group", group_spec, "Group spec")->required();
  export_cmd->add_option("--output", output_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*catalog) {
      out << "sym:n      symmetric group on n points\n"
             "alt:n      alternating group on n points\n"
             "cyc:n      cyclic group of order n\n"
             "dih:n      dihedral group of order n (even, at least 6)\n"
             "ea:p,k     elementary abelian group of order p^k\n"
             "q8         quaternion group of order 8\n"
             "agl1:8     semilinear affine group of order 168; N = A = translations\n"
             "ex1        Z_11^2 extended by the normalizer of a Sylow 5 in SL(2,5); N = Z_11^2 P\n"
             "ex2        three-factor composite of order 9072; N of order 72\n"
             "file:PATH[#SUB]  group document, optionally selecting a named normal subgroup\n";
      return 0;
    }
    if (*analyze_cmd || *graph_cmd) {
      const ResolvedGroup group = resolve_group_spec(group_spec);
      const std::string name = normal_name.empty() ? group.default_normal : normal_name;
      if (*analyze_cmd) {
        out << analyze_text(group, name);
      } else {
        const GraphFormat f = parse_graph_format(format);
        out << export_graph(build_graph(group.g, find_normal(group, name)), f);
      }
      return 0;
    }
    if (*verify_cmd) {
      const auto selected = parse_suites(suites);
      std::vector<CorpusSource> corpus;
      if (!no_builtin) corpus = builtin_corpus();
      if (!corpus_dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(corpus_dir)) {
          if (entry.path().extension() == ".json") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const fs::path& file : files) {
          auto loaded = std::make_shared<std::optional<LoadedGroup>>();
          corpus.push_back({"file:" + file.stem().string(),
                            [file, loaded] {
                              *loaded = parse_group_file(read_file(file));
                              return (*loaded)->group;
                            },
                            [loaded](const PermGroup&) { return (*loaded)->normal_subgroups; }});
        }
      }
      const CorpusReport report = run_corpus(corpus, selected, max_order, !no_builtin);
      if (json_path == "-") {
        out << report_json(report);
      } else {
        out << report_text(report);
        if (!json_path.empty()) {
          std::ofstream file(json_path, std::ios::binary);
          if (!file) throw std::runtime_error("cannot write " + json_path);
          file << report_json(report);
        }
      }
      return report.has_counterexample() ? 1 : 0;
    }
    if (*import_cmd) {
      const LoadedGroup loaded = parse_group_file(read_file(file_path));
      out << "name: " << loaded.name << "\n";
      out << "degree: " << loaded.group.degree() << "\n";
      out << "order: " << loaded.group.order() << "\n";
      for (const auto& [name, sub] : loaded.normal_subgroups) {
        out << "normal subgroup " << name << ": order " << sub.order() << (check ? ", normal" : "") << "\n";
      }
      return 0;
    }
    if (*export_cmd) {
      const ResolvedGroup group = resolve_group_spec(group_spec);
      const std::string text = serialize_group_document(to_document(group.label, group.g, group.named));
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + output_path);
        file << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gcg
