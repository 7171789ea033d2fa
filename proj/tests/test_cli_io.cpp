#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcg/cli.hpp"
#include "gcg/constructions.hpp"
#include "gcg/errors.hpp"
#include "gcg/group_io.hpp"
#include "gcg/group_ops.hpp"
#include "gcg/theorems.hpp"

using namespace gcg;

namespace {

const char* kS3 = R"({
  "name": "S3",
  "degree": 3,
  "generators": [[1, 0, 2], [1, 2, 0]],
  "normal_subgroups": {"A3": [[1, 2, 0]]}
})";

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gcg");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::uint64_t> class_sizes(const PermGroup& g) {
  std::vector<std::uint64_t> out;
  for (const GClass& c : conjugacy_classes(g)) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "gcg_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("minimal document is the trivial group") {
  const LoadedGroup g = parse_group_file(R"({"name": "one", "degree": 1, "generators": []})");
  CHECK(g.name == "one");
  CHECK(g.group.order() == 1);
  CHECK(g.normal_subgroups.empty());
}

TEST_CASE("S3 document with a normal subgroup") {
  const LoadedGroup g = parse_group_file(kS3);
  CHECK(g.group.order() == 6);
  REQUIRE(g.normal_subgroups.size() == 1);
  CHECK(g.normal_subgroups[0].first == "A3");
  CHECK(g.normal_subgroups[0].second.order() == 3);
  CHECK(is_normal(g.normal_subgroups[0].second));
}

TEST_CASE("non-normal subgroups are rejected with the violating conjugation") {
  const std::string text = R"({"name": "S3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]],
                               "normal_subgroups": {"T": [[1, 0, 2]]}})";
  CHECK_THROWS_AS(parse_group_file(text), NotNormal);
  try {
    parse_group_file(text);
  } catch (const NotNormal& e) {
    const std::string what = e.what();
    CHECK(what.find("subgroup T") != std::string::npos);
    CHECK(e.element == "(0,1)");
  }
}

TEST_CASE("malformed json reports a location") {
  try {
    parse_group_document("{\n  \"name\": \"x\",\n  \"degree\": 3,,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("bad image arrays name the generator") {
  try {
    parse_group_document(R"({"name": "x", "degree": 3, "generators": [[1, 0, 2], [0, 0, 2]]})");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("generator 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group_document(R"({"name": "x", "degree": 3, "generators": [[1, 0]]})"), ValidationError);
  CHECK_THROWS_AS(parse_group_document(R"({"name": "x", "degree": 2, "generators": [[1, 2]]})"), ValidationError);
  CHECK_THROWS_AS(parse_group_document(R"({"degree": 2, "generators": []})"), ValidationError);
  CHECK_THROWS_AS(parse_group_document(R"([1, 2])"), ValidationError);
  CHECK_THROWS_AS(parse_group_file(R"({"name": "x", "degree": 3, "generators": [[1, 2, 0]],
                                       "normal_subgroups": {"T": [[1, 0, 2]]}})"),
                  NotAMember);
}

TEST_CASE("one-based documents are normalized") {
  const GroupDocument doc =
      parse_group_document(R"({"name": "S3", "degree": 3, "one_based": true, "generators": [[2, 1, 3], [2, 3, 1]]})");
  CHECK(doc.generators[0] == ImageArray{1, 0, 2});
  CHECK_FALSE(doc.one_based);
  CHECK(load_group_document(doc).group.order() == 6);
  CHECK_THROWS_AS(
      parse_group_document(R"({"name": "x", "degree": 2, "one_based": true, "generators": [[0, 1]]})"),
      ValidationError);
}

TEST_CASE("property: built-in groups survive export and import") {
  std::vector<std::pair<std::string, PermGroup>> groups;
  for (const CorpusSource& source : builtin_corpus()) groups.emplace_back(source.label, source.load());
  for (const GroupPair& p : builtin_pairs()) groups.emplace_back(p.label, p.g);
  for (const auto& [label, g] : groups) {
    CAPTURE(label);
    const std::string text = serialize_group_document(to_document(label, g));
    const LoadedGroup back = parse_group_file(text);
    CHECK(back.name == label);
    CHECK(back.group.order() == g.order());
    if (g.order() <= 20000) CHECK(class_sizes(back.group) == class_sizes(g));
    CHECK(serialize_group_document(to_document(label, back.group)) == text);
  }
  const GroupPair ex1 = example1_pair();
  const LoadedGroup back = parse_group_file(serialize_group_document(to_document("ex1", ex1.g, {{"N", ex1.n}})));
  CHECK(back.normal_subgroups.at(0).second.order() == 605);
}

TEST_CASE("analyze reproduces the examples") {
  const Run ex1 = run({"analyze", "--group", "ex1"});
  CHECK(ex1.status == 0);
  CHECK(ex1.out.find("order of G: 2420") != std::string::npos);
  CHECK(ex1.out.find("(order 605)") != std::string::npos);
  CHECK(ex1.out.find("class size set: {1, 20, 242}") != std::string::npos);
  CHECK(ex1.out.find("diameter: 1") != std::string::npos);
  CHECK(ex1.out.find("isolated pairs: none") != std::string::npos);
  CHECK(ex1.out.find("size graph: 2 vertices {20, 242}, 1 edge(s)") != std::string::npos);

  const Run agl = run({"analyze", "--group", "agl1:8", "--normal", "A"});
  CHECK(agl.out.find("order of G: 168") != std::string::npos);
  CHECK(agl.out.find("class size set: {1, 7}") != std::string::npos);

  const Run ex2 = run({"analyze", "--group", "ex2"});
  CHECK(ex2.out.find("class size set: {1, 2, 3, 7, 14, 21}") != std::string::npos);
  CHECK(ex2.out.find("diameter: 3") != std::string::npos);
  CHECK(ex2.out.find("isolated-pair factorization (theoremA): applies, verified") != std::string::npos);

  const Run s3 = run({"analyze", "--group", "sym:3"});
  CHECK(s3.out.find("normal subgroup: G (order 6)") != std::string::npos);
  CHECK(run({"analyze", "--group", "dih:12", "--normal", "Z"}).out.find("(order 2)") != std::string::npos);
  CHECK(run({"analyze", "--group", "sym:4", "--normal", "n1"}).out.find("(order 4)") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  const Run unknown = run({"analyze", "--group", "mystery:3"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("unknown group spec 'mystery:3'") != std::string::npos);
  CHECK(run({"analyze", "--group", "sym:x"}).status == 2);
  CHECK(run({"analyze", "--group", "ea:2"}).status == 2);
  CHECK(run({"analyze", "--group", "sym:3", "--normal", "W"}).status == 2);
  CHECK(run({"analyze"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"graph", "--group", "sym:3", "--format", "png"}).status == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).status == 2);
  CHECK(run({"import", "--file", "/nonexistent/group.json"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("graph, catalog, import and file specs") {
  const Run dot = run({"graph", "--group", "sym:3", "--normal", "G", "--format", "dot"});
  CHECK(dot.status == 0);
  CHECK(dot.out == "graph class_graph {\n  v0 [label=\"size=2 rep=(0,1,2)\"];\n  v1 [label=\"size=3 rep=(1,2)\"];\n}\n");
  CHECK(run({"graph", "--group", "ex1", "--format", "json"}).out.find("\"edges\"") != std::string::npos);
  CHECK(run({"catalog"}).out.find("agl1:8") != std::string::npos);

  const auto path = scratch_dir() / "s3.json";
  write(path, kS3);
  const Run imp = run({"import", "--file", path.string(), "--check"});
  CHECK(imp.status == 0);
  CHECK(imp.out.find("normal subgroup A3: order 3, normal") != std::string::npos);

  const Run file = run({"analyze", "--group", "file:" + path.string() + "#A3"});
  CHECK(file.status == 0);
  CHECK(file.out.find("normal subgroup: A3 (order 3)") != std::string::npos);
  CHECK(run({"analyze", "--group", "file:" + path.string() + "#B"}).status == 2);

  const Run exported = run({"export", "--group", "agl1:8"});
  CHECK(parse_group_file(exported.out).normal_subgroups.size() == 2);
}

TEST_CASE("verify exit status and determinism") {
  const Run a = run({"verify", "--suite", "diameter_bound,complete_components", "--max-order", "2000"});
  CHECK(a.status == 0);
  CHECK(a.out.find("counterexamples: 0") != std::string::npos);
  const Run b = run({"verify", "--suite", "diameter_bound,complete_components", "--max-order", "2000"});
  CHECK(a.out == b.out);

  const auto dir = scratch_dir() / "corpus";
  std::filesystem::create_directories(dir);
  write(dir / "s3.json", kS3);
  write(dir / "broken.json", "{");
  const Run c = run({"verify", "--no-builtin", "--corpus", dir.string(), "--json", "-"});
  CHECK(c.status == 0);
  CHECK(c.out.find("\"schema_version\": 1") != std::string::npos);
  CHECK(c.out.find("file:s3|A3") != std::string::npos);
  CHECK(c.out.find("file:broken: parse error at line 1") != std::string::npos);
}
