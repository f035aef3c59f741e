#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "flipcount/cli.hpp"
#include "flipcount/dfa.hpp"
#include "flipcount/labeled_graph.hpp"
#include "flipcount/oracle.hpp"

#include "helpers.hpp"

using namespace flipcount;
using flipcount::testing::data_file;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

// Pulls the quoted fields out of one graphviz line.
std::vector<std::string> quoted_fields(const std::string& line) {
  std::vector<std::string> fields;
  size_t pos = 0;
  while (true) {
    size_t open = line.find('"', pos);
    if (open == std::string::npos) break;
    size_t close = line.find('"', open + 1);
    if (close == std::string::npos) break;
    fields.push_back(line.substr(open + 1, close - open - 1));
    pos = close + 1;
  }
  return fields;
}

LabeledGraph graph_from_dot(const std::string& dot,
                            const std::vector<std::string>& alphabet) {
  std::map<std::string, int> vertex_ids;
  std::map<std::string, int> symbol_ids;
  for (size_t i = 0; i < alphabet.size(); ++i)
    symbol_ids[alphabet[i]] = static_cast<int>(i);
  LabeledGraph g;
  g.alphabet = alphabet;
  auto vertex = [&](const std::string& name) {
    auto it = vertex_ids.find(name);
    if (it == vertex_ids.end()) {
      it = vertex_ids.emplace(name, static_cast<int>(g.vertex_names.size()))
               .first;
      g.vertex_names.push_back(name);
    }
    return it->second;
  };
  for (const std::string& line : lines_of(dot)) {
    if (line.find(" -> ") == std::string::npos) continue;
    if (line.find("style=dashed") != std::string::npos) continue;
    auto fields = quoted_fields(line);
    REQUIRE(fields.size() == 3);
    g.edges.push_back({vertex(fields[0]), symbol_ids.at(fields[2]),
                       vertex(fields[1])});
  }
  g.validate();
  return g;
}

}  // namespace

TEST_CASE("count tabulates the even shift") {
  CliResult r = cli({"count", "--system", data_file("even.json"), "--max-m", "3"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "m\tp_m\tp_{m,0}\tp_{m,1}");
  CHECK(lines[1] == "1\t2\t2\t-");
  CHECK(lines[2] == "2\t2\t2\t2");
  CHECK(lines[3] == "3\t5\t3\t-");
}

TEST_CASE("count tabulates the one point system") {
  CliResult r = cli({"count", "--system", data_file("full1.json"), "--max-m", "2"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "1\t1\t1\t-");
  CHECK(lines[2] == "2\t1\t1\t1");
}

TEST_CASE("count verification against brute force passes on the joint chain") {
  CliResult r = cli({"count", "--system", data_file("even.json"), "--max-m", "4",
                     "--verify"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] ==
        "m\tp_m\tp_{m,0}\tp_{m,1}\toracle_p_m\toracle_p_{m,0}\toracle_p_{m,1}");
  CHECK(lines[1] == "1\t2\t2\t-\t2\t2\t-");
  CHECK(lines[2] == "2\t2\t2\t2\t2\t2\t2");
  CHECK(lines[4] == "4\t6\t2\t4\t6\t2\t4");
}

TEST_CASE("count verification fails on the irreducible component") {
  CliResult r = cli({"count", "--system", data_file("even.json"), "--max-m", "2",
                     "--chain", "component", "--verify"});
  CHECK(r.code == 4);
}

TEST_CASE("direct matrix counts match the chain pipeline on an sft") {
  CliResult direct = cli({"count", "--system", data_file("golden.json"),
                          "--max-m", "6", "--direct"});
  CliResult chain = cli({"count", "--system", data_file("golden.json"),
                         "--max-m", "6"});
  CHECK(direct.code == 0);
  CHECK(chain.code == 0);
  CHECK(direct.out == chain.out);

  CliResult swap = cli({"count", "--system", data_file("full2swap.json"),
                        "--max-m", "4", "--direct", "--verify"});
  CHECK(swap.code == 0);

  CliResult sofic = cli({"count", "--system", data_file("even.json"),
                         "--max-m", "2", "--direct"});
  CHECK(sofic.code == 2);
  CHECK(sofic.err.find("error:") == 0);
}

TEST_CASE("zeta prints closed forms and series coefficients") {
  CliResult r = cli({"zeta", "--system", data_file("even.json"), "--order", "2",
                     "--closed-form"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "zeta_T\t(1 + t)/(1 - t - t^2)");
  CHECK(lines[1] ==
        "G\t(2*t + 2*t^2 - t^3 - t^4 - 2*t^5 - t^6)/(1 - 2*t^2 + t^6)");
  CHECK(lines[2] == "0\t1");
  CHECK(lines[3] == "1\t2");
  CHECK(lines[4] == "2\t5");
}

TEST_CASE("zeta handles order zero") {
  CliResult r = cli({"zeta", "--system", data_file("golden.json"), "--order", "0"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "0\t1");
}

TEST_CASE("export writes a joint chain drawing") {
  auto path = temp_path("flipcount_full1_joint.dot");
  std::filesystem::remove(path);
  CliResult r = cli({"export", "--system", data_file("full1.json"), "--what",
                     "joint", "--out", path.string()});
  CHECK(r.code == 0);
  std::string dot = slurp(path);
  CHECK(dot.find("digraph chain {") == 0);
  CHECK(dot.find("peripheries=2") != std::string::npos);
  CHECK(dot.find("[label=\"a\"]") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST_CASE("exported finitary chain presents the same language") {
  auto path = temp_path("flipcount_even_finitary.dot");
  std::filesystem::remove(path);
  CliResult r = cli({"export", "--system", data_file("even.json"), "--what",
                     "finitary", "--out", path.string()});
  CHECK(r.code == 0);
  LabeledGraph parsed = graph_from_dot(slurp(path), {"0", "1"});
  LabeledGraph trimmed = trim_essential(parsed);
  LabeledGraph even = corpus_system("even").graph;
  CHECK(same_language(
      forward_language_dfa(trimmed, full_vertex_set(trimmed)),
      forward_language_dfa(even, full_vertex_set(even))));
  std::filesystem::remove(path);
}

TEST_CASE("exported matrices reproduce the involution blocks") {
  auto path = temp_path("flipcount_even_matrices.txt");
  std::filesystem::remove(path);
  CliResult r = cli({"export", "--system", data_file("even.json"), "--what",
                     "matrices", "--out", path.string()});
  CHECK(r.code == 0);
  std::string dump = slurp(path);
  CHECK(dump.find("chain states 13") == 0);
  CHECK(dump.find("levels 9") != std::string::npos);
  // Parse every J block and square it.
  std::istringstream in(dump);
  std::string line;
  int size = 0;
  int j_blocks = 0;
  while (std::getline(in, line)) {
    if (line.rfind("size ", 0) == 0) size = std::stoi(line.substr(5));
    if (line != "matrix J") continue;
    ++j_blocks;
    std::vector<std::vector<long long>> j(size, std::vector<long long>(size));
    for (int i = 0; i < size; ++i) {
      REQUIRE(std::getline(in, line));
      std::istringstream row(line);
      for (int k = 0; k < size; ++k) row >> j[i][k];
    }
    for (int i = 0; i < size; ++i) {
      for (int k = 0; k < size; ++k) {
        long long acc = 0;
        for (int l = 0; l < size; ++l) acc += j[i][l] * j[l][k];
        CHECK(acc == (i == k ? 1 : 0));
      }
    }
  }
  CHECK(j_blocks == 9);
  std::filesystem::remove(path);
}

TEST_CASE("schema and flip errors map to distinct exit codes") {
  CliResult missing = cli({"count", "--system", temp_path("nope.json").string(),
                           "--max-m", "2"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") == 0);

  auto bad = temp_path("flipcount_bad.json");
  write_text(bad.string(), "{ not json");
  CliResult badr = cli({"count", "--system", bad.string(), "--max-m", "2"});
  CHECK(badr.code == 2);
  std::filesystem::remove(bad);

  auto swapped = temp_path("flipcount_even_swap.json");
  write_text(swapped.string(), R"({
    "name": "even-swapped",
    "kind": "sofic",
    "alphabet": ["0", "1"],
    "graph": {
      "vertices": ["p", "q"],
      "edges": [["p", "1", "p"], ["p", "0", "q"], ["q", "0", "p"]]
    },
    "flip": {"tau": {"0": "1", "1": "0"}}
  })");
  CliResult flip = cli({"count", "--system", swapped.string(), "--max-m", "2"});
  CHECK(flip.code == 3);
  CHECK(flip.err.find("error:") == 0);
  std::filesystem::remove(swapped);
}

TEST_CASE("usage errors come from the option parser") {
  CliResult r = cli({"count", "--system", data_file("even.json")});
  CHECK(r.code != 0);
  CliResult unknown = cli({"count", "--system", data_file("even.json"),
                           "--max-m", "2", "--chain", "mystery"});
  CHECK(unknown.code != 0);
}

TEST_CASE("identical invocations produce byte identical output") {
  std::vector<std::vector<std::string>> invocations = {
      {"count", "--system", data_file("even.json"), "--max-m", "6",
       "--verify"},
      {"zeta", "--system", data_file("golden.json"), "--order", "8",
       "--closed-form"},
  };
  for (const auto& args : invocations) {
    CliResult first = cli(args);
    CliResult second = cli(args);
    REQUIRE(first.code == 0);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }

  auto dot_a = temp_path("flipcount_det_a.dot");
  auto dot_b = temp_path("flipcount_det_b.dot");
  std::vector<std::string> base = {"export", "--system",
                                   data_file("even.json"), "--what", "joint",
                                   "--out"};
  auto with_out = [&](const std::filesystem::path& p) {
    std::vector<std::string> args = base;
    args.push_back(p.string());
    return cli(args);
  };
  REQUIRE(with_out(dot_a).code == 0);
  REQUIRE(with_out(dot_b).code == 0);
  CHECK(slurp(dot_a) == slurp(dot_b));
  std::filesystem::remove(dot_a);
  std::filesystem::remove(dot_b);
}
