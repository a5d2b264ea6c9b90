#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "topobound/cli.hpp"
#include "topobound/coloring.hpp"

using namespace topobound;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("topobound_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, GenKneser) {
  const Result r = run({"gen", "kneser", "5", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 13), "p edge 10 15\n");
}

TEST(Cli, GenSchrijverIsPentagon) {
  const Result r = run({"gen", "schrijver", "5", "2"});
  EXPECT_EQ(r.code, 0);
  const Graph g = parse_dimacs(r.out);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 5u);
  // 2-regular on five vertices forces a single 5-cycle.
  for (int v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_EQ(exact_chromatic_number(g), 3);
}

TEST(Cli, GenSingleVertex) {
  const Result r = run({"gen", "complete", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p edge 1 0\n");
}

TEST(Cli, GenSetSystemJson) {
  const Result r = run({"gen", "schrijver", "6", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("sets").size(), 9u);
  EXPECT_EQ(run({"gen", "cycle", "5", "--format", "json"}).code, 3);
}

TEST(Cli, RandomSeedIsDeterministic) {
  const Result a = run({"gen", "random", "8", "0.4", "12"});
  const Result b = run({"gen", "random", "8", "0.4", "--seed", "12"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"gen", "random", "8", "0.4", "13"}).out);
}

TEST(Cli, BoundsKneser) {
  const Result r = run({"bounds", "kneser", "5", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("dolnikov_kriz"), 3);
  EXPECT_EQ(j.at("chi_exact"), 3);
  for (const auto& v : j.at("verdicts")) EXPECT_NE(v.at("status"), "fail");
}

TEST(Cli, BoundsSchrijver) {
  const Result r = run({"bounds", "schrijver", "8", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("barany"), 6);
  EXPECT_EQ(j.at("dolnikov_kriz"), 4);
}

TEST(Cli, BoundsIsByteIdentical) {
  EXPECT_EQ(run({"bounds", "random", "7", "0.5", "3"}).out, run({"bounds", "random", "7", "0.5", "3"}).out);
}

TEST(Cli, BoundsCsv) {
  const Result r = run({"bounds", "cycle", "5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Cli, BoundsTinyCapIsIncomplete) {
  const auto path = temp_file("petersen.dimacs", to_dimacs(kneser_graph_of(all_k_subsets(5, 2))));
  const Result r = run({"bounds", "file", path.string(), "--cap", "8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out).at("incomplete"), true);
}

TEST(Cli, BoundsFromSetSystemFile) {
  const auto path = temp_file("stable.json", R"({"n":6,"sets":[[1,3],[1,4],[1,5],[2,4],[2,5],[2,6],[3,5],[3,6],[4,6]]})");
  const Result r = run({"bounds", "file", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("presentation"), "given");
}

TEST(Cli, BoundsWritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "topobound_test_report.json";
  std::filesystem::remove(path);
  const Result r = run({"bounds", "complete", "3", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in).at("chi_exact"), 3);
}

TEST(Cli, VerifyMapsPentagon) {
  const Result r = run({"verify-maps", "cycle", "5", "all"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json rows = json::parse(r.out).at("rows");
  EXPECT_EQ(rows.size(), 9u);
  for (const auto& row : rows) EXPECT_EQ(row.at("status"), "pass") << row.dump();
}

TEST(Cli, VerifyMapsSelection) {
  const Result r = run({"verify-maps", "complete", "4", "M8", "M9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("rows").size(), 2u);
}

TEST(Cli, VerifyMapsC4FreePrecondition) {
  const Result r = run({"verify-maps", "complete", "4", "c4free"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out).at("rows")[0].at("status"), "error");
}

TEST(Cli, VerifyMapsCapSkips) {
  const Result r = run({"verify-maps", "kneser", "5", "2", "M7", "--cap", "2000"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out).at("rows")[0].at("status"), "skipped");
}

TEST(Cli, HomologyExamples) {
  auto betti = [](std::vector<std::string> args) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out).at("betti").get<std::vector<int>>();
  };
  EXPECT_EQ(betti({"homology", "complete", "4", "--variant", "B0"}), (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(betti({"homology", "complete", "4", "--variant", "B"}), (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(betti({"homology", "cycle", "5", "--variant", "B1"}), (std::vector<int>{0, 1}));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"gen", "wheel", "5"}).code, 3);
  EXPECT_EQ(run({"gen", "cycle"}).code, 3);
  EXPECT_EQ(run({"gen", "cycle", "x"}).code, 3);
  EXPECT_EQ(run({"bounds", "file", "/nonexistent/graph.dimacs"}).code, 3);
  EXPECT_EQ(run({"bounds", "cycle", "5", "--format", "xml"}).code, 3);
  EXPECT_EQ(run({"bounds", "cycle", "5", "--cap", "0"}).code, 3);
  EXPECT_EQ(run({"homology", "cycle", "5", "--variant", "Q"}).code, 3);
  EXPECT_EQ(run({"verify-maps", "cycle", "5", "M10"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
}
