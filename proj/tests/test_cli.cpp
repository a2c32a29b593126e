#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "degraph/prime_graph.hpp"

using degraph::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cd") {
  const auto r = run({"cd", "psl2", "64"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 63 64 65\n");
  CHECK(run({"cd", "psl2", "125"}).out == "1 63 124 125 126\n");
  CHECK(run({"cd", "sporadic", "j1"}).out == "1 56 76 77 120 133 209\n");
}

TEST_CASE("order") {
  CHECK(run({"order", "psu3", "3"}).out == "6048\n");
  CHECK(run({"order", "suzuki", "8"}).out == "29120\n");
  const auto r = run({"order", "suzuki", "2147483648"});
  CHECK(r.code == 1);
  CHECK(r.err.find("overflow") != std::string::npos);
}

TEST_CASE("graph formats") {
  const auto edgelist = run({"graph", "psl2", "64"});
  CHECK(edgelist.code == 0);
  CHECK(edgelist.out == "# vertices 2 3 5 7 13\n3 7\n5 13\n");

  const auto dot = run({"graph", "psl2", "64", "--format", "dot"});
  CHECK(dot.out.rfind("graph \"PSL2(64)\" {", 0) == 0);
  CHECK(dot.out.find("5 -- 13;") != std::string::npos);

  const auto json = run({"graph", "psl2", "256", "--format", "json"});
  const auto g = degraph::prime_graph_from_json(nlohmann::json::parse(json.out));
  CHECK(g.vertices() == degraph::PrimeSet{2, 3, 5, 17, 257});
  CHECK(g.edge_count() == 3);

  CHECK(run({"graph", "psu3", "5", "--structural"}).code == 0);
  CHECK(run({"graph", "psl3", "7"}).code == 0);
}

TEST_CASE("isomorphic groups print the same graph") {
  CHECK(run({"graph", "psl2", "4"}).out == run({"graph", "psl2", "5"}).out);
  CHECK(run({"graph", "psl2", "4"}).out == "# vertices 2 3 5\n");
}

TEST_CASE("output is byte-stable") {
  CHECK(run({"graph", "sporadic", "j1", "--format", "json"}).out ==
        run({"graph", "sporadic", "j1", "--format", "json"}).out);
  CHECK(run({"enum", "--n", "9", "--k", "4"}).out == run({"enum", "--n", "9", "--k", "4"}).out);
}

TEST_CASE("enum") {
  const auto r = run({"enum", "--n", "7", "--k", "4", "--stats"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, columns, row1, row2, extra;
  std::getline(lines, header);
  std::getline(lines, columns);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "# enum n=7 k=4: 2 classes");
  CHECK(columns.rfind("index\ttriangles", 0) == 0);
  CHECK(((row1.rfind("1\t7\t", 0) == 0 && row2.rfind("2\t6\t", 0) == 0) ||
         (row1.rfind("1\t6\t", 0) == 0 && row2.rfind("2\t7\t", 0) == 0)));
  CHECK_FALSE(std::getline(lines, extra));

  CHECK(run({"enum", "--n", "9", "--k", "4", "--require-clique", "4"}).out.rfind(
            "# enum n=9 k=4: 2 classes\n", 0) == 0);
  CHECK(run({"enum", "--n", "7", "--k", "3"}).out == "# enum n=7 k=3: none (n*k is odd)\n");
}

TEST_CASE("product") {
  const auto r = run({"product", "psl2", "4", "psl2", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# vertices 2 3 5 7\n", 0) == 0);
  CHECK(run({"product", "psl2", "4"}).code == 2);
}

TEST_CASE("verify") {
  const auto one = run({"verify", "--only", "m11-degrees"});
  CHECK(one.code == 0);
  CHECK(one.out.find("deg(2)=deg(11)=2, deg(5)=3, deg(3)=1") != std::string::npos);

  const auto json = run({"verify", "--only", "order6-census", "--json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["claims"][0]["detail"] == "|enum(6,4)|=1");
  CHECK(j["failed"] == 0);

  const auto all = run({"verify", "--bounds", "psl2=1000,psl3=30,psu3=30,trials=50"});
  CHECK(all.code == 0);
  CHECK(all.out.find(" 0 failed") != std::string::npos);

  const auto bad = run({"verify", "--only", "no-such-claim"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("no-such-claim") != std::string::npos);

  CHECK(run({"verify", "--bounds", "psl2=abc"}).code == 2);
  CHECK(run({"verify", "--list"}).out.find("pent-shapes") != std::string::npos);
}

TEST_CASE("verify exits 1 when a claim fails") {
  // A data directory whose octahedron is the wrong graph.
  const auto dir = std::filesystem::temp_directory_path() / "degraph-cli-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir / "graphs");
  std::filesystem::copy(DEGRAPH_TEST_DATA_DIR "/groups", dir / "groups");
  for (const auto& e : std::filesystem::directory_iterator(DEGRAPH_TEST_DATA_DIR "/graphs")) {
    std::filesystem::copy_file(e.path(), dir / "graphs" / e.path().filename());
  }
  {
    std::ofstream f(dir / "graphs" / "octahedron.txt", std::ios::trunc);
    f << "order = 6\nedges = 0-1, 1-2, 2-3, 3-4, 4-5, 0-5\n";
  }
  const auto r = run({"--data-dir", dir.string(), "verify", "--only", "order6-census"});
  CHECK(r.code == 1);
  CHECK(r.out.find("octahedron.txt") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("catalog") {
  const auto list = run({"catalog"});
  CHECK(list.code == 0);
  CHECK(list.out.find("octahedron") != std::string::npos);
  const auto one = run({"catalog", "octahedron"});
  CHECK(one.out.find("triangles: 8") != std::string::npos);
  const auto missing = run({"catalog", "dodecahedron"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("dodecahedron") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and name the token") {
  const auto fam = run({"cd", "psl9", "7"});
  CHECK(fam.code == 2);
  CHECK(fam.err.find("psl9") != std::string::npos);

  const auto q = run({"cd", "psl2", "6"});
  CHECK(q.code == 2);
  CHECK(q.err.find("6") != std::string::npos);

  const auto word = run({"graph", "psl2", "sixty"});
  CHECK(word.code == 2);
  CHECK(word.err.find("sixty") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"graph", "psl2", "64", "--format", "png"}).code == 2);
  CHECK(run({"enum", "--n", "11", "--k", "4"}).code == 2);
  CHECK(run({"enum", "--n", "5", "--k", "5"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("unsupported degree sets are reported, not usage errors") {
  const auto r = run({"cd", "psl3", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("PSL3(5)") != std::string::npos);
}
