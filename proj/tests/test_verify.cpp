#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "degraph/error.hpp"
#include "degraph/verify.hpp"

using namespace degraph;

namespace {

SweepBounds small_bounds() {
  SweepBounds b;
  b.psl2_max_q = 2000;
  b.suzuki_max_q_squared = 2048;
  b.psl3_max_q = 50;
  b.psu3_max_q = 50;
  b.product_trials = 200;
  return b;
}

}  // namespace

TEST_CASE("claim ids are unique") {
  std::set<std::string> ids;
  for (const auto& c : registered_claims()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.description.empty());
  }
  CHECK(ids.count("pent-shapes"));
  CHECK(ids.count("m11-degrees"));
  CHECK(ids.count("j1-deltadeg"));
  CHECK(ids.count("k5-regular-closure"));
  CHECK(ids.count("huppert-3prime"));
}

TEST_CASE("every claim passes at the default bounds") {
  const auto report = run_all(SweepBounds{}, 2);
  REQUIRE(report.claims.size() == registered_claims().size());
  for (const auto& r : report.claims) CHECK_MESSAGE(r.status == Status::pass, r.id << ": " << r.detail);
  CHECK(report.ok());
}

TEST_CASE("report is independent of the thread count") {
  const auto a = run_all(small_bounds(), 1);
  const auto b = run_all(small_bounds(), 8);
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) {
    CHECK(a.claims[i].id == registered_claims()[i].id);
    CHECK(a.claims[i].id == b.claims[i].id);
    CHECK(a.claims[i].status == b.claims[i].status);
    CHECK(a.claims[i].detail == b.claims[i].detail);
  }
}

TEST_CASE("run_one") {
  const auto r = run_one("m11-degrees", SweepBounds{});
  CHECK(r.status == Status::pass);
  CHECK(r.detail == "deg(2)=deg(11)=2, deg(5)=3, deg(3)=1");
  CHECK(run_one("j1-deltadeg", SweepBounds{}).detail ==
        "deg(2)=4, deg(7)=deg(19)=3, deg(3)=deg(5)=deg(11)=2");
  CHECK(run_one("order6-census", SweepBounds{}).detail == "|enum(6,4)|=1");
  try {
    run_one("no-such-claim", SweepBounds{});
    FAIL("accepted unknown id");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_claim);
  }
}

GraphCatalog with_replacement(const std::string& name, const std::string& text) {
  GraphCatalog graphs;
  for (const auto& [key, g] : GraphCatalog::bundled().graphs()) {
    if (key != name) {
      graphs.add(g);
      continue;
    }
    auto broken = GraphCatalog::parse(text, name);
    broken.source = "data/graphs/" + name + ".txt";
    graphs.add(broken);
  }
  return graphs;
}

TEST_CASE("a bad transcription fails with a pointer to the catalog file") {
  // The other nine-vertex drawing filed under this name.
  const auto graphs = with_replacement(
      "order9-k4-b",
      "order = 9\nedges = 5-8, 7-8, 0-8, 6-8, 0-1, 0-2, 0-3, 1-3, 1-7, 2-4, 4-6, 2-3, 3-4, 4-5, "
      "5-6, 1-2, 6-7, 5-7\n");
  const auto r = run_one("dominating-order9-k4-b", SweepBounds{}, GroupCatalog::bundled(), graphs);
  CHECK(r.status == Status::fail);
  CHECK(r.detail.find("order9-k4-b.txt") != std::string::npos);
  CHECK(std::find(r.tags.begin(), r.tags.end(), "figure-transcription") != r.tags.end());

  // C9(1,2) is 4-regular but has no K4.
  const auto circulant = with_replacement(
      "order9-k4-b",
      "order = 9\nedges = 0-1,1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-0,0-2,1-3,2-4,3-5,4-6,5-7,6-8,7-0,8-1\n");
  const auto count = run_one("order9-k4-count", SweepBounds{}, GroupCatalog::bundled(), circulant);
  CHECK(count.status == Status::fail);
  CHECK(count.detail.find("order9-k4-b.txt") != std::string::npos);
}

TEST_CASE("a claim whose data is missing fails instead of throwing") {
  const GraphCatalog empty;
  const auto r = run_one("pent-shapes", SweepBounds{}, GroupCatalog::bundled(), empty);
  CHECK(r.status == Status::fail);
  CHECK(r.detail.find("house") != std::string::npos);
}

TEST_CASE("bounds parsing and validation") {
  const auto b = SweepBounds::parse("psl2=500, trials=10,seed=9");
  CHECK(b.psl2_max_q == 500);
  CHECK(b.product_trials == 10);
  CHECK(b.seed == 9);
  CHECK(b.psl3_max_q == 200);
  CHECK(SweepBounds::parse("").psl2_max_q == 10000);
  CHECK_THROWS_AS(SweepBounds::parse("psl2"), Error);
  CHECK_THROWS_AS(SweepBounds::parse("colour=3"), Error);
  CHECK_THROWS_AS(SweepBounds::parse("psl2=x"), Error);
  CHECK_THROWS_AS(SweepBounds::parse("suzuki=4294967296"), Error);
  CHECK_THROWS_AS(SweepBounds::parse("psl2=3"), Error);
}

TEST_CASE("json and table output") {
  Report report;
  report.claims.push_back({"a", Status::pass, "fine", std::chrono::milliseconds(3), {}});
  report.claims.push_back({"b", Status::fail, "witness", std::chrono::milliseconds(1), {"figure-transcription"}});
  const auto j = to_json(report);
  CHECK(j["passed"] == 1);
  CHECK(j["failed"] == 1);
  CHECK(j["claims"][1]["id"] == "b");
  CHECK(j["claims"][1]["status"] == "fail");
  CHECK(j["claims"][1]["tags"][0] == "figure-transcription");
  CHECK(j["bounds"]["psl2"] == 10000);
  CHECK_FALSE(report.ok());

  const auto table = to_table(report);
  CHECK(table.find("witness") != std::string::npos);
  CHECK(table.find("1 passed, 1 failed, 0 skipped") != std::string::npos);
}
