#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "degraph/enumerate.hpp"
#include "degraph/groups.hpp"
#include "degraph/prime_graph.hpp"
#include "degraph/verify.hpp"
#include "oracles.hpp"

using namespace degraph;

namespace {

struct Failure {
  std::string why;
};

void require(bool cond, const std::string& why) {
  if (!cond) throw Failure{why};
}

const GroupCatalog& groups() { return GroupCatalog::bundled(); }
const GraphCatalog& graphs() { return GraphCatalog::bundled(); }

PrimeGraph delta(const GroupSpec& s) { return prime_graph_of(s, groups()); }

void claim_passes(const std::string& id, const SweepBounds& bounds = {}) {
  const auto r = run_one(id, bounds);
  require(r.status == Status::pass, id + ": " + r.detail);
}

void psl2_examples() {
  require(character_degrees(GroupSpec::psl2(64), groups()) == DegreeSet({1, 63, 64, 65}),
          "cd(PSL2(64))");
  const auto g64 = delta(GroupSpec::psl2(64));
  require(connected_components(g64) ==
              std::vector<PrimeSet>{PrimeSet{2}, PrimeSet{3, 7}, PrimeSet{5, 13}},
          "components of PSL2(64)");
  require(g64.edge_count() == 2, "PSL2(64) edge count");

  require(character_degrees(GroupSpec::psl2(125), groups()) ==
              DegreeSet({1, 63, 124, 125, 126}),
          "cd(PSL2(125))");
  const auto g125 = delta(GroupSpec::psl2(125));
  require(g125.vertices() == PrimeSet{2, 3, 5, 7, 31}, "vertices of PSL2(125)");
  require(g125.edges() == std::vector<PrimeEdge>{{2, 3}, {2, 7}, {2, 31}, {3, 7}},
          "edges of PSL2(125)");
  require(g125.degree(5) == 0, "5 isolated in PSL2(125)");

  const auto g256 = delta(GroupSpec::psl2(256));
  require(g256.vertices() == PrimeSet{2, 3, 5, 17, 257}, "vertices of PSL2(256)");
  require(g256.edges() == std::vector<PrimeEdge>{{3, 5}, {3, 17}, {5, 17}}, "edges of PSL2(256)");
}

void censuses() {
  const auto e5 = enumerate_regular(5, 4);
  require(e5.classes.size() == 1 && e5.classes[0] == canonicalize(SmallGraph::complete(5)),
          "enum(5,4) is K5");
  require(enumerate_regular(6, 4).classes.size() == 1, "|enum(6,4)| = 1");

  const auto e7 = enumerate_regular(7, 4);
  require(e7.classes.size() == 2, "|enum(7,4)| = 2");
  std::multiset<int> tri;
  for (const auto& c : e7.classes) tri.insert(triangle_count(c.graph()));
  require(tri == std::multiset<int>{6, 7}, "triangle counts of enum(7,4)");

  require(filter_by_clique(enumerate_regular(8, 4).classes, 4, 0).size() == 1,
          "one K4 class in enum(8,4)");
  require(filter_by_clique(enumerate_regular(9, 4).classes, 4, 0).size() == 2,
          "two K4 classes in enum(9,4)");
  for (int n : {6, 7}) {
    require(filter_by_clique(enumerate_regular(n, 4).classes, 4, 0).empty(),
            "enum(" + std::to_string(n) + ",4) is K4-free");
  }
  for (int n = 6; n <= 9; ++n) {
    require(filter_by_clique(enumerate_regular(n, 4).classes, 5, 0).empty(),
            "enum(" + std::to_string(n) + ",4) is K5-free");
  }
}

oracle::Adjacency adjacency(const SmallGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  oracle::Adjacency a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

std::set<std::uint64_t> codes(const RegularCensus& c) {
  std::set<std::uint64_t> out;
  for (const auto& g : c.classes) out.insert(g.code);
  return out;
}

void oracle_equivalence() {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto census = enumerate_regular(n, k);
      const auto tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      require(census.classes.size() == codes(census).size(), "duplicate class in enum" + tag);
      require(codes(census) == oracle::regular_classes(n, k), "enum" + tag + " vs oracle");
      for (const auto& c : census.classes) {
        const auto g = c.graph();
        require(palfy_condition(g) == oracle::palfy_triples(adjacency(g)), "palfy on " + to_edge_string(g));
      }
    }
  }
}

void data_integrity() {
  for (const auto& [id, table] : groups().tables()) {
    u64 sum = 0;
    for (const auto& e : table.entries()) sum += e.multiplicity * e.degree * e.degree;
    require(sum == table.order(), "sum m*d^2 for " + id);
  }

  const auto& j1 = groups().at("j1");
  const auto* indices = j1.extra("maximal_indices");
  require(indices != nullptr, "J1 maximal indices missing");
  const std::vector<u64> expected = {266, 1045, 1463, 1540, 1596, 2926, 4180};
  std::vector<u64> got = *indices;
  std::sort(got.begin(), got.end());
  require(got == expected, "J1 maximal index list");
  for (u64 i : got) require(i % 2 == 0 || i % 19 == 0, "J1 index " + std::to_string(i));

  const auto dj1 = delta(GroupSpec::sporadic("J1"));
  require(degree_sequence(dj1) ==
              std::vector<VertexDegree>{{2, 4}, {3, 2}, {5, 2}, {7, 3}, {11, 2}, {19, 3}},
          "degrees in Delta(J1)");
  const auto dm11 = delta(GroupSpec::sporadic("M11"));
  require(degree_sequence(dm11) == std::vector<VertexDegree>{{2, 2}, {3, 1}, {5, 3}, {11, 2}},
          "degrees in Delta(M11)");
}

void dominating() {
  const std::vector<std::pair<std::string, int>> expected = {
      {"order7-seven-triangles", 1},
      {"order7-six-triangles", 2},
      {"order8-k4", 1},
      {"order9-k4-b", 1},
  };
  for (const auto& [name, value] : expected) {
    const auto& g = graphs().at(name).labeled;
    require(max_dominating_in_induced(g, 5) == value, name);
  }
  require(contains_subgraph(graphs().at("order9-k4-a").labeled,
                            graphs().at("two-complete-5").labeled),
          "order9-k4-a contains two-complete-5");
  claim_passes("order7-census");
  claim_passes("order8-k4-count");
  claim_passes("order9-k4-count");
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "PSL2(64), PSL2(125), PSL2(256) degree sets and prime graphs", 1.0, psl2_examples},
      {2, "4-regular censuses on 5 to 9 vertices", 60.0, censuses},
      {3, "enumeration and Palfy condition agree with brute-force oracles", 0.0,
       oracle_equivalence},
      {4, "every k-regular prime graph in the sweep is complete", 120.0,
       [] { claim_passes("regular-simple-complete"); }},
      {5, "five-prime PSL2 graphs inside house or butterfly have the known shapes", 0.0,
       [] { claim_passes("pent-shapes"); }},
      {6, "degree tables, J1 indices and sporadic vertex degrees", 0.0, data_integrity},
      {7, "product join keeps every vertex of b complete", 0.0,
       [] {
         SweepBounds b;
         b.product_trials = 1000;
         claim_passes("product-join", b);
       }},
      {8, "dominating vertices in the census graphs", 0.0, dominating},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.body();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (why.empty() && c.limit_seconds > 0 && elapsed.count() > c.limit_seconds) {
      std::ostringstream s;
      s << "took " << elapsed.count() << " s, limit " << c.limit_seconds << " s";
      why = s.str();
    }
    std::ostringstream line;
    line.precision(3);
    line << (why.empty() ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name
         << " (" << std::fixed << elapsed.count() << " s)";
    if (!why.empty()) line << ": " << why;
    std::cout << line.str() << "\n";
    if (!why.empty()) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
