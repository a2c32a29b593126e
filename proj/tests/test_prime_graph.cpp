#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "degraph/error.hpp"
#include "degraph/prime_graph.hpp"

using namespace degraph;

namespace {

const GroupCatalog& cat() { return GroupCatalog::bundled(); }

PrimeGraph delta(const GroupSpec& s) { return prime_graph_of(s, cat()); }

// p ~ q iff pq divides some degree, checked pair by pair.
PrimeGraph degree_graph_oracle(const DegreeSet& cd) {
  const auto vs = cd.primes();
  std::vector<PrimeEdge> edges;
  for (u64 p : vs)
    for (u64 q : vs)
      if (p < q)
        for (u64 d : cd)
          if (d % (p * q) == 0) {
            edges.emplace_back(p, q);
            break;
          }
  return PrimeGraph(vs, edges);
}

}  // namespace

TEST_CASE("PSL2(2^6): components {2}, {3,7}, {5,13}") {
  const auto g = delta(GroupSpec::psl2(64));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == PrimeSet{2});
  CHECK(comps[1] == PrimeSet{3, 7});
  CHECK(comps[2] == PrimeSet{5, 13});
  CHECK(g.edge_count() == 2);
}

TEST_CASE("PSL2(5^3): 2 is complete in its component, 5 isolated") {
  const auto g = delta(GroupSpec::psl2(125));
  CHECK(g.vertices() == PrimeSet{2, 3, 5, 7, 31});
  CHECK(g.degree(5) == 0);
  CHECK(g.neighbors(2) == PrimeSet{3, 7, 31});
  CHECK(g.adjacent(3, 7));
  CHECK_FALSE(g.adjacent(3, 31));
  CHECK(g.edge_count() == 4);
}

TEST_CASE("PSL2(2^8): triangle {3,5,17}, isolated 2 and 257") {
  const auto g = delta(GroupSpec::psl2(256));
  CHECK(g.vertices() == PrimeSet{2, 3, 5, 17, 257});
  CHECK(g.edges() == std::vector<PrimeEdge>{{3, 5}, {3, 17}, {5, 17}});
  CHECK(g.degree(2) == 0);
  CHECK(g.degree(257) == 0);
}

TEST_CASE("graph_from_degrees matches the pairwise definition") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> dist(2, 5000);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<u64> degrees{1};
    for (int i = 0; i < 6; ++i) degrees.push_back(dist(rng));
    const DegreeSet cd(degrees);
    REQUIRE(graph_from_degrees(cd) == degree_graph_oracle(cd));
  }
  for (const auto& [id, table] : cat().tables()) {
    REQUIRE(graph_from_degrees(table.degree_set()) == degree_graph_oracle(table.degree_set()));
  }
}

TEST_CASE("structure rules agree with cd(PSL2(q))") {
  for (u64 q = 4; q <= 10000; ++q) {
    if (!as_prime_power(q)) continue;
    const auto s = GroupSpec::psl2(q);
    REQUIRE_MESSAGE(structural_graph(s, cat()) ==
                        graph_from_degrees(character_degrees(s, cat())),
                    q);
  }
}

TEST_CASE("structure rules on the exceptional cases") {
  const auto sz8 = structural_graph(GroupSpec::suzuki(8), cat());
  CHECK(sz8 == graph_from_degrees(cat().at("sz8").degree_set()));
  CHECK(sz8.edges() == std::vector<PrimeEdge>{{2, 7}, {5, 7}, {5, 13}, {7, 13}});
  CHECK(structural_graph(GroupSpec::psl3(2), cat()) == delta(GroupSpec::psl2(7)));
  CHECK(structural_graph(GroupSpec::psl3(4), cat()) ==
        graph_from_degrees(cat().at("l3_4").degree_set()));
  CHECK(structural_graph(GroupSpec::psl2(5), cat()) == structural_graph(GroupSpec::psl2(4), cat()));
  CHECK_THROWS_AS(structural_graph(GroupSpec::alternating(7), cat()), Error);
}

TEST_CASE("PSL3 completeness: q - 1 = 2^i 3^j with i >= 1") {
  for (u64 q = 3; q <= 400; ++q) {
    if (!as_prime_power(q) || q == 4) continue;
    const auto g = structural_graph(GroupSpec::psl3(q), cat());
    CHECK_MESSAGE(is_complete(g) == is_2_3_smooth(q - 1, 1), q);
    CHECK(g.vertices() == prime_set_of_group(GroupSpec::psl3(q), cat()));
  }
  CHECK(is_complete(structural_graph(GroupSpec::psl3(3), cat())));
  CHECK_FALSE(is_complete(structural_graph(GroupSpec::psl3(4), cat())));
}

TEST_CASE("PSU3 completeness: q + 1 = 2^i 3^j") {
  for (u64 q = 3; q <= 400; ++q) {
    if (!as_prime_power(q)) continue;
    const auto g = structural_graph(GroupSpec::psu3(q), cat());
    CHECK_MESSAGE(is_complete(g) == is_2_3_smooth(q + 1), q);
    CHECK(g.vertices() == prime_set_of_group(GroupSpec::psu3(q), cat()));
  }
}

TEST_CASE("Suzuki graphs: 2 adjacent exactly to the primes of q^2 - 1") {
  for (u64 q2 = 8; q2 <= 32768; q2 *= 4) {
    const auto g = structural_graph(GroupSpec::suzuki(q2), cat());
    CHECK(g.neighbors(2) == prime_set(q2 - 1));
    const auto odd = g.induced(g.vertices() - PrimeSet{2});
    CHECK(is_complete(odd));
  }
}

TEST_CASE("Delta(J1) and Delta(M11)") {
  const auto j1 = delta(GroupSpec::sporadic("J1"));
  CHECK(degree_sequence(j1) == std::vector<VertexDegree>{
                                   {2, 4}, {3, 2}, {5, 2}, {7, 3}, {11, 2}, {19, 3}});
  const auto m11 = delta(GroupSpec::sporadic("M11"));
  CHECK(degree_sequence(m11) == std::vector<VertexDegree>{{2, 2}, {3, 1}, {5, 3}, {11, 2}});
}

TEST_CASE("product join") {
  const PrimeGraph a(PrimeSet{2, 3, 5}, {{3, 5}});
  const PrimeGraph b(PrimeSet{2, 7}, {});
  const auto p = product_graph(a, b);
  CHECK(p.vertices() == PrimeSet{2, 3, 5, 7});
  // a's edge, plus (p in a, q in b, p != q): 2-7, 3-2, 3-7, 5-2, 5-7
  CHECK(p.edges() == std::vector<PrimeEdge>{{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {5, 7}});
  CHECK(complete_vertices(p) == PrimeSet{2, 3, 5, 7});

  const auto a5xa5 = product_graph(delta(GroupSpec::psl2(4)), delta(GroupSpec::psl2(4)));
  CHECK(is_complete(a5xa5));
}

TEST_CASE("regularity, cliques, palfy") {
  const auto k4 = PrimeGraph::complete(PrimeSet{2, 3, 5, 7});
  CHECK(is_k_regular(k4, 3));
  CHECK(regular_degree(k4) == 3u);
  CHECK(contains_clique(k4, 4));
  CHECK(is_clique_free(k4, 5));
  CHECK(palfy_condition(k4));
  CHECK(complete_vertices(k4) == k4.vertices());

  const PrimeGraph path(PrimeSet{2, 3, 5, 7}, {{2, 3}, {3, 5}, {5, 7}});
  CHECK_FALSE(regular_degree(path).has_value());
  const auto d = diameter_per_component(path);
  REQUIRE(d.size() == 1);
  CHECK(d[0].diameter == 3);

  const PrimeGraph three_isolated(PrimeSet{2, 3, 5});
  CHECK_FALSE(palfy_condition(three_isolated));
  CHECK(regular_degree(three_isolated) == 0u);
}

TEST_CASE("palfy bound") {
  CHECK(palfy_bound(1, 1));
  CHECK(palfy_bound(3, 2));
  CHECK_FALSE(palfy_bound(2, 2));
  CHECK(palfy_bound(7, 3));
  CHECK_FALSE(palfy_bound(6, 3));
  CHECK(palfy_bound(delta(GroupSpec::psl2(7))));  // connected
}

TEST_CASE("serialization is stable and round-trips") {
  const auto g = delta(GroupSpec::psl2(64));
  CHECK(to_edgelist(g) == "# vertices 2 3 5 7 13\n3 7\n5 13\n");
  CHECK(to_dot(g, "PSL2(64)") ==
        "graph \"PSL2(64)\" {\n  2;\n  3;\n  5;\n  7;\n  13;\n  3 -- 7;\n  5 -- 13;\n}\n");
  CHECK(to_json_string(g) == R"({"edges":[[3,7],[5,13]],"vertices":[2,3,5,7,13]})");
  CHECK(prime_graph_from_json(nlohmann::json::parse(to_json_string(g))) == g);
  CHECK_THROWS_AS(prime_graph_from_json(nlohmann::json::parse(R"({"vertices":[2,4],"edges":[]})")),
                  Error);
  CHECK_THROWS_AS(prime_graph_from_json(nlohmann::json::parse(R"({"vertices":[2,3],"edges":[[2]]})")),
                  Error);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(PrimeGraph(PrimeSet{2, 3}, {{2, 5}}), Error);
  CHECK_THROWS_AS(PrimeGraph(PrimeSet{2, 3}, {{3, 3}}), Error);
}
