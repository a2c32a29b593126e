#include "degraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "degraph/error.hpp"
#include "degraph/prime_graph.hpp"
#include "kv_format.hpp"

namespace degraph {

namespace {

constexpr const char* kTranscription = "figure-transcription";

Outcome pass(std::string detail) { return {Status::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Status::fail, std::move(detail)}; }

std::string edges_text(const PrimeGraph& g) {
  std::string s = "V=" + g.vertices().to_string() + " E={";
  bool first = true;
  for (const auto& [p, q] : g.edges()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(p) + "-" + std::to_string(q);
  }
  return s + "}";
}

std::string witness(const GraphClass& c) {
  return to_edge_string(c.graph());
}

std::string catalog_witness(const NamedGraph& g) {
  return "check " + g.source.string() + " (" + g.name + ")";
}

std::vector<u64> prime_powers(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = std::max<u64>(lo, 2); q <= hi; ++q) {
    if (as_prime_power(q)) out.push_back(q);
  }
  return out;
}

// Every Lie-type spec inside the bounds, then the bundled alternating and
// sporadic groups.
std::vector<GroupSpec> sweep_specs(const SweepBounds& b, const GroupCatalog& groups) {
  std::vector<GroupSpec> out;
  for (u64 q : prime_powers(4, b.psl2_max_q)) out.push_back(GroupSpec::psl2(q));
  for (u64 q2 = 8; q2 <= b.suzuki_max_q_squared; q2 *= 4) out.push_back(GroupSpec::suzuki(q2));
  for (u64 q : prime_powers(2, b.psl3_max_q)) out.push_back(GroupSpec::psl3(q));
  for (u64 q : prime_powers(3, b.psu3_max_q)) out.push_back(GroupSpec::psu3(q));
  for (auto& s : groups.bundled_specs()) out.push_back(s);
  return out;
}

const RegularCensus& census4(int n) {
  static const std::vector<RegularCensus> censuses = [] {
    std::vector<RegularCensus> v;
    for (int m = 0; m <= kMaxSmallOrder; ++m) v.push_back(enumerate_regular(m, m > 4 ? 4 : 0));
    return v;
  }();
  return censuses.at(static_cast<std::size_t>(n));
}

std::string class_list(const std::vector<GraphClass>& classes) {
  std::string s;
  for (const auto& c : classes) s += (s.empty() ? "" : "; ") + witness(c);
  return s.empty() ? "none" : s;
}

// Components of g, as vertex masks.
std::vector<VertexMask> components(const SmallGraph& g) {
  std::vector<VertexMask> out;
  VertexMask seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((seen >> v) & 1u) continue;
    VertexMask comp = static_cast<VertexMask>(1u << v);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (int u = 0; u < g.order(); ++u) {
        if ((frontier >> u) & 1u) next |= g.row(u);
      }
      frontier = static_cast<VertexMask>(next & ~comp);
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

// Independent Palfy test: look at every triple directly.
bool palfy_by_triples(const SmallGraph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c)) return false;
  return true;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> v;
    for (u64 p = 2; v.size() < 20; ++p)
      if (is_prime(p)) v.push_back(p);
    return v;
  }();
  return primes;
}

PrimeGraph relabel_with_primes(const SmallGraph& g) {
  std::vector<u64> verts(small_primes().begin(), small_primes().begin() + g.order());
  std::vector<PrimeEdge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(verts[u], verts[v]);
  return PrimeGraph(PrimeSet(verts), edges);
}

// --- group sweeps -------------------------------------------------------------------

Outcome regular_simple_complete(const VerifyContext& ctx) {
  std::size_t checked = 0, regular = 0;
  for (const auto& spec : sweep_specs(ctx.bounds, ctx.groups)) {
    const auto g = prime_graph_of(spec, ctx.groups);
    ++checked;
    const auto k = regular_degree(g);
    if (!k || *k == 0) continue;
    ++regular;
    if (!is_complete(g)) {
      return fail(spec.to_string() + " has a " + std::to_string(*k) +
                  "-regular noncomplete graph: " + edges_text(g));
    }
  }
  return pass(std::to_string(checked) + " groups, " + std::to_string(regular) +
              " with k-regular graph (k >= 1), all complete");
}

Outcome pent_shapes(const VerifyContext& ctx) {
  const auto& house = ctx.graphs.at("house").labeled;
  const auto& butterfly = ctx.graphs.at("butterfly").labeled;
  const std::vector<const NamedGraph*> shapes = {&ctx.graphs.at("pent-a"),
                                                 &ctx.graphs.at("pent-b"),
                                                 &ctx.graphs.at("pent-c")};
  std::map<std::string, std::size_t> hits;
  std::size_t five = 0;
  for (u64 q : prime_powers(4, ctx.bounds.psl2_max_q)) {
    const auto spec = GroupSpec::psl2(q);
    if (prime_set_of_group(spec, ctx.groups).size() != 5) continue;
    ++five;
    const auto g = prime_graph_of(spec, ctx.groups).to_small_graph();
    if (!contains_subgraph(house, g) && !contains_subgraph(butterfly, g)) continue;
    const auto it = std::find_if(shapes.begin(), shapes.end(),
                                 [&](const NamedGraph* s) { return isomorphic(s->labeled, g); });
    if (it == shapes.end()) {
      return fail(spec.to_string() + " fits in house/butterfly but matches no shape: " +
                  edges_text(prime_graph_of(spec, ctx.groups)) + "; " +
                  catalog_witness(*shapes.front()));
    }
    ++hits[(*it)->name];
  }

  const std::pair<u64, const char*> anchors[] = {{64, "pent-a"}, {125, "pent-b"}, {256, "pent-c"}};
  for (auto [q, shape] : anchors) {
    if (q > ctx.bounds.psl2_max_q) continue;
    const auto g = prime_graph_of(GroupSpec::psl2(q), ctx.groups).to_small_graph();
    if (!isomorphic(g, ctx.graphs.at(shape).labeled)) {
      return fail("PSL2(" + std::to_string(q) + ") is not shaped like " + shape + "; " +
                  catalog_witness(ctx.graphs.at(shape)));
    }
  }
  std::string detail = std::to_string(five) + " PSL2(q) with five primes;";
  for (const auto& [name, n] : hits) detail += " " + name + ":" + std::to_string(n);
  return pass(detail);
}

Outcome huppert_3prime(const VerifyContext& ctx) {
  const std::set<GroupSpec> expected = {
      GroupSpec::alternating(5), GroupSpec::alternating(6), GroupSpec::psl2(7),
      GroupSpec::psl2(8),        GroupSpec::psl2(17),       GroupSpec::psl3(3),
      GroupSpec::psu3(3)};
  std::set<GroupSpec> found;
  for (const auto& spec : sweep_specs(ctx.bounds, ctx.groups)) {
    if (prime_set_of_group(spec, ctx.groups).size() == 3) found.insert(canonical(spec));
  }
  auto names = [](const std::set<GroupSpec>& s) {
    std::string out;
    for (const auto& g : s) out += (out.empty() ? "" : ", ") + g.to_string();
    return out;
  };
  if (found != expected) {
    return fail("three-prime groups found {" + names(found) + "}, expected {" +
                names(expected) + "}");
  }
  return pass("{" + names(found) + "}");
}

Outcome four_prime_cases(const VerifyContext& ctx) {
  std::map<FourPrimeCase, std::size_t> counts;
  for (u64 q : prime_powers(4, ctx.bounds.psl2_max_q)) {
    const auto spec = GroupSpec::psl2(q);
    const auto pi = prime_set_of_group(spec, ctx.groups);
    if (pi.size() != 4) continue;
    const auto [p, f] = *as_prime_power(q);
    const u64 top = pi.primes().back();
    const bool r = f == 1 && q == top;
    const bool m = p == 2 && is_prime(f) && is_prime(q - 1) && q - 1 == top;
    const bool t = p == 3 && f >= 5 && is_prime(f);
    if (int(r) + int(m) + int(t) > 1) {
      return fail(spec.to_string() + " satisfies more than one case");
    }
    const auto want = r ? FourPrimeCase::case_r
                      : m ? FourPrimeCase::case_mersenne
                      : t ? FourPrimeCase::case_3t
                          : FourPrimeCase::none;
    const auto got = classify_four_prime_psl2(spec);
    if (got != want) {
      return fail(spec.to_string() + " pi=" + pi.to_string() + ": detector says " +
                  to_string(got) + ", expected " + to_string(want));
    }
    ++counts[got];
  }
  const std::pair<u64, FourPrimeCase> anchors[] = {{13, FourPrimeCase::case_r},
                                                   {32, FourPrimeCase::case_mersenne},
                                                   {128, FourPrimeCase::case_mersenne},
                                                   {243, FourPrimeCase::case_3t}};
  for (auto [q, want] : anchors) {
    if (q > ctx.bounds.psl2_max_q) continue;
    if (classify_four_prime_psl2(GroupSpec::psl2(q)) != want) {
      return fail("PSL2(" + std::to_string(q) + ") is not " + to_string(want));
    }
  }
  std::string detail;
  for (const auto& [c, n] : counts) {
    detail += (detail.empty() ? "" : ", ") + std::string(to_string(c)) + ":" + std::to_string(n);
  }
  return pass(detail.empty() ? "no four-prime PSL2 in range" : detail);
}

Outcome order_prime_sets(const VerifyContext& ctx) {
  std::size_t exact = 0, overflowed = 0;
  for (const auto& spec : sweep_specs(ctx.bounds, ctx.groups)) {
    const auto pi = prime_set_of_group(spec, ctx.groups);
    const auto g = prime_graph_of(spec, ctx.groups);
    if (g.vertices() != pi) {
      return fail(spec.to_string() + ": graph vertices " + g.vertices().to_string() +
                  " differ from pi " + pi.to_string());
    }
    try {
      const auto from_order = prime_set(group_order(spec, ctx.groups));
      if (from_order != pi) {
        return fail(spec.to_string() + ": pi(|S|) = " + from_order.to_string() +
                    " but the factor-union gives " + pi.to_string());
      }
      ++exact;
    } catch (const Error& e) {
      if (e.code() != Errc::overflow) throw;
      ++overflowed;
    }
  }
  return pass(std::to_string(exact) + " cross-checked against |S|, " + std::to_string(overflowed) +
              " with |S| beyond 63 bits");
}

Outcome structural_agreement(const VerifyContext& ctx) {
  std::vector<GroupSpec> specs;
  for (u64 q : prime_powers(4, ctx.bounds.psl2_max_q)) specs.push_back(GroupSpec::psl2(q));
  specs.push_back(GroupSpec::suzuki(8));
  specs.push_back(GroupSpec::psl3(2));
  specs.push_back(GroupSpec::psl3(4));
  for (const auto& spec : specs) {
    const auto from_cd = graph_from_degrees(character_degrees(spec, ctx.groups));
    const auto rule = structural_graph(spec, ctx.groups);
    if (from_cd != rule) {
      return fail(spec.to_string() + ": degree graph " + edges_text(from_cd) +
                  " vs structure rule " + edges_text(rule));
    }
  }
  return pass(std::to_string(specs.size()) + " groups agree");
}

// --- data tables --------------------------------------------------------------------

Outcome degree_tables(const VerifyContext& ctx) {
  for (const auto& [id, table] : ctx.groups.tables()) {
    u64 sum = 0;
    for (const auto& e : table.entries()) {
      sum = checked_add(sum, checked_mul(e.multiplicity, checked_mul(e.degree, e.degree)));
    }
    if (sum != table.order()) {
      return fail(id + ": sum m*d^2 = " + std::to_string(sum) + " but order " +
                  std::to_string(table.order()));
    }
  }
  // Orders of groups with a bundled table against the closed formulas.
  const std::pair<const char*, GroupSpec> formulas[] = {
      {"a5", GroupSpec::psl2(4)},   {"a5", GroupSpec::psl2(5)},   {"a6", GroupSpec::psl2(9)},
      {"l3_4", GroupSpec::psl3(4)}, {"sz8", GroupSpec::suzuki(8)}};
  for (const auto& [id, spec] : formulas) {
    const auto* table = ctx.groups.find(id);
    if (!table) return fail("missing bundled table " + std::string(id));
    GroupSpec raw = spec;
    const u64 q = raw.parameter;
    u64 order = 0;
    switch (raw.family) {
      case Family::psl2: order = q * (q * q - 1) / gcd(2, q - 1); break;
      case Family::psl3: order = q * q * q * (q * q * q - 1) * (q * q - 1) / gcd(3, q - 1); break;
      case Family::suzuki: order = q * q * (q * q + 1) * (q - 1); break;
      default: break;
    }
    if (order != table->order()) {
      return fail(std::string(id) + ": table order " + std::to_string(table->order()) +
                  " vs " + raw.to_string() + " formula " + std::to_string(order));
    }
  }
  for (u64 n = 5; n <= 8; ++n) {
    const auto* table = ctx.groups.find("a" + std::to_string(n));
    if (!table) continue;
    u64 half_factorial = 1;
    for (u64 i = 3; i <= n; ++i) half_factorial *= i;
    if (table->order() != half_factorial) {
      return fail("a" + std::to_string(n) + ": order " + std::to_string(table->order()) +
                  " is not n!/2 = " + std::to_string(half_factorial));
    }
  }
  return pass(std::to_string(ctx.groups.tables().size()) + " tables balance");
}

Outcome j1_data(const VerifyContext& ctx) {
  const auto& j1 = ctx.groups.at("j1");
  const DegreeSet want({1, 56, 76, 77, 120, 133, 209});
  if (j1.degree_set() != want) return fail("cd(J1) = " + j1.degree_set().to_string());
  if (j1.order() != 175560) return fail("|J1| = " + std::to_string(j1.order()));
  const auto pi = prime_set(j1.order());
  const auto* indices = j1.extra("maximal_indices");
  const std::vector<u64> listed = {266, 1045, 1463, 1540, 1596, 2926, 4180};
  if (!indices || *indices != listed) return fail("j1 maximal_indices differ from the listed set");
  for (u64 m : *indices) {
    if (j1.order() % m != 0) return fail(std::to_string(m) + " does not divide |J1|");
    if (m % 2 != 0 && m % 19 != 0) {
      return fail("maximal index " + std::to_string(m) + " divisible by neither 2 nor 19");
    }
    const auto ps = prime_set(m);
    if (ps.size() < 3 || !ps.is_subset_of(pi)) {
      return fail("maximal index " + std::to_string(m) + " has primes " + ps.to_string());
    }
  }
  return pass("cd(J1) = {" + want.to_string() + "}; 7 maximal indices, each divisible by 2 or 19");
}

Outcome sz8_data(const VerifyContext& ctx) {
  const auto& sz = ctx.groups.at("sz8");
  const auto* indices = sz.extra("maximal_indices");
  if (!indices) return fail("sz8 table lacks maximal_indices");
  std::set<PrimeSet> got;
  for (u64 m : *indices) {
    if (sz.order() % m != 0) return fail(std::to_string(m) + " does not divide |Sz(8)|");
    got.insert(prime_set(m));
  }
  const std::set<PrimeSet> want = {PrimeSet({5, 13}), PrimeSet({2, 5, 7}), PrimeSet({2, 7, 13}),
                                   PrimeSet({2, 5, 13})};
  if (got != want) {
    std::string s;
    for (const auto& p : got) s += p.to_string();
    return fail("maximal index prime sets " + s);
  }
  if (group_order(GroupSpec::suzuki(8), ctx.groups) != sz.order()) {
    return fail("Sz(8) formula order disagrees with the table");
  }
  return pass("maximal index prime sets {5,13} {2,5,7} {2,7,13} {2,5,13}");
}

Outcome degree_facts(const VerifyContext& ctx, const char* table,
                     const std::vector<VertexDegree>& want, std::string summary) {
  const auto g = graph_from_degrees(ctx.groups.at(table).degree_set());
  auto got = degree_sequence(g);
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end(),
            [](const VertexDegree& a, const VertexDegree& b) { return a.prime < b.prime; });
  if (got != sorted_want) {
    std::string s;
    for (const auto& d : got) s += "deg(" + std::to_string(d.prime) + ")=" + std::to_string(d.degree) + " ";
    return fail(std::string(table) + ": " + s + edges_text(g));
  }
  return pass(std::move(summary));
}

// --- censuses -----------------------------------------------------------------------

Outcome order5_census(const VerifyContext&) {
  const auto& c = census4(5).classes;
  if (c.size() != 1 || c[0] != canonicalize(SmallGraph::complete(5))) {
    return fail("enum(5,4): " + class_list(c));
  }
  return pass("|enum(5,4)|=1, K5");
}

Outcome order6_census(const VerifyContext& ctx) {
  const auto& c = census4(6).classes;
  if (c.size() != 1) return fail("enum(6,4): " + class_list(c));
  const auto& oct = ctx.graphs.at("octahedron");
  if (c[0] != oct.graph) return fail("census class is not the catalog octahedron; " + catalog_witness(oct));
  return pass("|enum(6,4)|=1");
}

Outcome order7_census(const VerifyContext& ctx) {
  const auto& c = census4(7).classes;
  if (c.size() != 2) return fail("enum(7,4): " + class_list(c));
  std::multiset<int> tri;
  for (const auto& g : c) tri.insert(triangle_count(g.graph()));
  if (tri != std::multiset<int>{6, 7}) return fail("triangle counts differ: " + class_list(c));
  for (const char* name : {"order7-seven-triangles", "order7-six-triangles"}) {
    const auto& ng = ctx.graphs.at(name);
    if (std::find(c.begin(), c.end(), ng.graph) == c.end()) {
      return fail(std::string(name) + " is not a census class; " + catalog_witness(ng));
    }
  }
  return pass("|enum(7,4)|=2, triangles {7, 6}");
}

Outcome order7_transitivity(const VerifyContext& ctx) {
  const auto& seven = ctx.graphs.at("order7-seven-triangles");
  const auto& six = ctx.graphs.at("order7-six-triangles");
  if (!is_vertex_transitive(seven.labeled)) {
    return fail("seven-triangle class is not vertex-transitive; " + catalog_witness(seven));
  }
  if (is_vertex_transitive(six.labeled)) {
    return fail("six-triangle class is vertex-transitive; " + catalog_witness(six));
  }
  return pass("seven-triangle class vertex-transitive, six-triangle class not");
}

Outcome k4_count(const VerifyContext& ctx, int n, std::vector<const char*> names) {
  const auto with_k4 = filter_by_clique(census4(n).classes, 4, 0);
  if (with_k4.size() != names.size()) {
    return fail(std::to_string(with_k4.size()) + " classes of enum(" + std::to_string(n) +
                ",4) contain K4: " + class_list(with_k4));
  }
  for (const char* name : names) {
    const auto& ng = ctx.graphs.at(name);
    if (std::find(with_k4.begin(), with_k4.end(), ng.graph) == with_k4.end()) {
      return fail(std::string(name) + " is not among them; " + catalog_witness(ng));
    }
  }
  return pass(std::to_string(names.size()) + " class" + (names.size() == 1 ? "" : "es") +
              " of enum(" + std::to_string(n) + ",4) with K4");
}

Outcome k4_free_small(const VerifyContext&) {
  for (int n : {6, 7}) {
    const auto bad = filter_by_clique(census4(n).classes, 4, 0);
    if (!bad.empty()) return fail("enum(" + std::to_string(n) + ",4) has K4: " + class_list(bad));
  }
  return pass("enum(6,4) and enum(7,4) are K4-free");
}

Outcome k5_regular_closure(const VerifyContext&) {
  std::string detail;
  for (int n = 5; n <= kMaxSmallOrder; ++n) {
    for (const auto& c : filter_by_clique(census4(n).classes, 5, 0)) {
      const auto g = c.graph();
      for (VertexMask comp : components(g)) {
        const auto part = g.induced(comp);
        if (part.order() != 5 || part.edge_count() != 10) {
          return fail("4-regular class with K5 that is not a union of K5s: " + witness(c));
        }
      }
      detail += (detail.empty() ? "" : ", ") + std::to_string(n / 5) + "K5";
    }
  }
  return pass("classes with K5 for n in 5..10: " + detail);
}

Outcome k5_free_middle(const VerifyContext&) {
  for (int n = 6; n <= 9; ++n) {
    const auto bad = filter_by_clique(census4(n).classes, 5, 0);
    if (!bad.empty()) return fail("enum(" + std::to_string(n) + ",4) has K5: " + class_list(bad));
  }
  return pass("enum(n,4), n in 6..9, K5-free");
}

Outcome palfy_oracle(const VerifyContext&) {
  std::size_t graphs = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      for (const auto& c : enumerate_regular(n, k).classes) {
        const auto g = c.graph();
        const bool want = palfy_by_triples(g);
        if (palfy_condition(g) != want || palfy_condition(relabel_with_primes(g)) != want) {
          return fail("palfy_condition disagrees with the triple scan on " + witness(c));
        }
        ++graphs;
      }
    }
  }
  return pass(std::to_string(graphs) + " census graphs agree");
}

// --- figure graphs ------------------------------------------------------------------

Outcome dominating(const VerifyContext& ctx, const char* name, int want) {
  const auto& ng = ctx.graphs.at(name);
  const int got = max_dominating_in_induced(ng.labeled, 5);
  if (got != want) {
    return fail(std::string(name) + ": max_dominating(5) = " + std::to_string(got) +
                ", expected " + std::to_string(want) + "; " + catalog_witness(ng));
  }
  return pass("max_dominating(5) = " + std::to_string(want));
}

Outcome two_complete_subgraph(const VerifyContext& ctx) {
  const auto& host = ctx.graphs.at("order9-k4-a");
  const auto& pat = ctx.graphs.at("two-complete-5");
  if (max_dominating_in_induced(pat.labeled, 5) != 2) {
    return fail("two-complete-5 does not have exactly 2 complete vertices; " + catalog_witness(pat));
  }
  if (!contains_subgraph(host.labeled, pat.labeled)) {
    return fail("order9-k4-a does not contain two-complete-5; " + catalog_witness(host));
  }
  return pass("order9-k4-a contains two-complete-5");
}

Outcome impossible_7_subgraph(const VerifyContext& ctx) {
  const auto& pat = ctx.graphs.at("impossible-7");
  for (const auto& c : census4(7).classes) {
    if (!contains_subgraph(c.graph(), pat.labeled)) {
      return fail("impossible-7 does not embed in " + witness(c) + "; " + catalog_witness(pat));
    }
  }
  return pass("impossible-7 embeds in both classes of enum(7,4)");
}

Outcome aut_mersenne_shape(const VerifyContext& ctx) {
  const auto& ng = ctx.graphs.at("aut-psl2-mersenne");
  // Vertices s, 2, x, y, h in that order.
  const auto& g = ng.labeled;
  if (g.degree(2) != 2 || g.degree(3) != 2 || g.degree(0) != 1) {
    return fail("expected deg(x)=deg(y)=2, deg(s)=1; " + catalog_witness(ng));
  }
  for (u64 f : {5u, 7u}) {
    const u64 q = u64{1} << f;
    if (!is_prime(q - 1) || prime_set(q + 1).size() != 2) {
      return fail("2^" + std::to_string(f) + " -/+ 1 is not a Mersenne prime and two-prime number");
    }
  }
  return pass("deg(x)=deg(y)=2, deg(s)=1; f = 5, 7 give Mersenne 2^f-1 and two-prime 2^f+1");
}

// --- product join ---------------------------------------------------------------------

Outcome product_join(const VerifyContext& ctx) {
  std::mt19937_64 rng(ctx.bounds.seed);
  const auto& pool = small_primes();
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto random_edges = [&](const std::vector<u64>& vs) {
    std::vector<PrimeEdge> e;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (rng() & 1u) e.emplace_back(vs[i], vs[j]);
    return e;
  };

  for (std::size_t trial = 0; trial < ctx.bounds.product_trials; ++trial) {
    std::vector<u64> shuffled(pool.begin(), pool.begin() + 14);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const std::size_t na = pick(1, 7);
    std::vector<u64> va(shuffled.begin(), shuffled.begin() + na);

    // b reuses some of a's primes and adds fresh ones that will form a clique.
    const std::size_t shared = pick(0, na);
    const std::size_t fresh = pick(shared == 0 ? 1 : 0, 5);
    std::vector<u64> vb(va.begin(), va.begin() + shared);
    vb.insert(vb.end(), shuffled.begin() + na, shuffled.begin() + na + fresh);

    auto eb = random_edges(vb);
    for (std::size_t i = shared; i < vb.size(); ++i)
      for (std::size_t j = i + 1; j < vb.size(); ++j) eb.emplace_back(vb[i], vb[j]);
    std::sort(eb.begin(), eb.end(), [](PrimeEdge x, PrimeEdge y) {
      return std::minmax(x.first, x.second) < std::minmax(y.first, y.second);
    });
    eb.erase(std::unique(eb.begin(), eb.end(),
                         [](PrimeEdge x, PrimeEdge y) {
                           return std::minmax(x.first, x.second) == std::minmax(y.first, y.second);
                         }),
             eb.end());

    const PrimeGraph a(PrimeSet(va), random_edges(va));
    const PrimeGraph b(PrimeSet(vb), eb);
    const auto prod = product_graph(a, b);
    const auto complete = complete_vertices(prod);
    if (complete.size() < b.order()) {
      return fail("trial " + std::to_string(trial) + " seed " + std::to_string(ctx.bounds.seed) +
                  ": a " + edges_text(a) + ", b " + edges_text(b) + ", only " +
                  std::to_string(complete.size()) + " complete vertices");
    }
  }
  return pass(std::to_string(ctx.bounds.product_trials) + " random pairs, seed " +
              std::to_string(ctx.bounds.seed));
}

std::vector<Claim> build_registry() {
  using V = VerifyContext;
  const std::vector<std::string> fig = {kTranscription};
  std::vector<Claim> c;
  c.push_back({"regular-simple-complete",
               "every k-regular prime graph (k >= 1) of a swept simple group is complete",
               {}, regular_simple_complete});
  c.push_back({"pent-shapes",
               "five-prime PSL2(q) graphs inside house or butterfly take one of three shapes",
               fig, pent_shapes});
  c.push_back({"huppert-3prime", "simple groups with exactly three prime divisors", {},
               huppert_3prime});
  c.push_back({"four-prime-cases", "four-prime PSL2 case detector", {}, four_prime_cases});
  c.push_back({"order-prime-sets", "pi(S) from the factor union matches pi(|S|)", {},
               order_prime_sets});
  c.push_back({"structural-agreement",
               "structure rules agree with graphs built from degree sets", {},
               structural_agreement});
  c.push_back({"degree-tables", "bundled degree tables satisfy sum m*d^2 = |G|", {}, degree_tables});
  c.push_back({"j1-data", "J1 degree set and maximal subgroup indices", {}, j1_data});
  c.push_back({"sz8-data", "Sz(8) maximal index prime sets", {}, sz8_data});
  c.push_back({"m11-degrees", "vertex degrees of the M11 prime graph", {}, [](const V& ctx) {
                 return degree_facts(ctx, "m11", {{2, 2}, {3, 1}, {5, 3}, {11, 2}},
                                     "deg(2)=deg(11)=2, deg(5)=3, deg(3)=1");
               }});
  c.push_back({"j1-deltadeg", "vertex degrees of the J1 prime graph", {}, [](const V& ctx) {
                 return degree_facts(ctx, "j1",
                                     {{2, 4}, {3, 2}, {5, 2}, {7, 3}, {11, 2}, {19, 3}},
                                     "deg(2)=4, deg(7)=deg(19)=3, deg(3)=deg(5)=deg(11)=2");
               }});
  c.push_back({"order5-census", "4-regular graphs on 5 vertices", {}, order5_census});
  c.push_back({"order6-census", "4-regular graphs on 6 vertices", fig, order6_census});
  c.push_back({"order7-census", "4-regular graphs on 7 vertices and their triangles", fig,
               order7_census});
  c.push_back({"order7-vertex-transitivity",
               "vertex transitivity of the two 4-regular graphs on 7 vertices", fig,
               order7_transitivity});
  c.push_back({"order8-k4-count", "4-regular graphs on 8 vertices containing K4", fig,
               [](const V& ctx) { return k4_count(ctx, 8, {"order8-k4"}); }});
  c.push_back({"order9-k4-count", "4-regular graphs on 9 vertices containing K4", fig,
               [](const V& ctx) { return k4_count(ctx, 9, {"order9-k4-a", "order9-k4-b"}); }});
  c.push_back({"k4-free-order6-7", "4-regular graphs on 6 and 7 vertices avoid K4", {},
               k4_free_small});
  c.push_back({"k5-free-order6-9", "4-regular graphs on 6 to 9 vertices avoid K5", {},
               k5_free_middle});
  c.push_back({"k5-regular-closure", "a 4-regular graph containing K5 is a union of K5s", {},
               k5_regular_closure});
  c.push_back({"dominating-order7-seven-triangles", "5-subsets have at most one complete vertex",
               fig, [](const V& ctx) { return dominating(ctx, "order7-seven-triangles", 1); }});
  c.push_back({"dominating-order7-six-triangles", "5-subsets have at most two complete vertices",
               fig, [](const V& ctx) { return dominating(ctx, "order7-six-triangles", 2); }});
  c.push_back({"dominating-octahedron", "5-subsets have at most one complete vertex", fig,
               [](const V& ctx) { return dominating(ctx, "octahedron", 1); }});
  c.push_back({"dominating-order8-k4", "5-subsets have at most one complete vertex", fig,
               [](const V& ctx) { return dominating(ctx, "order8-k4", 1); }});
  c.push_back({"dominating-order9-k4-a", "some 5-subset has two complete vertices", fig,
               [](const V& ctx) { return dominating(ctx, "order9-k4-a", 2); }});
  c.push_back({"dominating-order9-k4-b", "5-subsets have at most one complete vertex", fig,
               [](const V& ctx) { return dominating(ctx, "order9-k4-b", 1); }});
  c.push_back({"two-complete-subgraph",
               "the nine-vertex K4 graph with a two-complete 5-subset contains that subgraph", fig,
               two_complete_subgraph});
  c.push_back({"impossible-7-subgraph", "the excluded 7-vertex pattern embeds in both order-7 classes",
               fig, impossible_7_subgraph});
  c.push_back({"aut-mersenne-shape", "degrees in the Aut(PSL2(2^f)) graph for f = 5, 7", fig,
               aut_mersenne_shape});
  c.push_back({"product-join",
               "complete vertices of a direct-product graph when the new primes form a clique", {},
               product_join});
  c.push_back({"palfy-oracle", "palfy_condition agrees with a triple scan on census graphs", {},
               palfy_oracle});
  return c;
}

ClaimResult evaluate(const Claim& claim, const VerifyContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = claim.check(ctx);
  } catch (const std::exception& e) {
    out = fail(std::string("exception: ") + e.what());
  }
  return {claim.id, out.status, out.detail, std::chrono::steady_clock::now() - start, claim.tags};
}

}  // namespace

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

void SweepBounds::validate() const {
  auto check = [](bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::invalid_argument, "bound out of range: " + what);
  };
  check(psl2_max_q >= 4 && psl2_max_q <= 10'000'000, "psl2=" + std::to_string(psl2_max_q));
  check(suzuki_max_q_squared >= 8 && suzuki_max_q_squared <= (u64{1} << 31),
        "suzuki=" + std::to_string(suzuki_max_q_squared));
  check(psl3_max_q >= 2 && psl3_max_q <= 1'000'000, "psl3=" + std::to_string(psl3_max_q));
  check(psu3_max_q >= 3 && psu3_max_q <= 1'000'000, "psu3=" + std::to_string(psu3_max_q));
  check(product_trials <= 10'000'000, "trials=" + std::to_string(product_trials));
}

SweepBounds SweepBounds::parse(std::string_view text, SweepBounds base) {
  for (const auto& item : detail::split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::invalid_argument, "bound `" + item + "` is not key=value");
    }
    const auto key = detail::trim(std::string_view(item).substr(0, eq));
    const u64 value = detail::parse_u64(detail::trim(std::string_view(item).substr(eq + 1)),
                                        "bound `" + item + "`");
    if (key == "psl2") base.psl2_max_q = value;
    else if (key == "suzuki") base.suzuki_max_q_squared = value;
    else if (key == "psl3") base.psl3_max_q = value;
    else if (key == "psu3") base.psu3_max_q = value;
    else if (key == "trials") base.product_trials = static_cast<std::size_t>(value);
    else if (key == "seed") base.seed = value;
    else throw Error(Errc::invalid_argument, "unknown bound `" + std::string(key) + "`");
  }
  base.validate();
  return base;
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](const ClaimResult& r) { return r.status == s; }));
}

const std::vector<Claim>& registered_claims() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

Report run_all(const SweepBounds& bounds, unsigned jobs, const GroupCatalog& groups,
               const GraphCatalog& graphs) {
  bounds.validate();
  const auto& claims = registered_claims();
  const VerifyContext ctx{bounds, groups, graphs};
  std::vector<ClaimResult> results(claims.size());

  // Warm the shared census cache before fanning out.
  census4(kMaxSmallOrder);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < claims.size(); i = next++) results[i] = evaluate(claims[i], ctx);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(claims.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  return {bounds, std::move(results)};
}

ClaimResult run_one(std::string_view id, const SweepBounds& bounds, const GroupCatalog& groups,
                    const GraphCatalog& graphs) {
  bounds.validate();
  for (const auto& claim : registered_claims()) {
    if (claim.id == id) return evaluate(claim, {bounds, groups, graphs});
  }
  throw Error(Errc::unknown_claim, "unknown claim `" + std::string(id) + "`");
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& r : report.claims) {
    claims.push_back({{"id", r.id},
                      {"status", to_string(r.status)},
                      {"detail", r.detail},
                      {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
                      {"tags", r.tags}});
  }
  const auto& b = report.bounds;
  return {{"bounds",
           {{"psl2", b.psl2_max_q},
            {"suzuki", b.suzuki_max_q_squared},
            {"psl3", b.psl3_max_q},
            {"psu3", b.psu3_max_q},
            {"trials", b.product_trials},
            {"seed", b.seed}}},
          {"claims", claims},
          {"passed", report.count(Status::pass)},
          {"failed", report.count(Status::fail)},
          {"skipped", report.count(Status::skipped)}};
}

std::string to_table(const Report& report) {
  std::size_t width = 2;
  for (const auto& r : report.claims) width = std::max(width, r.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "id" << "  status  " << std::right
     << std::setw(9) << "ms" << "  detail\n";
  for (const auto& r : report.claims) {
    os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(6)
       << to_string(r.status) << "  " << std::right << std::setw(9) << std::fixed
       << std::setprecision(1) << std::chrono::duration<double, std::milli>(r.elapsed).count()
       << "  " << r.detail << "\n";
  }
  os << report.count(Status::pass) << " passed, " << report.count(Status::fail) << " failed, "
     << report.count(Status::skipped) << " skipped\n";
  return os.str();
}

}  // namespace degraph
