#include "degraph/prime_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "degraph/error.hpp"

namespace degraph {

namespace {

using Row = std::uint64_t;

Row bit(std::size_t i) { return Row{1} << i; }

Row all_bits(std::size_t n) { return n == 64 ? ~Row{0} : bit(n) - 1; }

bool clique_search(const std::vector<Row>& rows, Row candidates, std::size_t need) {
  if (need == 0) return true;
  while (candidates) {
    if (static_cast<std::size_t>(std::popcount(candidates)) < need) return false;
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= ~bit(v);
    if (clique_search(rows, candidates & rows[v], need - 1)) return true;
  }
  return false;
}

PrimeGraph psl2_structure(u64 q) {
  const auto [p, f] = *as_prime_power(q);
  const PrimeSet minus = prime_set(q - 1);
  const PrimeSet plus = prime_set(q + 1);
  const PrimeSet vertices = PrimeSet{p} | minus | plus;

  std::vector<PrimeEdge> edges;
  auto clique = [&](const PrimeSet& s) {
    for (auto a = s.begin(); a != s.end(); ++a) {
      for (auto b = std::next(a); b != s.end(); ++b) edges.emplace_back(*a, *b);
    }
  };
  if (p == 2) {
    clique(minus);
    clique(plus);
  } else if (is_power_of_two(q - 1) || is_power_of_two(q + 1)) {
    clique(minus | plus);
  } else {
    clique(minus);
    clique(plus);
  }
  return PrimeGraph(vertices, edges);
}

// pi(S) \ {p} complete; p joined to the primes of `linked`.
PrimeGraph clique_plus_vertex(u64 p, const PrimeSet& rest, const PrimeSet& linked) {
  std::vector<PrimeEdge> edges;
  for (auto a = rest.begin(); a != rest.end(); ++a) {
    for (auto b = std::next(a); b != rest.end(); ++b) edges.emplace_back(*a, *b);
  }
  for (u64 r : linked) edges.emplace_back(p, r);
  return PrimeGraph(PrimeSet{p} | rest, edges);
}

}  // namespace

// --- PrimeGraph -----------------------------------------------------------------

PrimeGraph::PrimeGraph(PrimeSet vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() > kMaxVertices) {
    throw Error(Errc::invalid_argument, "prime graph with more than 64 vertices");
  }
  rows_.assign(vertices_.size(), 0);
}

PrimeGraph::PrimeGraph(PrimeSet vertices, const std::vector<PrimeEdge>& edges)
    : PrimeGraph(std::move(vertices)) {
  for (const auto& [p, q] : edges) {
    if (p == q) throw Error(Errc::invalid_argument, "loop at " + std::to_string(p));
    connect(index(p), index(q));
  }
}

PrimeGraph PrimeGraph::complete(PrimeSet vertices) {
  PrimeGraph g(std::move(vertices));
  for (std::size_t i = 0; i < g.order(); ++i) g.rows_[i] = all_bits(g.order()) & ~bit(i);
  return g;
}

std::size_t PrimeGraph::index(u64 p) const {
  const auto i = vertices_.index_of(p);
  if (i == vertices_.size()) {
    throw Error(Errc::invalid_argument, std::to_string(p) + " is not a vertex of " +
                                            vertices_.to_string());
  }
  return i;
}

void PrimeGraph::connect(std::size_t i, std::size_t j) {
  rows_[i] |= bit(j);
  rows_[j] |= bit(i);
}

std::size_t PrimeGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (Row r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

bool PrimeGraph::adjacent(u64 p, u64 q) const { return (rows_[index(p)] >> index(q)) & 1u; }

std::size_t PrimeGraph::degree(u64 p) const {
  return static_cast<std::size_t>(std::popcount(rows_[index(p)]));
}

PrimeSet PrimeGraph::neighbors(u64 p) const {
  const Row r = rows_[index(p)];
  std::vector<u64> out;
  for (std::size_t j = 0; j < order(); ++j) {
    if (r & bit(j)) out.push_back(vertices_.primes()[j]);
  }
  return PrimeSet(std::move(out));
}

std::vector<PrimeEdge> PrimeGraph::edges() const {
  std::vector<PrimeEdge> out;
  const auto& vs = vertices_.primes();
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = i + 1; j < order(); ++j) {
      if (rows_[i] & bit(j)) out.emplace_back(vs[i], vs[j]);
    }
  }
  return out;
}

SmallGraph PrimeGraph::to_small_graph() const {
  if (order() > static_cast<std::size_t>(kMaxSmallOrder)) {
    throw Error(Errc::invalid_argument,
                "prime graph on " + std::to_string(order()) + " vertices is too large for shape "
                "comparison (max " + std::to_string(kMaxSmallOrder) + ")");
  }
  SmallGraph g(static_cast<int>(order()));
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = i + 1; j < order(); ++j) {
      if (rows_[i] & bit(j)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

PrimeGraph PrimeGraph::induced(const PrimeSet& subset) const {
  std::vector<PrimeEdge> es;
  for (const auto& e : edges()) {
    if (subset.contains(e.first) && subset.contains(e.second)) es.push_back(e);
  }
  for (u64 p : subset) index(p);
  return PrimeGraph(subset, es);
}

// --- constructions --------------------------------------------------------------

PrimeGraph graph_from_degrees(const DegreeSet& cd) {
  std::vector<PrimeEdge> edges;
  for (u64 d : cd) {
    const auto ps = prime_set(d);
    for (auto a = ps.begin(); a != ps.end(); ++a) {
      for (auto b = std::next(a); b != ps.end(); ++b) edges.emplace_back(*a, *b);
    }
  }
  return PrimeGraph(cd.primes(), edges);
}

PrimeGraph structural_graph(const GroupSpec& spec, const GroupCatalog& catalog) {
  const u64 q = spec.parameter;
  switch (spec.family) {
    case Family::psl2:
      return psl2_structure(q == 5 ? 4 : q);

    case Family::suzuki: {
      const PrimeSet rest = prime_set(q - 1) | prime_set(checked_add(checked_mul(q, q), 1));
      return clique_plus_vertex(2, rest, prime_set(q - 1));
    }

    case Family::psl3: {
      if (q == 2) return psl2_structure(7);
      if (q == 4) return graph_from_degrees(character_degrees(spec, catalog));
      const u64 p = as_prime_power(q)->prime;
      const PrimeSet cyclotomic = prime_set(checked_add(checked_mul(q, q), q + 1));
      const PrimeSet rest = prime_set(q - 1) | prime_set(q + 1) | cyclotomic;
      if (is_2_3_smooth(q - 1, 1)) return PrimeGraph::complete(PrimeSet{p} | rest);
      return clique_plus_vertex(p, rest, prime_set(q + 1) | cyclotomic);
    }

    case Family::psu3: {
      const u64 p = as_prime_power(q)->prime;
      const PrimeSet cyclotomic = prime_set(checked_add(checked_mul(q, q) - q, 1));
      const PrimeSet rest = prime_set(q - 1) | prime_set(q + 1) | cyclotomic;
      if (is_2_3_smooth(q + 1, 0)) return PrimeGraph::complete(PrimeSet{p} | rest);
      return clique_plus_vertex(p, rest, prime_set(q - 1) | cyclotomic);
    }

    case Family::alternating:
    case Family::sporadic:
      break;
  }
  throw Error(Errc::unsupported, "no structural rule for " + spec.to_string() +
                                     "; use its bundled degree table");
}

PrimeGraph prime_graph_of(const GroupSpec& spec, const GroupCatalog& catalog) {
  const auto c = canonical(spec);
  if (catalog.table_for(c) || c.family == Family::psl2) {
    return graph_from_degrees(character_degrees(c, catalog));
  }
  return structural_graph(spec, catalog);
}

PrimeGraph product_graph(const PrimeGraph& a, const PrimeGraph& b) {
  auto edges = a.edges();
  const auto eb = b.edges();
  edges.insert(edges.end(), eb.begin(), eb.end());
  for (u64 p : a.vertices()) {
    for (u64 q : b.vertices()) {
      if (p != q) edges.emplace_back(p, q);
    }
  }
  return PrimeGraph(a.vertices() | b.vertices(), edges);
}

// --- predicates -----------------------------------------------------------------

std::optional<std::size_t> regular_degree(const PrimeGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const auto seq = degree_sequence(g);
  const auto k = seq.front().degree;
  for (const auto& vd : seq) {
    if (vd.degree != k) return std::nullopt;
  }
  return k;
}

bool is_k_regular(const PrimeGraph& g, std::size_t k) {
  for (u64 p : g.vertices()) {
    if (g.degree(p) != k) return false;
  }
  return true;
}

bool is_complete(const PrimeGraph& g) {
  return g.order() == 0 || is_k_regular(g, g.order() - 1);
}

std::vector<PrimeSet> connected_components(const PrimeGraph& g) {
  std::vector<PrimeSet> out;
  PrimeSet seen;
  for (u64 start : g.vertices()) {
    if (seen.contains(start)) continue;
    PrimeSet comp{start};
    std::deque<u64> queue{start};
    while (!queue.empty()) {
      const u64 v = queue.front();
      queue.pop_front();
      for (u64 w : g.neighbors(v)) {
        if (!comp.contains(w)) {
          comp |= PrimeSet{w};
          queue.push_back(w);
        }
      }
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool contains_clique(const PrimeGraph& g, std::size_t k) {
  std::vector<Row> rows;
  for (u64 p : g.vertices()) {
    Row r = 0;
    for (u64 q : g.neighbors(p)) r |= bit(g.vertices().index_of(q));
    rows.push_back(r);
  }
  return clique_search(rows, all_bits(g.order()), k);
}

bool is_clique_free(const PrimeGraph& g, std::size_t k) { return !contains_clique(g, k); }

std::vector<VertexDegree> degree_sequence(const PrimeGraph& g) {
  std::vector<VertexDegree> out;
  for (u64 p : g.vertices()) out.push_back({p, g.degree(p)});
  return out;
}

std::vector<ComponentDiameter> diameter_per_component(const PrimeGraph& g) {
  std::vector<ComponentDiameter> out;
  for (auto& comp : connected_components(g)) {
    std::size_t diameter = 0;
    for (u64 s : comp) {
      // BFS eccentricity of s.
      std::vector<std::pair<u64, std::size_t>> frontier{{s, 0}};
      PrimeSet seen{s};
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        const auto [v, d] = frontier[i];
        diameter = std::max(diameter, d);
        for (u64 w : g.neighbors(v)) {
          if (!seen.contains(w)) {
            seen |= PrimeSet{w};
            frontier.emplace_back(w, d + 1);
          }
        }
      }
    }
    out.push_back({std::move(comp), diameter});
  }
  return out;
}

PrimeSet complete_vertices(const PrimeGraph& g) {
  std::vector<u64> out;
  for (u64 p : g.vertices()) {
    if (g.degree(p) + 1 == g.order()) out.push_back(p);
  }
  return PrimeSet(std::move(out));
}

bool palfy_condition(const PrimeGraph& g) {
  const auto& vs = g.vertices().primes();
  const std::size_t n = vs.size();
  std::vector<Row> non(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !g.adjacent(vs[i], vs[j])) non[i] |= bit(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((non[i] & bit(j)) && (non[i] & non[j])) return false;
    }
  }
  return true;
}

bool palfy_bound(std::size_t a, std::size_t b) {
  const std::size_t lo = std::min(a, b), hi = std::max(a, b);
  if (lo >= 63) return false;
  return static_cast<u64>(hi) >= (u64{1} << lo) - 1;
}

bool palfy_bound(const PrimeGraph& g) {
  const auto comps = connected_components(g);
  if (comps.size() != 2) return true;
  return palfy_bound(comps[0].size(), comps[1].size());
}

// --- serialization --------------------------------------------------------------

std::string to_dot(const PrimeGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (u64 p : g.vertices()) os << "  " << p << ";\n";
  for (const auto& [p, q] : g.edges()) os << "  " << p << " -- " << q << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_edgelist(const PrimeGraph& g) {
  std::ostringstream os;
  os << "# vertices";
  for (u64 p : g.vertices()) os << ' ' << p;
  os << '\n';
  for (const auto& [p, q] : g.edges()) os << p << ' ' << q << '\n';
  return os.str();
}

nlohmann::json to_json(const PrimeGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices().primes();
  auto edges = nlohmann::json::array();
  for (const auto& [p, q] : g.edges()) edges.push_back({p, q});
  j["edges"] = std::move(edges);
  return j;
}

PrimeGraph prime_graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<u64> vertices = j.at("vertices").get<std::vector<u64>>();
    std::vector<PrimeEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(Errc::parse_error, "edge entries must be [p, q] pairs");
      }
      edges.emplace_back(e[0].get<u64>(), e[1].get<u64>());
    }
    return PrimeGraph(PrimeSet(std::move(vertices)), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::parse_error, std::string("prime graph JSON: ") + ex.what());
  }
}

std::string to_json_string(const PrimeGraph& g) { return to_json(g).dump(); }

}  // namespace degraph
