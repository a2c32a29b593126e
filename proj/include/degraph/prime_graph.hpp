#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "degraph/arithmetic.hpp"
#include "degraph/groups.hpp"
#include "degraph/small_graph.hpp"

namespace degraph {

using PrimeEdge = std::pair<u64, u64>;

/// Simple graph whose vertices are primes. Vertex i is the i-th smallest
/// prime of `vertices()`; adjacency is symmetric and irreflexive.
class PrimeGraph {
 public:
  /// Largest vertex count representable by the adjacency bitmasks.
  static constexpr std::size_t kMaxVertices = 64;

  PrimeGraph() = default;
  explicit PrimeGraph(PrimeSet vertices);
  PrimeGraph(PrimeSet vertices, const std::vector<PrimeEdge>& edges);

  static PrimeGraph complete(PrimeSet vertices);

  const PrimeSet& vertices() const noexcept { return vertices_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept;

  bool adjacent(u64 p, u64 q) const;
  std::size_t degree(u64 p) const;
  PrimeSet neighbors(u64 p) const;
  /// Edges (p, q) with p < q, in lexicographic order.
  std::vector<PrimeEdge> edges() const;

  /// Labeled copy on 0..n-1 (vertex i = i-th smallest prime). Needs n <= 10.
  SmallGraph to_small_graph() const;
  PrimeGraph induced(const PrimeSet& subset) const;

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;

 private:
  std::size_t index(u64 p) const;
  void connect(std::size_t i, std::size_t j);

  PrimeSet vertices_;
  std::vector<std::uint64_t> rows_;
};

/// Delta(G) from cd(G): vertices are the primes dividing some degree, p ~ q
/// iff pq divides some degree.
PrimeGraph graph_from_degrees(const DegreeSet& cd);

/// Delta(S) for the Lie-type families from the structure rules on pi(S)
/// instead of a degree list.
///  - PSL2(q), q even: components {2}, pi(q-1), pi(q+1), each complete.
///  - PSL2(q), q odd > 5: {p} isolated; on pi(q^2-1), r ~ s iff both divide
///    q-1 or both divide q+1 (complete when q-1 or q+1 is a power of 2).
///  - Sz(q^2): pi(S) \ {2} complete, 2 adjacent exactly to pi(q^2-1).
///  - PSL3(q): pi(S) \ {p} complete, p adjacent to the primes of q+1 and
///    q^2+q+1; complete when q-1 = 2^i 3^j with i >= 1.
///  - PSU3(q): pi(S) \ {p} complete, p adjacent to the primes of q-1 and
///    q^2-q+1; complete when q+1 = 2^i 3^j with i, j >= 0.
/// PSL2(5) ~ PSL2(4) and PSL3(2) ~ PSL2(7) use the rule of their isomorphic
/// twin; PSL3(4) is read from its bundled degree table. Alternating and
/// sporadic specs throw Errc::unsupported.
PrimeGraph structural_graph(const GroupSpec& spec, const GroupCatalog& catalog);

/// Delta(S) by the route that applies: degree formula or table where
/// available, structure rules otherwise.
PrimeGraph prime_graph_of(const GroupSpec& spec, const GroupCatalog& catalog);

/// Delta(G x H) from Delta(G) and Delta(H): union of both edge sets plus every
/// pair p in V(a), q in V(b) with p != q.
PrimeGraph product_graph(const PrimeGraph& a, const PrimeGraph& b);

// Predicates ----------------------------------------------------------------

bool is_k_regular(const PrimeGraph& g, std::size_t k);
/// Common degree if the graph is regular; nullopt for irregular or empty graphs.
std::optional<std::size_t> regular_degree(const PrimeGraph& g);
bool is_complete(const PrimeGraph& g);
std::vector<PrimeSet> connected_components(const PrimeGraph& g);
bool contains_clique(const PrimeGraph& g, std::size_t k);
bool is_clique_free(const PrimeGraph& g, std::size_t k);

struct VertexDegree {
  u64 prime;
  std::size_t degree;
  friend bool operator==(const VertexDegree&, const VertexDegree&) = default;
};
/// Degrees in vertex order.
std::vector<VertexDegree> degree_sequence(const PrimeGraph& g);

struct ComponentDiameter {
  PrimeSet component;
  std::size_t diameter;
};
std::vector<ComponentDiameter> diameter_per_component(const PrimeGraph& g);

/// Vertices adjacent to every other vertex.
PrimeSet complete_vertices(const PrimeGraph& g);

/// Every three vertices span at least one edge.
bool palfy_condition(const PrimeGraph& g);

/// Size bound for a disconnected solvable prime graph with components of
/// sizes a and b: max(a, b) >= 2^min(a, b) - 1.
bool palfy_bound(std::size_t a, std::size_t b);
/// palfy_bound on the two component sizes; true for graphs that do not have
/// exactly two components.
bool palfy_bound(const PrimeGraph& g);

// Serialization ---------------------------------------------------------------

std::string to_dot(const PrimeGraph& g, const std::string& name = "Delta");
/// Header line `# vertices ...` followed by one `p q` line per edge.
std::string to_edgelist(const PrimeGraph& g);
/// {"edges":[[p,q],...],"vertices":[...]}, vertices ascending, edges
/// lexicographic.
nlohmann::json to_json(const PrimeGraph& g);
PrimeGraph prime_graph_from_json(const nlohmann::json& j);
std::string to_json_string(const PrimeGraph& g);

}  // namespace degraph
