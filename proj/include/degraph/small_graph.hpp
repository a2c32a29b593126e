#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace degraph {

/// Largest order handled by the exhaustive canonical-form and embedding
/// searches.
inline constexpr int kMaxSmallOrder = 10;

using VertexMask = std::uint16_t;

/// Labeled simple graph on vertices 0..n-1, n <= 10, stored as adjacency
/// bitmasks.
class SmallGraph {
 public:
  SmallGraph() = default;
  explicit SmallGraph(int n);
  SmallGraph(int n, const std::vector<std::pair<int, int>>& edges);

  static SmallGraph complete(int n);
  static SmallGraph cycle(int n);

  int order() const noexcept { return n_; }
  VertexMask row(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  VertexMask all() const noexcept { return static_cast<VertexMask>((1u << n_) - 1); }
  bool adjacent(int u, int v) const noexcept { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int v) const noexcept;
  int edge_count() const noexcept;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  SmallGraph complement() const;
  /// Relabels so that new vertex i is old vertex perm[i].
  SmallGraph permuted(const std::vector<int>& perm) const;
  SmallGraph induced(VertexMask subset) const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxSmallOrder> rows_{};
};

/// Isomorphism class of a graph on at most 10 vertices. `code` packs the
/// upper triangle of the canonical adjacency matrix column by column,
/// (0,1),(0,2),(1,2),(0,3),... with the first pair in the most significant
/// position; the canonical labeling is the one minimizing that bit string.
struct GraphClass {
  int n = 0;
  std::uint64_t code = 0;

  SmallGraph graph() const;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
  friend auto operator<=>(const GraphClass&, const GraphClass&) = default;
};

/// Packs `g` under the identity labeling using the GraphClass bit layout.
std::uint64_t adjacency_code(const SmallGraph& g);

/// Lexicographically minimal labeling. Throws for n > 10.
GraphClass canonicalize(const SmallGraph& g);

bool isomorphic(const SmallGraph& a, const SmallGraph& b);

int triangle_count(const SmallGraph& g);
bool contains_clique(const SmallGraph& g, int k);
bool is_regular(const SmallGraph& g, int k);

/// Orbits of the automorphism group, as a vertex -> orbit-representative map
/// (the representative is the least vertex of the orbit).
std::vector<int> automorphism_orbits(const SmallGraph& g);
bool is_vertex_transitive(const SmallGraph& g);
/// Automorphism count by exhaustive search.
std::uint64_t automorphism_count(const SmallGraph& g);

/// `pattern` embeds into `host` injectively, preserving edges (and, for the
/// induced variant, non-edges).
bool contains_subgraph(const SmallGraph& host, const SmallGraph& pattern);
bool contains_induced(const SmallGraph& host, const SmallGraph& pattern);

/// Vertices of `subset` adjacent to every other vertex of `subset`.
VertexMask dominating_vertices(const SmallGraph& g, VertexMask subset);

/// Max over all m-vertex subsets of the number of vertices adjacent to the
/// other m-1.
int max_dominating_in_induced(const SmallGraph& g, int m);

/// Complement is triangle-free: every three vertices span at least one edge.
bool palfy_condition(const SmallGraph& g);

std::string to_edge_string(const SmallGraph& g);

}  // namespace degraph

template <>
struct std::hash<degraph::GraphClass> {
  std::size_t operator()(const degraph::GraphClass& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.code * 31u + static_cast<std::uint64_t>(c.n));
  }
};
