#include "degraph/small_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "degraph/error.hpp"

namespace degraph {

namespace {

VertexMask bit(int v) { return static_cast<VertexMask>(1u << v); }

void check_order(int n) {
  if (n < 0 || n > kMaxSmallOrder) {
    throw Error(Errc::invalid_argument, "graph order " + std::to_string(n) +
                                            " outside 0.." + std::to_string(kMaxSmallOrder));
  }
}

// Branch and bound over labelings. At each position only the candidates that
// minimize the next column of the code can lead to the minimum, and twin
// vertices (same neighborhood apart from each other) are interchangeable.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SmallGraph& g)
      : g_(g), n_(g.order()), bits_(n_ * (n_ - 1) / 2) {}

  GraphClass run() {
    if (n_ <= 1) return {n_, 0};
    descend(0, 0);
    return {n_, best_};
  }

 private:
  bool twins(int u, int w) const {
    return (g_.row(u) & ~bit(w)) == (g_.row(w) & ~bit(u));
  }

  void descend(int pos, std::uint64_t code) {
    if (pos == n_) {
      if (!have_best_ || code < best_) {
        best_ = code;
        have_best_ = true;
      }
      return;
    }

    std::array<int, kMaxSmallOrder> cands{};
    int count = 0;
    std::uint64_t min_chunk = std::numeric_limits<std::uint64_t>::max();
    for (int v = 0; v < n_; ++v) {
      if (used_ & bit(v)) continue;
      std::uint64_t chunk = 0;
      for (int i = 0; i < pos; ++i) chunk = (chunk << 1) | (g_.adjacent(perm_[i], v) ? 1u : 0u);
      if (chunk < min_chunk) {
        min_chunk = chunk;
        count = 0;
      }
      if (chunk == min_chunk) cands[static_cast<std::size_t>(count++)] = v;
    }

    const std::uint64_t next = (code << pos) | min_chunk;
    if (have_best_) {
      const int done = pos * (pos + 1) / 2;
      const std::uint64_t prefix = best_ >> (bits_ - done);
      if (next > prefix) return;
    }

    for (int c = 0; c < count; ++c) {
      const int v = cands[static_cast<std::size_t>(c)];
      bool redundant = false;
      for (int e = 0; e < c && !redundant; ++e) {
        redundant = twins(cands[static_cast<std::size_t>(e)], v);
      }
      if (redundant) continue;
      perm_[static_cast<std::size_t>(pos)] = v;
      used_ |= bit(v);
      descend(pos + 1, next);
      used_ &= static_cast<VertexMask>(~bit(v));
    }
  }

  const SmallGraph& g_;
  int n_;
  int bits_;
  std::array<int, kMaxSmallOrder> perm_{};
  VertexMask used_ = 0;
  bool have_best_ = false;
  std::uint64_t best_ = 0;
};

// Backtracking search for isomorphisms `from` -> `to`. Pattern vertices are
// placed in `order`; `pinned` optionally forces the image of one vertex.
class MapSearch {
 public:
  enum class Mode { isomorphism, subgraph, induced };

  MapSearch(const SmallGraph& from, const SmallGraph& to, Mode mode)
      : from_(from), to_(to), mode_(mode) {
    order_.resize(static_cast<std::size_t>(from.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return from.degree(a) > from.degree(b); });
    image_.assign(static_cast<std::size_t>(from.order()), -1);
  }

  void pin(int u, int v) {
    pinned_from_ = u;
    pinned_to_ = v;
    auto it = std::find(order_.begin(), order_.end(), u);
    std::rotate(order_.begin(), it, it + 1);
  }

  bool find() {
    count_only_ = false;
    return extend(0);
  }

  std::uint64_t count() {
    count_only_ = true;
    found_ = 0;
    extend(0);
    return found_;
  }

  const std::vector<int>& image() const { return image_; }

 private:
  bool compatible(int u, int t) const {
    const int du = from_.degree(u), dt = to_.degree(t);
    if (du > dt || (mode_ == Mode::isomorphism && du != dt)) return false;
    for (std::size_t k = 0; k < image_.size(); ++k) {
      const int w = image_[k];
      if (w < 0) continue;
      const bool e_from = from_.adjacent(u, static_cast<int>(k));
      const bool e_to = to_.adjacent(t, w);
      if (mode_ == Mode::subgraph ? (e_from && !e_to) : (e_from != e_to)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      ++found_;
      return !count_only_;
    }
    const int u = order_[depth];
    for (int t = 0; t < to_.order(); ++t) {
      if (used_ & bit(t)) continue;
      if (u == pinned_from_ && t != pinned_to_) continue;
      if (!compatible(u, t)) continue;
      image_[static_cast<std::size_t>(u)] = t;
      used_ |= bit(t);
      const bool done = extend(depth + 1);
      used_ &= static_cast<VertexMask>(~bit(t));
      if (done) return true;
      image_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const SmallGraph& from_;
  const SmallGraph& to_;
  Mode mode_;
  std::vector<int> order_;
  std::vector<int> image_;
  VertexMask used_ = 0;
  int pinned_from_ = -1;
  int pinned_to_ = -1;
  bool count_only_ = false;
  std::uint64_t found_ = 0;
};

}  // namespace

// --- SmallGraph ---------------------------------------------------------------

SmallGraph::SmallGraph(int n) : n_(n) { check_order(n); }

SmallGraph::SmallGraph(int n, const std::vector<std::pair<int, int>>& edges) : SmallGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

SmallGraph SmallGraph::complete(int n) {
  SmallGraph g(n);
  for (int v = 0; v < n; ++v) g.rows_[static_cast<std::size_t>(v)] = g.all() & ~bit(v);
  return g;
}

SmallGraph SmallGraph::cycle(int n) {
  SmallGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

int SmallGraph::degree(int v) const noexcept {
  return std::popcount(static_cast<unsigned>(rows_[static_cast<std::size_t>(v)]));
}

int SmallGraph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void SmallGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw Error(Errc::invalid_argument, "bad edge " + std::to_string(u) + "-" +
                                            std::to_string(v) + " on " + std::to_string(n_) +
                                            " vertices");
  }
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void SmallGraph::remove_edge(int u, int v) {
  rows_[static_cast<std::size_t>(u)] &= static_cast<VertexMask>(~bit(v));
  rows_[static_cast<std::size_t>(v)] &= static_cast<VertexMask>(~bit(u));
}

SmallGraph SmallGraph::complement() const {
  SmallGraph g(n_);
  for (int v = 0; v < n_; ++v) {
    g.rows_[static_cast<std::size_t>(v)] = all() & ~rows_[static_cast<std::size_t>(v)] & ~bit(v);
  }
  return g;
}

SmallGraph SmallGraph::permuted(const std::vector<int>& perm) const {
  SmallGraph g(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

SmallGraph SmallGraph::induced(VertexMask subset) const {
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v) {
    if (subset & bit(v)) keep.push_back(v);
  }
  SmallGraph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

// --- canonical forms ------------------------------------------------------------

std::uint64_t adjacency_code(const SmallGraph& g) {
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  }
  return code;
}

SmallGraph GraphClass::graph() const {
  SmallGraph g(n);
  int shift = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --shift;
      if ((code >> shift) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

GraphClass canonicalize(const SmallGraph& g) { return CanonicalSearch(g).run(); }

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonicalize(a) == canonicalize(b);
}

// --- invariants -----------------------------------------------------------------

int triangle_count(const SmallGraph& g) {
  int count = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      const unsigned common = g.row(u) & g.row(v) & ~((2u << v) - 1);
      count += std::popcount(common);
    }
  }
  return count;
}

namespace {
bool clique_from(const SmallGraph& g, VertexMask candidates, int need) {
  if (need == 0) return true;
  while (candidates) {
    if (std::popcount(static_cast<unsigned>(candidates)) < need) return false;
    const int v = std::countr_zero(static_cast<unsigned>(candidates));
    candidates &= static_cast<VertexMask>(~bit(v));
    if (clique_from(g, candidates & g.row(v), need - 1)) return true;
  }
  return false;
}
}  // namespace

bool contains_clique(const SmallGraph& g, int k) {
  if (k <= 0) return true;
  return clique_from(g, g.all(), k);
}

bool is_regular(const SmallGraph& g, int k) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

std::vector<int> automorphism_orbits(const SmallGraph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (root(u) == root(v)) continue;
      MapSearch search(g, g, MapSearch::Mode::isomorphism);
      search.pin(u, v);
      if (!search.find()) continue;
      const auto& sigma = search.image();
      for (int x = 0; x < n; ++x) unite(x, sigma[static_cast<std::size_t>(x)]);
    }
  }
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rep[static_cast<std::size_t>(v)] = root(v);
  return rep;
}

bool is_vertex_transitive(const SmallGraph& g) {
  const auto rep = automorphism_orbits(g);
  return std::all_of(rep.begin(), rep.end(), [](int r) { return r == 0; });
}

std::uint64_t automorphism_count(const SmallGraph& g) {
  return MapSearch(g, g, MapSearch::Mode::isomorphism).count();
}

bool contains_subgraph(const SmallGraph& host, const SmallGraph& pattern) {
  if (pattern.order() > host.order()) return false;
  return MapSearch(pattern, host, MapSearch::Mode::subgraph).find();
}

bool contains_induced(const SmallGraph& host, const SmallGraph& pattern) {
  if (pattern.order() > host.order()) return false;
  return MapSearch(pattern, host, MapSearch::Mode::induced).find();
}

VertexMask dominating_vertices(const SmallGraph& g, VertexMask subset) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!(subset & bit(v))) continue;
    const VertexMask others = subset & static_cast<VertexMask>(~bit(v));
    if ((g.row(v) & others) == others) out |= bit(v);
  }
  return out;
}

int max_dominating_in_induced(const SmallGraph& g, int m) {
  if (m < 0 || m > g.order()) {
    throw Error(Errc::invalid_argument, "subset size " + std::to_string(m) +
                                            " outside 0.." + std::to_string(g.order()));
  }
  int best = 0;
  for (unsigned s = 0; s <= g.all(); ++s) {
    if (std::popcount(s) != m) continue;
    best = std::max(best, std::popcount(static_cast<unsigned>(
                              dominating_vertices(g, static_cast<VertexMask>(s)))));
  }
  return best;
}

bool palfy_condition(const SmallGraph& g) {
  const SmallGraph c = g.complement();
  for (int u = 0; u < c.order(); ++u) {
    for (int v = u + 1; v < c.order(); ++v) {
      if (c.adjacent(u, v) && (c.row(u) & c.row(v))) return false;
    }
  }
  return true;
}

std::string to_edge_string(const SmallGraph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " [";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << '-' << v;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace degraph
