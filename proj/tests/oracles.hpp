#pragma once
// Slow reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

using Adjacency = std::vector<std::vector<bool>>;

// Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...; first pair is
// the most significant bit.
inline std::uint64_t pack(const Adjacency& a) {
  const int n = static_cast<int>(a.size());
  const int m = n * (n - 1) / 2;
  std::uint64_t code = 0;
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (a[i][j]) code |= std::uint64_t{1} << (m - 1 - t);
  return code;
}

inline Adjacency permute(const Adjacency& a, const std::vector<int>& perm) {
  const auto n = a.size();
  Adjacency b(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = a[perm[i]][perm[j]];
  return b;
}

// Every labeled k-regular graph on n vertices, decided edge by edge over the
// pairs in row order with a plain degree bound.
template <class Visit>
void labeled_regular(int n, int k, Visit&& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Adjacency a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == pairs.size()) {
      if (std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; })) visit(a);
      return;
    }
    const auto [u, v] = pairs[t];
    // Once every pair at u is decided its degree is final.
    const bool last_for_u = v == n - 1;
    if (deg[u] < k && deg[v] < k) {
      a[u][v] = a[v][u] = true;
      ++deg[u], ++deg[v];
      if (!last_for_u || deg[u] == k) self(self, t + 1);
      a[u][v] = a[v][u] = false;
      --deg[u], --deg[v];
    }
    if (!last_for_u || deg[u] == k) self(self, t + 1);
  };
  rec(rec, 0);
}

// Isomorphism classes of k-regular graphs on n vertices as orbit-minimal codes.
// Each unseen labeled graph contributes its whole orbit under S_n to `seen`.
inline std::set<std::uint64_t> regular_classes(int n, int k) {
  std::set<std::uint64_t> classes;
  if (n == 0) {
    if (k == 0) classes.insert(0);
    return classes;
  }
  if ((n * k) % 2 != 0) return classes;
  std::unordered_set<std::uint64_t> seen;
  std::vector<int> perm(static_cast<std::size_t>(n));
  labeled_regular(n, k, [&](const Adjacency& a) {
    if (seen.count(pack(a))) return;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      const auto code = pack(permute(a, perm));
      seen.insert(code);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  });
  return classes;
}

// Every three vertices span at least one edge.
inline bool palfy_triples(const Adjacency& a) {
  const auto n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (!a[x][y] && !a[x][z] && !a[y][z]) return false;
  return true;
}

}  // namespace oracle
