#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// shares code with the library's fast paths.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Arrangement = std::vector<int>;  // 1-based one-line notation
using EdgeList = std::vector<std::pair<int, int>>;

inline Arrangement identity(int n) {
  Arrangement a(n);
  for (int i = 0; i < n; ++i) a[i] = i + 1;
  return a;
}

// Distances from the identity over the whole group, by plain BFS on
// arrangements with right multiplication (swap positions).
inline std::map<Arrangement, int> cayley_bfs(int n, const EdgeList& edges) {
  std::map<Arrangement, int> dist;
  std::queue<Arrangement> q;
  dist[identity(n)] = 0;
  q.push(identity(n));
  while (!q.empty()) {
    auto p = q.front();
    q.pop();
    for (auto [i, j] : edges) {
      auto r = p;
      std::swap(r[i - 1], r[j - 1]);
      if (dist.emplace(r, dist[p] + 1).second) q.push(r);
    }
  }
  return dist;
}

inline int cayley_diameter(int n, const EdgeList& edges) {
  int best = 0;
  for (const auto& [p, d] : cayley_bfs(n, edges)) best = std::max(best, d);
  return best;
}

// Floyd-Warshall hop distances, 1-based.
inline std::vector<std::vector<int>> tree_distances(int n, const EdgeList& edges) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
  for (int v = 1; v <= n; ++v) d[v][v] = 0;
  for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int cycles(const Arrangement& p) {
  // Union of i with p(i); count components.
  const int n = static_cast<int>(p.size());
  std::vector<int> comp(n + 1);
  for (int i = 1; i <= n; ++i) comp[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      const int m = std::min(comp[i], comp[p[i - 1]]);
      if (comp[i] != m || comp[p[i - 1]] != m) {
        comp[i] = comp[p[i - 1]] = m;
        changed = true;
      }
    }
  }
  return static_cast<int>(std::set<int>(comp.begin() + 1, comp.end()).size());
}

inline int inversions(const Arrangement& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

inline int f_value(const Arrangement& p, const std::vector<std::vector<int>>& d) {
  const int n = static_cast<int>(p.size());
  int s = 0;
  for (int i = 1; i <= n; ++i) s += d[i][p[i - 1]];
  return cycles(p) - n + s;
}

inline int f_bound(int n, const EdgeList& edges) {
  const auto d = tree_distances(n, edges);
  auto p = identity(n);
  int best = 0;
  do best = std::max(best, f_value(p, d));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Isomorphism-invariant key: lexicographically smallest sorted edge list
// over all relabelings. Exponential; fine for n <= 6.
inline EdgeList brute_canonical(int n, const EdgeList& edges) {
  auto relabel = identity(n);
  EdgeList best;
  do {
    EdgeList e;
    for (auto [a, b] : edges) {
      int x = relabel[a - 1], y = relabel[b - 1];
      e.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(e.begin(), e.end());
    if (best.empty() || e < best) best = e;
  } while (std::next_permutation(relabel.begin(), relabel.end()));
  return best;
}

// All labeled trees on {1..n}, decoded from every Pruefer sequence with a
// quadratic decoder.
inline std::vector<EdgeList> all_labeled_trees(int n) {
  std::vector<EdgeList> out;
  if (n == 2) return {{{1, 2}}};
  std::vector<int> seq(n - 2, 1);
  while (true) {
    std::vector<int> deg(n + 1, 1);
    for (int v : seq) ++deg[v];
    EdgeList e;
    for (int v : seq) {
      int leaf = 1;
      while (deg[leaf] != 1) ++leaf;
      e.emplace_back(std::min(leaf, v), std::max(leaf, v));
      --deg[leaf];
      --deg[v];
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) (a ? b : a) = v;
    e.emplace_back(a, b);
    out.push_back(e);
    int k = n - 3;
    while (k >= 0 && seq[k] == n) seq[k--] = 1;
    if (k < 0) break;
    ++seq[k];
  }
  return out;
}

}  // namespace oracle
