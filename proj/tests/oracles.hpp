#pragma once

// Naive reference implementations used only as test oracles. Each is written
// from the definition with no shared machinery with the library path it
// checks.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "conex/graph.hpp"
#include "conex/tree.hpp"

namespace oracles {

/// Tree containment by trying all injections host^pattern.
inline bool naive_contains_tree(const conex::Graph& host, const conex::Tree& pattern) {
  int n = host.order(), k = pattern.order();
  if (k > n) return false;
  auto pedges = pattern.graph().edge_list();
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> go = [&](int p) -> bool {
    if (p == k) return true;
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (auto [a, b] : pedges) {
        if (a == p && map[b] >= 0 && !host.has_edge(h, map[b])) ok = false;
        if (b == p && map[a] >= 0 && !host.has_edge(map[a], h)) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      used[h] = 1;
      map[p] = h;
      if (go(p + 1)) return true;
      used[h] = 0;
      map[p] = -1;
    }
    return false;
  };
  return go(0);
}

/// Longest cycle by trying every vertex subset in every cyclic order.
inline int naive_circumference(const conex::Graph& g) {
  int n = g.order();
  int best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int sz = __builtin_popcount(static_cast<unsigned>(mask));
    if (sz < 3 || sz <= best) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    // fix verts[0] first; permute the rest
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end());
    do {
      bool ok = g.has_edge(verts[0], rest.front()) && g.has_edge(verts[0], rest.back());
      for (size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = g.has_edge(rest[i], rest[i + 1]);
      if (ok) {
        best = sz;
        break;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return best;
}

/// Longest bare path from the definition: every vertex pair, walk the tree
/// path, require internal degrees exactly 2.
inline int naive_max_bare_path(const conex::Tree& t) {
  const conex::Graph& g = t.graph();
  int n = g.order();
  // parent trees from every root via BFS
  int best = 0;
  for (int a = 0; a < n; ++a) {
    std::vector<int> par(n, -2);
    std::vector<int> queue{a};
    par[a] = -1;
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      g.row(v).for_each([&](int u) {
        if (par[u] == -2) {
          par[u] = v;
          queue.push_back(u);
        }
      });
    }
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      std::vector<int> path{b};
      for (int v = b; v != a; v = par[v]) path.push_back(par[v]);
      bool bare = true;
      for (size_t i = 1; i + 1 < path.size(); ++i)
        if (g.degree(path[i]) != 2) bare = false;
      if (bare) best = std::max(best, static_cast<int>(path.size()) - 1);
    }
  }
  return best;
}

/// All automorphism orbits by trying every permutation.
inline std::vector<int> naive_orbits(const conex::Graph& g) {
  int n = g.order();
  std::vector<int> perm(n), orbit(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::iota(orbit.begin(), orbit.end(), 0);
  std::function<int(int)> root = [&](int x) { return orbit[x] == x ? x : orbit[x] = root(orbit[x]); };
  do {
    bool aut = true;
    for (auto [u, v] : g.edge_list())
      if (!g.has_edge(perm[u], perm[v])) {
        aut = false;
        break;
      }
    // a bijection mapping edges to edges is an automorphism
    if (aut) {
      for (int v = 0; v < n; ++v) {
        int a = root(v), b = root(perm[v]);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = root(v);
  return out;
}

/// Labeled-exhaustive isomorphism test (n <= 8).
inline bool naive_isomorphic(const conex::Graph& a, const conex::Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edge_list())
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracles
