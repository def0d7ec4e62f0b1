#include "conex/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace conex {

namespace {

// Induced subgraph with bitset rows over local indices.
struct Local {
  int b = 0;
  std::vector<Bitset> rows;
};

Local induced_local(const Graph& g, const std::vector<int>& verts) {
  Local L;
  L.b = static_cast<int>(verts.size());
  L.rows.assign(L.b, Bitset(L.b));
  for (int i = 0; i < L.b; ++i)
    for (int j = i + 1; j < L.b; ++j)
      if (g.has_edge(verts[i], verts[j])) {
        L.rows[i].set(j);
        L.rows[j].set(i);
      }
  return L;
}

Graph induced_graph(const Graph& g, const std::vector<int>& verts) {
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) edges.emplace_back(i, j);
  return Graph(static_cast<int>(verts.size()), edges);
}

// Unused vertices of `avail` reachable from head through unused vertices.
Bitset reach_from(const Local& L, int head, const Bitset& avail) {
  Bitset reach(L.b);
  Bitset frontier = L.rows[head];
  frontier &= avail;
  Bitset remaining = avail;
  while (frontier.any()) {
    reach |= frontier;
    remaining.subtract(frontier);
    Bitset next(L.b);
    frontier.for_each([&](int v) { next |= L.rows[v]; });
    next &= remaining;
    frontier = next;
  }
  return reach;
}

// Longest cycle through `start` using only vertices > start; with stop_at > 0
// the search aborts once a cycle of that length is known.
struct CycleSearch {
  const Local& L;
  int start;
  int stop_at;  // 0 = exact maximum
  int best = 0;
  Bitset used;
  Bitset allowed;

  CycleSearch(const Local& l, int s, int stop, int seed_best)
      : L(l), start(s), stop_at(stop), best(seed_best), used(l.b), allowed(l.b) {
    used.set(s);
    for (int v = s + 1; v < l.b; ++v) allowed.set(v);
  }

  bool dfs(int head, int len) {
    if (len >= 3 && L.rows[head].test(start)) {
      best = std::max(best, len);
      if (stop_at && best >= stop_at) return true;
    }
    Bitset avail = allowed;
    avail.subtract(used);
    Bitset reach = reach_from(L, head, avail);
    int bound = len + reach.count();
    if (stop_at ? bound < stop_at : bound <= best) return false;
    if (!L.rows[start].intersects(reach)) return false;  // cannot close anymore

    std::vector<int> failed;
    bool aborted = false;
    Bitset cands = L.rows[head];
    cands &= avail;
    cands.for_each([&](int c) {
      if (aborted) return;
      for (int f : failed)
        if (Bitset::twin_rows(L.rows[f], L.rows[c], f, c)) {
          failed.push_back(c);
          return;
        }
      used.set(c);
      if (dfs(c, len + 1)) {
        aborted = true;
        return;
      }
      used.reset(c);
      failed.push_back(c);
    });
    return aborted;
  }
};

int longest_cycle_local(const Local& L, int stop_at) {
  int best = 0;
  for (int s = 0; s + 2 < L.b; ++s) {
    if (stop_at && best >= stop_at) break;
    bool twin_start = false;
    for (int t = 0; t < s && !twin_start; ++t)
      twin_start = Bitset::twin_rows(L.rows[t], L.rows[s], t, s);
    if (twin_start) continue;
    CycleSearch cs(L, s, stop_at, best);
    cs.dfs(s, 1);
    best = std::max(best, cs.best);
  }
  return best;
}

// Paths from `start` of length exactly k closing back to start.
struct ExactCycleSearch {
  const Local& L;
  int start;
  int k;
  Bitset used;
  Bitset allowed;

  ExactCycleSearch(const Local& l, int s, int kk) : L(l), start(s), k(kk), used(l.b), allowed(l.b) {
    used.set(s);
    for (int v = s + 1; v < l.b; ++v) allowed.set(v);
  }

  bool dfs(int head, int len) {
    if (len == k) return L.rows[head].test(start);
    Bitset avail = allowed;
    avail.subtract(used);
    Bitset reach = reach_from(L, head, avail);
    if (len + reach.count() < k) return false;
    if (!L.rows[start].intersects(reach)) return false;

    std::vector<int> failed;
    bool found = false;
    Bitset cands = L.rows[head];
    cands &= avail;
    cands.for_each([&](int c) {
      if (found) return;
      for (int f : failed)
        if (Bitset::twin_rows(L.rows[f], L.rows[c], f, c)) {
          failed.push_back(c);
          return;
        }
      used.set(c);
      if (dfs(c, len + 1)) {
        found = true;
        return;
      }
      used.reset(c);
      failed.push_back(c);
    });
    return found;
  }
};

struct PathSearch {
  const Local& L;
  int best = 1;
  Bitset used;

  explicit PathSearch(const Local& l) : L(l), used(l.b) {}

  void dfs(int head, int len) {
    best = std::max(best, len);
    Bitset avail(L.b);
    for (int v = 0; v < L.b; ++v) avail.set(v);
    avail.subtract(used);
    Bitset reach = reach_from(L, head, avail);
    if (len + reach.count() <= best) return;

    std::vector<int> failed;
    Bitset cands = L.rows[head];
    cands &= avail;
    cands.for_each([&](int c) {
      for (int f : failed)
        if (Bitset::twin_rows(L.rows[f], L.rows[c], f, c)) {
          failed.push_back(c);
          return;
        }
      used.set(c);
      dfs(c, len + 1);
      used.reset(c);
      failed.push_back(c);
    });
  }
};

}  // namespace

int circumference(const Graph& g) {
  int best = 0;
  for (const auto& comp : components(g)) {
    if (static_cast<int>(comp.size()) < 3) continue;
    Graph cg = induced_graph(g, comp);
    for (const auto& blk : cg.blocks()) {
      if (static_cast<int>(blk.size()) < 3 || static_cast<int>(blk.size()) <= best) continue;
      Local L = induced_local(cg, blk);
      best = std::max(best, longest_cycle_local(L, 0));
    }
  }
  return best;
}

bool has_cycle_at_least(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("has_cycle_at_least requires k >= 3");
  for (const auto& comp : components(g)) {
    if (static_cast<int>(comp.size()) < k) continue;
    Graph cg = induced_graph(g, comp);
    for (const auto& blk : cg.blocks()) {
      if (static_cast<int>(blk.size()) < k) continue;
      Local L = induced_local(cg, blk);
      if (longest_cycle_local(L, k) >= k) return true;
    }
  }
  return false;
}

bool has_cycle_exact(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("has_cycle_exact requires k >= 3");
  for (const auto& comp : components(g)) {
    if (static_cast<int>(comp.size()) < k) continue;
    Graph cg = induced_graph(g, comp);
    for (const auto& blk : cg.blocks()) {
      if (static_cast<int>(blk.size()) < k) continue;
      Local L = induced_local(cg, blk);
      for (int s = 0; s + k <= L.b; ++s) {
        bool twin_start = false;
        for (int t = 0; t < s && !twin_start; ++t)
          twin_start = Bitset::twin_rows(L.rows[t], L.rows[s], t, s);
        if (twin_start) continue;
        ExactCycleSearch es(L, s, k);
        if (es.dfs(s, 1)) return true;
      }
    }
  }
  return false;
}

int longest_path(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("longest_path requires order >= 1");
  int best = 1;
  for (const auto& comp : components(g)) {
    if (static_cast<int>(comp.size()) <= best) continue;
    Local L = induced_local(g, comp);
    PathSearch ps(L);
    ps.best = best;
    for (int s = 0; s < L.b; ++s) {
      bool twin_start = false;
      for (int t = 0; t < s && !twin_start; ++t)
        twin_start = Bitset::twin_rows(L.rows[t], L.rows[s], t, s);
      if (twin_start) continue;
      ps.used = Bitset(L.b);
      ps.used.set(s);
      ps.dfs(s, 1);
    }
    best = std::max(best, ps.best);
  }
  return best;
}

}  // namespace conex
