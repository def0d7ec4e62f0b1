#include "conex/enumerate.hpp"

#include <bit>

#include "conex/graph6.hpp"

namespace conex {

int SmallGraph::edges() const {
  int c = 0;
  for (int v = 0; v < n; ++v) c += std::popcount(static_cast<unsigned>(row[v]));
  return c / 2;
}

bool SmallGraph::connected() const {
  if (n == 0) return false;
  uint16_t seen = 1, frontier = 1;
  while (frontier) {
    uint16_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= row[v];
    frontier = next & static_cast<uint16_t>(~seen);
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

Graph to_graph(const SmallGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.test(u, v)) edges.emplace_back(u, v);
  return Graph(g.n, edges);
}

std::string small_canonical_g6(const SmallGraph& g, const CanonResult& c) {
  std::array<int, kCanonMaxN> pos{};
  for (int i = 0; i < g.n; ++i) pos[c.order[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.test(u, v)) edges.emplace_back(pos[u], pos[v]);
  return graph6_encode(Graph(g.n, edges));
}

namespace {

using Visit = std::function<void(const SmallGraph&, const CanonResult&)>;
using Prune = std::function<bool(const SmallGraph&)>;

// Mark the orbit of subset S under the automorphism generators of the parent.
void mark_subset_orbit(uint32_t S, int m, const std::vector<Perm16>& gens,
                       std::vector<uint8_t>& visited) {
  std::vector<uint32_t> stack{S};
  visited[S] = 1;
  while (!stack.empty()) {
    uint32_t cur = stack.back();
    stack.pop_back();
    for (const Perm16& g : gens) {
      uint32_t img = 0;
      for (int v = 0; v < m; ++v)
        if (cur >> v & 1) img |= 1u << g[v];
      if (!visited[img]) {
        visited[img] = 1;
        stack.push_back(img);
      }
    }
  }
}

void extend(const SmallGraph& g, const CanonResult& cg, int n_target, const Visit& visit,
            const Prune& prune) {
  if (g.n == n_target) {
    visit(g, cg);
    return;
  }
  int m = g.n;
  std::vector<uint8_t> visited(1u << m, 0);
  for (uint32_t S = 0; S < (1u << m); ++S) {
    if (visited[S]) continue;
    mark_subset_orbit(S, m, cg.generators, visited);
    SmallGraph h = g;
    h.n = m + 1;
    for (int u = 0; u < m; ++u)
      if (S >> u & 1) h.add(u, m);
    if (prune && prune(h)) continue;
    CanonResult ch = canon16(h.row.data(), h.n);
    if (ch.orbit[m] != ch.orbit[ch.order[h.n - 1]]) continue;  // not the canonical parent
    extend(h, ch, n_target, visit, prune);
  }
}

void check_cap(int n, bool force) {
  if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  int cap = force ? kEnumForceCap : kEnumDefaultCap;
  if (n > cap)
    throw CapExceeded("enumeration cap exceeded: n = " + std::to_string(n) +
                      (force ? " > 10" : " > 9 (use force for 10)"));
}

}  // namespace

void for_each_graph(int n, bool connected_only, const Visit& visit, const Prune& prune,
                    bool force) {
  check_cap(n, force);
  SmallGraph root;
  root.n = 1;
  if (prune && prune(root)) return;
  CanonResult cr = canon16(root.row.data(), 1);
  Visit wrapped = visit;
  if (connected_only)
    wrapped = [&visit](const SmallGraph& g, const CanonResult& c) {
      if (g.connected()) visit(g, c);
    };
  extend(root, cr, n, wrapped, prune);
}

long long count_graphs(int n, bool connected_only, bool force) {
  long long count = 0;
  for_each_graph(
      n, connected_only, [&](const SmallGraph&, const CanonResult&) { ++count; }, nullptr, force);
  return count;
}

namespace detail {

std::vector<Seed> enumeration_seeds(int level, const Prune& prune) {
  std::vector<Seed> seeds;
  SmallGraph root;
  root.n = 1;
  if (prune && prune(root)) return seeds;
  CanonResult cr = canon16(root.row.data(), 1);
  extend(root, cr, level,
         [&](const SmallGraph& g, const CanonResult& c) { seeds.push_back({g, c}); }, prune);
  return seeds;
}

void extend_from(const Seed& seed, int n_target, const Visit& visit, const Prune& prune) {
  extend(seed.g, seed.canon, n_target, visit, prune);
}

}  // namespace detail

}  // namespace conex
