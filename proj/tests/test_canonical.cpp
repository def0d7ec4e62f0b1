#include <doctest.h>

#include <random>
#include <set>

#include "conex/canonical.hpp"
#include "conex/graph.hpp"
#include "oracles.hpp"

using namespace conex;

namespace {

Graph from_mask(int n, unsigned mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

}  // namespace

TEST_CASE("canon code counts isomorphism classes on all labeled graphs") {
  const long long expected[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    int pairs = n * (n - 1) / 2;
    std::set<Code128> codes;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) codes.insert(canon_code(from_mask(n, mask)));
    CHECK(static_cast<long long>(codes.size()) == expected[n - 1]);
  }
}

TEST_CASE("canon code is a permutation invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    Graph g(n, edges);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canon_code(g) == canon_code(permuted(g, perm)));
    CHECK(canonical_graph6(g) == canonical_graph6(permuted(g, perm)));
  }
}

TEST_CASE("distinct codes imply non-isomorphic (spot checks)") {
  // same degree sequence, different graphs: C_6 vs two triangles
  Graph c6 = Graph::cycle(6);
  Graph tt = disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK(canon_code(c6) != canon_code(tt));
  CHECK_FALSE(oracles::naive_isomorphic(c6, tt));
}

TEST_CASE("orbits match the brute-force automorphism orbits") {
  for (int n = 1; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = from_mask(n, mask);
      CanonResult c = canon16(g);
      std::vector<int> brute = oracles::naive_orbits(g);
      for (int v = 0; v < n; ++v) CHECK(static_cast<int>(c.orbit[v]) == brute[v]);
    }
  }
}

TEST_CASE("orbits on structured graphs") {
  // vertex-transitive graphs: a single orbit
  for (const Graph& g : {Graph::cycle(10), Graph::complete(10), petersen()}) {
    CanonResult c = canon16(g);
    for (int v = 0; v < g.order(); ++v) CHECK(c.orbit[v] == 0);
  }
  {
    CanonResult c = canon16(Graph::star(8));
    int hub_orbit = c.orbit[0];
    for (int v = 1; v < 8; ++v) CHECK(c.orbit[v] == c.orbit[1]);
    CHECK(hub_orbit != c.orbit[1]);
  }
  {
    // path: endpoints pair up, mirror-symmetric orbits
    CanonResult c = canon16(Graph::path(7));
    for (int v = 0; v < 7; ++v) CHECK(c.orbit[v] == c.orbit[6 - v]);
    CHECK(c.orbit[0] != c.orbit[1]);
  }
  {
    // K_{3,3}: one orbit per construction symmetry (vertex-transitive)
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CanonResult c = canon16(k33);
    for (int v = 0; v < 6; ++v) CHECK(c.orbit[v] == 0);
  }
}

TEST_CASE("generators are automorphisms") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    Graph g(n, edges);
    CanonResult c = canon16(g);
    for (const Perm16& p : c.generators)
      for (auto [u, v] : g.edge_list()) CHECK(g.has_edge(p[u], p[v]));
  }
}
