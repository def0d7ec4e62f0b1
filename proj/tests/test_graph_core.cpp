#include <doctest.h>

#include <random>

#include "conex/enumerate.hpp"
#include "conex/families.hpp"
#include "conex/graph.hpp"
#include "conex/graph6.hpp"
#include "conex/tree.hpp"

using namespace conex;

TEST_CASE("edge counts") {
  CHECK(Graph::complete(4).edge_count() == 6);
  CHECK(Graph::empty_graph(5).edge_count() == 0);
  CHECK(g_family(10, 6, 2).edge_count() == 18);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  // duplicate edges collapse
  CHECK(Graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
}

TEST_CASE("is_connected") {
  CHECK(Graph::complete(4).is_connected());
  CHECK_FALSE(disjoint_union(Graph::complete(3), Graph::complete(3)).is_connected());
  CHECK(s_family(50, 14, 17).is_connected());
  CHECK_THROWS_AS(Graph(0).is_connected(), std::invalid_argument);
}

TEST_CASE("blocks") {
  // two triangles sharing one vertex
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  auto blks = g.blocks();
  REQUIRE(blks.size() == 2);
  CHECK(blks[0].size() == 3);
  CHECK(blks[1].size() == 3);

  auto f = f1(9, 5).blocks();
  REQUIRE(f.size() == 3);
  CHECK(f[0].size() == 4);
  CHECK(f[1].size() == 4);
  CHECK(f[2].size() == 3);

  auto p = Graph::path(5).blocks();
  CHECK(p.size() == 4);
  for (const auto& b : p) CHECK(b.size() == 2);

  CHECK_THROWS_AS(disjoint_union(Graph::complete(3), Graph::complete(3)).blocks(),
                  std::invalid_argument);
  CHECK(Graph(1).blocks().empty());
}

TEST_CASE("block identity against an independent cut-vertex computation") {
  // sum over blocks of (|B|-1) == n + sum_v (c(v)-1) - #blocks, where c(v) is
  // the number of components of G - v, computed by plain DFS.
  auto components_without = [](const Graph& g, int v) {
    int n = g.order();
    std::vector<char> seen(n, 0);
    seen[v] = 1;
    int comps = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++comps;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        g.row(x).for_each([&](int y) {
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        });
      }
    }
    return comps;
  };
  for (int n = 1; n <= 8; ++n) {
    long long checked = 0;
    for_each_graph(n, /*connected_only=*/true, [&](const SmallGraph& sg, const CanonResult&) {
      Graph g = to_graph(sg);
      auto blks = g.blocks();
      long long lhs = 0;
      for (const auto& b : blks) lhs += static_cast<long long>(b.size()) - 1;
      long long cut_term = 0;
      for (int v = 0; v < n; ++v) cut_term += components_without(g, v) - 1;
      CHECK(lhs == n + cut_term - static_cast<long long>(blks.size()));
      ++checked;
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("bipartition") {
  CHECK_FALSE(Graph::cycle(5).bipartition().has_value());

  auto b = binary_tree(2).graph().bipartition();
  REQUIRE(b.has_value());
  CHECK(std::min(b->first.size(), b->second.size()) == 5);
  CHECK(std::max(b->first.size(), b->second.size()) == 10);

  auto kb = complete_bipartite(3, 7).bipartition();
  REQUIRE(kb.has_value());
  CHECK(std::min(kb->first.size(), kb->second.size()) == 3);

  // per component, the lowest-index vertex goes to class A
  Graph two = disjoint_union(Graph::path(2), Graph::path(3));
  auto t = two.bipartition();
  REQUIRE(t.has_value());
  CHECK(std::count(t->first.begin(), t->first.end(), 0) == 1);
  CHECK(std::count(t->first.begin(), t->first.end(), 2) == 1);
}

TEST_CASE("composition operators") {
  CHECK(join(Graph::complete(1), Graph::empty_graph(3)) == Graph::star(4));
  Graph g = join(Graph::complete(2), disjoint_union(Graph::complete(2), Graph::empty_graph(5)));
  CHECK(g.edge_count() == 16);
  Graph du = disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK(du.order() == 6);
  CHECK(du.edge_count() == 6);
  CHECK_FALSE(du.is_connected());
}

TEST_CASE("join edge count on random pairs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 100; ++trial) {
    int na = 1 + static_cast<int>(rng() % 7), nb = 1 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> ea, eb;
    for (int u = 0; u < na; ++u)
      for (int v = u + 1; v < na; ++v)
        if (rng() % 2) ea.emplace_back(u, v);
    for (int u = 0; u < nb; ++u)
      for (int v = u + 1; v < nb; ++v)
        if (rng() % 2) eb.emplace_back(u, v);
    Graph a(na, ea), b(nb, eb);
    CHECK(join(a, b).edge_count() ==
          a.edge_count() + b.edge_count() + static_cast<long long>(na) * nb);
  }
}

TEST_CASE("graph6 basics") {
  CHECK(graph6_encode(Graph::complete(3)) == "Bw");

  Graph star5 = graph6_decode("D?{");
  CHECK(star5.order() == 5);
  CHECK(star5.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(star5.has_edge(v, 4));
  CHECK(graph6_encode(star5) == "D?{");

  CHECK_THROWS_AS(graph6_decode(""), G6ParseError);
  CHECK_THROWS_AS(graph6_decode("Bw@"), G6ParseError);  // trailing bytes
  CHECK_THROWS_AS(graph6_decode("B"), G6ParseError);    // body too short
  CHECK_THROWS_AS(graph6_decode("A\x07"), G6ParseError);  // char out of range

  // medium-size order header
  Graph p100 = Graph::path(100);
  CHECK(graph6_decode(graph6_encode(p100)) == p100);
}

TEST_CASE("graph6 round trip on enumerated graphs") {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, false, [&](const SmallGraph& sg, const CanonResult&) {
      Graph g = to_graph(sg);
      CHECK(graph6_decode(graph6_encode(g)) == g);
    });
}

TEST_CASE("graph6 multi-line decode") {
  auto gs = graph6_decode_lines("Bw\nD?{\n\n");
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].order() == 3);
  CHECK(gs[1].order() == 5);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(Graph::path(3));
  CHECK(dot.find("graph G {") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}
