#include <doctest.h>

#include "conex/cycles.hpp"
#include "conex/embedding.hpp"
#include "conex/enumerate.hpp"
#include "conex/families.hpp"
#include "conex/tree.hpp"
#include "oracles.hpp"

using namespace conex;

TEST_CASE("circumference agrees with the all-permutations oracle") {
  for (int n = 1; n <= 7; ++n)
    for_each_graph(n, false, [&](const SmallGraph& sg, const CanonResult&) {
      Graph g = to_graph(sg);
      CHECK(circumference(g) == oracles::naive_circumference(g));
    });
}

TEST_CASE("circumference examples") {
  CHECK(circumference(f1(9, 5)) == 4);
  CHECK(circumference(Graph::path(6)) == 0);
  CHECK(circumference(binary_tree(2).graph()) == 0);

  int c = circumference(g_family(20, 8, 3));
  CHECK(c <= 8);  // no path on 9 vertices, hence no such cycle
  CHECK(c == 7);  // alternating independent-set/K_s insertions plus the clique
}

TEST_CASE("has_cycle_at_least") {
  CHECK(has_cycle_at_least(Graph::cycle(7), 7));
  CHECK_FALSE(has_cycle_at_least(Graph::cycle(7), 8));
  CHECK_THROWS_AS(has_cycle_at_least(Graph::cycle(7), 2), std::invalid_argument);
  CHECK_FALSE(has_cycle_at_least(union_cliques(12, 5), 5));
  CHECK(has_cycle_at_least(union_cliques(12, 5), 4));
}

TEST_CASE("has_cycle_exact") {
  CHECK(has_cycle_exact(Graph::complete(4), 3));
  CHECK(has_cycle_exact(Graph::complete(4), 4));
  CHECK_FALSE(has_cycle_exact(Graph::cycle(5), 4));
  CHECK(has_cycle_exact(Graph::cycle(5), 5));
  CHECK_FALSE(has_cycle_exact(complete_bipartite(2, 3), 3));
  CHECK(has_cycle_exact(complete_bipartite(2, 3), 4));
}

TEST_CASE("longest_path examples") {
  CHECK(longest_path(Graph::path(7)) == 7);
  CHECK(longest_path(union_cliques(12, 5)) == 4);
  CHECK(longest_path(Graph(1)) == 1);
}

TEST_CASE("longest path of the g family equals d") {
  for (int d : {5, 7, 9})
    for (int n : {20, 40, 60}) {
      Graph g = g_family(n, d, (d - 1) / 2);
      CHECK(longest_path(g) == d);
      CHECK(is_tree_free(g, Tree(Graph::path(d + 1))));
    }
}
