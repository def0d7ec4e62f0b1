#include <doctest.h>

#include "conex/embedding.hpp"
#include "conex/enumerate.hpp"
#include "conex/families.hpp"
#include "conex/graph6.hpp"
#include "conex/tree.hpp"
#include "oracles.hpp"

using namespace conex;

TEST_CASE("agrees with the all-injections oracle on small hosts") {
  std::vector<Tree> patterns;
  for (int k = 1; k <= 6; ++k)
    for (const Tree& t : enumerate_trees(k)) patterns.push_back(t);
  for (int n = 1; n <= 7; ++n) {
    for_each_graph(n, false, [&](const SmallGraph& sg, const CanonResult&) {
      Graph host = to_graph(sg);
      for (const Tree& t : patterns) {
        EmbedResult r = find_tree_embedding(host, t);
        bool expected = oracles::naive_contains_tree(host, t);
        CHECK((r.outcome == SearchOutcome::found) == expected);
        if (r.outcome == SearchOutcome::found) CHECK(embedding_valid(host, t, *r.witness));
      }
    });
  }
}

TEST_CASE("too-small hosts") {
  for (int k = 2; k <= 6; ++k)
    for (const Tree& t : enumerate_trees(k))
      CHECK(is_tree_free(Graph::complete(k - 1), t));
}

TEST_CASE("long-path freeness of the g family") {
  Graph host = g_family(30, 7, 3);
  CHECK(is_tree_free(host, Tree(Graph::path(8))));
  CHECK_FALSE(is_tree_free(host, Tree(Graph::path(7))));
}

TEST_CASE("s family avoids degree-2-barycenter trees (k = 12, n = 60)") {
  Graph host = s_family(60, 5, 5);
  CHECK(is_tree_free(host, Tree(Graph::path(12))));
  // a non-path tree with a degree-2 barycenter: subdivided star on 12 vertices
  std::vector<std::pair<int, int>> edges;
  for (int leg = 0; leg < 3; ++leg) {
    int a = 1 + 2 * leg, b = 2 + 2 * leg;
    edges.emplace_back(0, a);
    edges.emplace_back(a, b);
  }
  // extend one leg to push the barycenter onto a degree-2 vertex
  edges.emplace_back(2, 7);
  edges.emplace_back(7, 8);
  edges.emplace_back(8, 9);
  edges.emplace_back(9, 10);
  edges.emplace_back(10, 11);
  Tree t(Graph(12, edges));
  bool has_deg2_barycenter = false;
  for (int v : barycenter(t))
    if (t.graph().degree(v) == 2) has_deg2_barycenter = true;
  REQUIRE(has_deg2_barycenter);
  CHECK(is_tree_free(host, t));
}

TEST_CASE("spec freeness examples") {
  for (const Tree& t : enumerate_trees(5)) CHECK(is_tree_free(union_cliques(12, 5), t));
  CHECK_FALSE(is_tree_free(Graph::complete(6), Tree(Graph::star(5))));
  CHECK(is_tree_free(almost_regular(40, 4), broom(10, 6)));
}

TEST_CASE("budgeted search reports exhaustion") {
  Graph host = g_family(60, 9, 4);
  Tree pattern(Graph::path(10));
  EmbedOptions opts;
  opts.max_nodes = 3;
  EmbedResult r = find_tree_embedding(host, pattern, opts);
  CHECK(r.outcome == SearchOutcome::budget_exceeded);
  // unbudgeted search settles it
  CHECK(find_tree_embedding(host, pattern).outcome == SearchOutcome::absent);
}

TEST_CASE("witness is deterministic") {
  Graph host = g_family(12, 6, 2);
  Tree pattern(Graph::path(5));
  EmbedResult a = find_tree_embedding(host, pattern);
  EmbedResult b = find_tree_embedding(host, pattern);
  REQUIRE(a.outcome == SearchOutcome::found);
  CHECK(a.witness->map == b.witness->map);
  CHECK(a.nodes == b.nodes);
}
