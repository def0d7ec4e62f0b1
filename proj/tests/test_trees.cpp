#include <doctest.h>

#include <set>

#include "conex/canonical.hpp"
#include "conex/graph6.hpp"
#include "conex/tree.hpp"
#include "oracles.hpp"

using namespace conex;

TEST_CASE("tree construction validates") {
  CHECK_THROWS_AS(Tree(Graph::cycle(3)), std::invalid_argument);
  CHECK_THROWS_AS(Tree(disjoint_union(Graph::path(2), Graph::path(2))), std::invalid_argument);
  CHECK(Tree(Graph(1)).order() == 1);
}

TEST_CASE("barycenter examples") {
  CHECK(barycenter(Tree(Graph::path(5))) == std::vector<int>{2});
  CHECK(barycenter(Tree(Graph::path(4))) == std::vector<int>{1, 2});
  CHECK(barycenter(broom(8, 4)) == std::vector<int>{3});  // the degree-5 vertex
  CHECK(barycenter(Tree(Graph(1))) == std::vector<int>{0});
}

TEST_CASE("broom") {
  CHECK(broom(6, 5).graph() == Graph::path(6));
  CHECK(broom(2, 1).graph() == Graph::path(2));

  // B(5,2) is the star K_{1,4}
  Graph b52 = broom(5, 2).graph();
  CHECK(canon_code(b52) == canon_code(Graph::star(5)));

  Graph b84 = broom(8, 4).graph();
  CHECK(b84.degree_sequence() == std::vector<int>{5, 2, 2, 1, 1, 1, 1, 1});

  CHECK_THROWS_AS(broom(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(broom(3, 1), std::invalid_argument);
}

TEST_CASE("broom order and diameter across the parameter box") {
  for (int k = 2; k <= 12; ++k)
    for (int d = 1; d + 1 <= k; ++d) {
      if (k > d + 1 && d < 2) continue;  // rejected by construction
      Tree b = broom(k, d);
      CHECK(b.order() == k);
      CHECK(tree_diameter(b) == d);
    }
}

TEST_CASE("as_spider") {
  auto star = as_spider(Tree(Graph::star(6)));
  REQUIRE(star.has_value());
  CHECK(star->center == 0);
  CHECK(star->legs == std::vector<int>{1, 1, 1, 1, 1});

  auto b = as_spider(broom(8, 4));
  REQUIRE(b.has_value());
  CHECK(b->center == 3);
  CHECK(b->legs == std::vector<int>{1, 1, 1, 1, 3});

  CHECK_FALSE(as_spider(binary_tree(2)).has_value());

  auto p = as_spider(Tree(Graph::path(5)));
  REQUIRE(p.has_value());
  CHECK(p->center == 0);  // lowest-index endpoint
  CHECK(p->legs == std::vector<int>{4});

  auto single = as_spider(Tree(Graph(1)));
  REQUIRE(single.has_value());
  CHECK(single->legs.empty());
}

TEST_CASE("binary_tree") {
  CHECK(canon_code(binary_tree(1).graph()) == canon_code(Graph::path(3)));
  Tree t = binary_tree(2);
  CHECK(t.order() == 15);
  CHECK(t.graph().max_degree() == 3);
  auto b = t.graph().bipartition();
  REQUIRE(b.has_value());
  CHECK(std::min(b->first.size(), b->second.size()) == 5);
  CHECK_THROWS_AS(binary_tree(0), std::invalid_argument);
}

TEST_CASE("max_bare_path") {
  CHECK(max_bare_path(Tree(Graph::path(6))) == 5);
  CHECK(max_bare_path(binary_tree(2)) == 2);
  CHECK(max_bare_path(Tree(Graph::star(5))) == 1);
  CHECK_THROWS_AS(max_bare_path(Tree(Graph(1))), std::invalid_argument);
}

TEST_CASE("max_bare_path agrees with the definitional oracle") {
  for (int k = 2; k <= 10; ++k)
    for (const Tree& t : enumerate_trees(k))
      CHECK(max_bare_path(t) == oracles::naive_max_bare_path(t));
}

TEST_CASE("enumerate_trees counts") {
  const long long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int k = 1; k <= 14; ++k) CHECK(static_cast<long long>(enumerate_trees(k).size()) == expected[k - 1]);
  CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(15), std::invalid_argument);
}

TEST_CASE("enumerated trees are pairwise non-isomorphic") {
  for (int k = 2; k <= 10; ++k) {
    std::set<Code128> codes;
    for (const Tree& t : enumerate_trees(k)) codes.insert(canon_code(t.graph()));
    CHECK(codes.size() == enumerate_trees(k).size());
  }
}

TEST_CASE("barycenter properties over all small trees") {
  for (int k = 1; k <= 10; ++k)
    for (const Tree& t : enumerate_trees(k)) {
      std::vector<int> b = barycenter(t);
      REQUIRE(b.size() >= 1);
      REQUIRE(b.size() <= 2);
      if (b.size() == 2) CHECK(t.graph().has_edge(b[0], b[1]));
      for (int v : b)
        for (auto [p, q] : t.graph().edge_list()) {
          Bitset side = edge_side(t.graph(), p, q);
          int sz = side.test(v) ? side.count() : k - side.count();
          CHECK(2 * sz >= k);  // component of the barycenter has >= ceil(k/2) vertices
        }
    }
}
